#ifndef WMSD_CLI_CONFIG_HPP_
#define WMSD_CLI_CONFIG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "wmsd/aggregate.hpp"
#include "wmsd/model.hpp"

namespace wmsd::cli {

/// Parsed run configuration. JSON schema:
///
///   {
///     "criteria": [
///       {"name": "Math", "kind": "gain", "min": 0, "max": 100, "weight": 0.5},
///       ...
///     ],
///     "aggregation": "R",        // optional, I | A | R, default R
///     "weighted": true,          // optional, default true
///     "tie_tolerance": 1e-9,     // optional
///     "clamp": false,            // optional
///     "label": "w2"              // optional, used for plot titles
///   }
///
/// "weight" defaults to 1. Unknown keys are rejected.
struct RunConfig {
  std::vector<CriterionSpec> criteria;
  AggregationKind aggregation = AggregationKind::R;
  bool weighted = true;
  double tie_tolerance = kDefaultTieTolerance;
  bool clamp = false;
  std::string label;

  /// Normalized criterion weights.
  WeightVector weights() const;
  /// weights() when weighted, the all-ones vector otherwise.
  WeightVector effective_weights() const;
};

/// Throws SchemaError for malformed documents and the model errors for
/// invalid criteria, each tagged with a field path such as "criteria[1].min".
RunConfig parse_config(std::string_view json_text);

/// Reads "id,<criterion>,..." CSV. Columns may come in any order but must
/// name exactly the configured criteria; the matrix follows header order.
/// Errors carry 1-based line and column numbers.
DecisionMatrix read_matrix(std::string_view csv_text, const RunConfig& config);

/// Splits one CSV record, honouring double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace wmsd::cli

#endif  // WMSD_CLI_CONFIG_HPP_
