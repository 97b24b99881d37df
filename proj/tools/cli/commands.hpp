#ifndef WMSD_CLI_COMMANDS_HPP_
#define WMSD_CLI_COMMANDS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "config.hpp"
#include "wmsd/aggregate.hpp"
#include "wmsd/model.hpp"
#include "wmsd/render.hpp"

namespace wmsd::cli {

// Every command is a pure function from parsed inputs to the output text;
// main.cpp only does file I/O and error reporting.

enum class Format { csv, json, svg };

/// A dataset read under one configuration.
struct Run {
  RunConfig config;
  DecisionMatrix matrix;

  /// Matrix-order weights, or all ones for unweighted runs.
  WeightVector weights() const;
  /// Aggregation scores under config.aggregation, in matrix row order.
  std::vector<ScoredId> scores() const;
  /// (WM, WSD) of every alternative under weights().
  std::vector<PlotPoint> points() const;
};

Run load_run(std::string_view csv_text, RunConfig config);

std::string cmd_rank(const Run& run, Format format);

/// Columns: id, U1..Un, V1..Vn, M, SD, WM, WSD, I, A, R, I_w, A_w, R_w.
std::string cmd_transform(const Run& run, Format format);

/// CSV sections "boundary" (outline, WM ascending) and "vertex".
std::string cmd_boundary(const RunConfig& config, std::size_t resolution, Format format);

struct PlotOptions {
  std::size_t grid = 100;
  std::size_t resolution = 256;
  std::size_t columns = 2;
  std::vector<double> isolines;
  bool labels = true;
  bool force = false;
  Canvas canvas;
};

/// One panel per (run, aggregation) pair, runs outermost. A single pair
/// renders a plain plot, more pairs a panel grid with a shared legend.
std::string cmd_plot(const std::vector<Run>& runs, const std::vector<AggregationKind>& kinds,
                     const PlotOptions& options);

/// `before` solid, `after` hollow, arrows between them; both use the
/// weights and aggregation of `before`.
std::string cmd_overlay(const Run& before, const Run& after, const PlotOptions& options);

/// Both rankings plus their comparison.
std::string cmd_compare(const Run& a, const Run& b, Format format);

}  // namespace wmsd::cli

#endif  // WMSD_CLI_COMMANDS_HPP_
