#include "config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "wmsd/error.hpp"

namespace wmsd::cli {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what).with_path(path);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      schema_error(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

double number_field(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "." + key, "missing field");
  if (!it->is_number()) schema_error(path + "." + key, "expected a number");
  return it->get<double>();
}

std::string string_field(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "." + key, "missing field");
  if (!it->is_string()) schema_error(path + "." + key, "expected a string");
  return it->get<std::string>();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

WeightVector RunConfig::weights() const {
  std::vector<double> raw;
  raw.reserve(criteria.size());
  for (const auto& c : criteria) raw.push_back(c.raw_weight);
  return WeightVector::from_raw(raw);
}

WeightVector RunConfig::effective_weights() const {
  return weighted ? weights() : WeightVector::ones(criteria.size());
}

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("$", "expected an object");
  reject_unknown(doc, {"criteria", "aggregation", "weighted", "tie_tolerance", "clamp", "label"},
                 "");

  RunConfig cfg;
  const auto crit = doc.find("criteria");
  if (crit == doc.end()) schema_error("criteria", "missing field");
  if (!crit->is_array() || crit->empty()) schema_error("criteria", "expected a non-empty array");

  for (std::size_t i = 0; i < crit->size(); ++i) {
    const auto& entry = (*crit)[i];
    const std::string path = "criteria[" + std::to_string(i) + "]";
    if (!entry.is_object()) schema_error(path, "expected an object");
    reject_unknown(entry, {"name", "kind", "min", "max", "weight"}, path);

    CriterionSpec spec;
    spec.name = string_field(entry, "name", path);
    const std::string kind = string_field(entry, "kind", path);
    if (kind == "gain") {
      spec.kind = CriterionKind::gain;
    } else if (kind == "cost") {
      spec.kind = CriterionKind::cost;
    } else {
      schema_error(path + ".kind", "expected \"gain\" or \"cost\"");
    }
    spec.v_min = number_field(entry, "min", path);
    spec.v_max = number_field(entry, "max", path);
    spec.raw_weight = entry.contains("weight") ? number_field(entry, "weight", path) : 1.0;
    cfg.criteria.push_back(std::move(spec));
  }

  if (const auto it = doc.find("aggregation"); it != doc.end()) {
    if (!it->is_string()) schema_error("aggregation", "expected a string");
    const auto kind = parse_aggregation(it->get<std::string>());
    if (!kind) schema_error("aggregation", "expected \"I\", \"A\" or \"R\"");
    cfg.aggregation = *kind;
  }
  if (const auto it = doc.find("weighted"); it != doc.end()) {
    if (!it->is_boolean()) schema_error("weighted", "expected a boolean");
    cfg.weighted = it->get<bool>();
  }
  if (const auto it = doc.find("clamp"); it != doc.end()) {
    if (!it->is_boolean()) schema_error("clamp", "expected a boolean");
    cfg.clamp = it->get<bool>();
  }
  if (doc.contains("tie_tolerance")) {
    cfg.tie_tolerance = number_field(doc, "tie_tolerance", "$");
    if (!(cfg.tie_tolerance >= 0.0) || !std::isfinite(cfg.tie_tolerance)) {
      schema_error("tie_tolerance", "expected a finite non-negative number");
    }
  }
  if (doc.contains("label")) cfg.label = string_field(doc, "label", "$");

  validate_criteria(cfg.criteria);
  try {
    (void)cfg.weights();
  } catch (Error& e) {
    throw Error(e.code(), e.what()).with_path("criteria[*].weight");
  }
  return cfg;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(trim(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  fields.push_back(trim(current));
  return fields;
}

DecisionMatrix read_matrix(std::string_view csv_text, const RunConfig& config) {
  std::vector<std::pair<long, std::string_view>> lines;
  long line_no = 0;
  std::size_t pos = 0;
  while (pos <= csv_text.size()) {
    auto end = csv_text.find('\n', pos);
    if (end == std::string_view::npos) end = csv_text.size();
    ++line_no;
    auto line = csv_text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) lines.emplace_back(line_no, line);
    pos = end + 1;
  }
  if (lines.empty()) throw Error(ErrorCode::HeaderMismatch, "CSV has no header row");

  const auto header = split_csv_line(lines.front().second);
  if (header.empty() || header.front() != "id") {
    throw Error(ErrorCode::HeaderMismatch, "first header column must be \"id\"")
        .with_cell(lines.front().first, 1);
  }
  std::unordered_map<std::string, std::size_t> by_name;
  for (std::size_t i = 0; i < config.criteria.size(); ++i) by_name.emplace(config.criteria[i].name, i);

  std::vector<CriterionSpec> criteria;
  std::set<std::string> seen;
  for (std::size_t col = 1; col < header.size(); ++col) {
    const auto it = by_name.find(header[col]);
    if (it == by_name.end() || !seen.insert(header[col]).second) {
      throw Error(ErrorCode::HeaderMismatch,
                  "header column '" + header[col] + "' does not match a configured criterion")
          .with_cell(lines.front().first, static_cast<long>(col + 1));
    }
    criteria.push_back(config.criteria[it->second]);
  }
  if (criteria.size() != config.criteria.size()) {
    throw Error(ErrorCode::HeaderMismatch, "header does not list every configured criterion")
        .with_cell(lines.front().first, 0);
  }

  std::vector<Alternative> alternatives;
  std::vector<long> source_line;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto [number, text] = lines[r];
    const auto fields = split_csv_line(text);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::LengthMismatch, "line " + std::to_string(number) + " has " +
                                                 std::to_string(fields.size()) + " fields, expected " +
                                                 std::to_string(header.size()))
          .with_cell(number, 0);
    }
    Alternative alt{fields[0], {}};
    for (std::size_t col = 1; col < fields.size(); ++col) {
      const auto& cell = fields[col];
      double value = 0.0;
      const auto* first = cell.data();
      const auto* last = cell.data() + cell.size();
      if (!cell.empty() && *first == '+') ++first;
      const auto res = std::from_chars(first, last, value);
      if (cell.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(value)) {
        throw Error(ErrorCode::BadNumber, "line " + std::to_string(number) + ", column " +
                                              std::to_string(col + 1) + ": '" + cell +
                                              "' is not a number")
            .with_cell(number, static_cast<long>(col + 1))
            .with_id(alt.id);
      }
      alt.values.push_back(value);
    }
    alternatives.push_back(std::move(alt));
    source_line.push_back(number);
  }

  try {
    return DecisionMatrix(std::move(criteria), std::move(alternatives),
                          config.clamp ? DomainPolicy::clamp : DomainPolicy::reject);
  } catch (Error& e) {
    if (e.row() && e.column()) {
      const long line = source_line[static_cast<std::size_t>(*e.row())];
      const long column = *e.column() + 2;
      throw Error(e.code(), "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + e.what())
          .with_cell(line, column)
          .with_id(e.id());
    }
    throw;
  }
}

}  // namespace wmsd::cli
