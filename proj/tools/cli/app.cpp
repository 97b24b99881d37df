#include "app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "wmsd/error.hpp"

namespace wmsd::cli {

namespace {

struct Options {
  std::string data;
  std::vector<std::string> configs;
  std::string config_b;
  std::string aggregation;
  bool unweighted = false;
  std::string out;
  std::string format;
  std::size_t grid = 100;
  std::size_t resolution = 256;
  std::size_t columns = 2;
  std::string overlay;
  std::string isolines;
  double tie_tol = -1.0;
  bool clamp = false;
  bool no_labels = false;
  bool force = false;
  int width = 640;
  int height = 480;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'").with_path(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read '" + path + "'").with_path(path);
  return buf.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  file.close();
  if (!file) throw Error(ErrorCode::IoError, "cannot write '" + path + "'").with_path(path);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<AggregationKind> parse_kinds(const std::string& text) {
  std::vector<AggregationKind> kinds;
  for (const auto& item : split_list(text)) {
    const auto kind = parse_aggregation(item);
    if (!kind) {
      throw Error(ErrorCode::InvalidArgument, "unknown aggregation '" + item + "'")
          .with_path("--aggregation");
    }
    kinds.push_back(*kind);
  }
  return kinds;
}

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> levels;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      levels.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad isoline level '" + item + "'")
          .with_path("--isolines");
    }
  }
  return levels;
}

Format parse_format(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  if (text == "svg") return Format::svg;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + text + "'").with_path("--format");
}

RunConfig load_config(const std::string& path, const Options& opt) {
  RunConfig cfg;
  try {
    cfg = parse_config(read_file(path));
  } catch (Error& e) {
    if (e.code() == ErrorCode::IoError) throw;
    throw Error(e.code(), path + ": " + e.what())
        .with_path(e.path())
        .with_id(e.id());
  }
  if (!opt.aggregation.empty()) {
    const auto kinds = parse_kinds(opt.aggregation);
    if (!kinds.empty()) cfg.aggregation = kinds.front();
  }
  if (opt.unweighted) cfg.weighted = false;
  if (opt.tie_tol >= 0.0) cfg.tie_tolerance = opt.tie_tol;
  if (opt.clamp) cfg.clamp = true;
  return cfg;
}

Run load(const std::string& data_path, RunConfig cfg) {
  const std::string csv = read_file(data_path);
  try {
    return load_run(csv, std::move(cfg));
  } catch (Error& e) {
    throw Error(e.code(), data_path + ": " + e.what())
        .with_path(data_path)
        .with_id(e.id())
        .with_cell(e.row().value_or(0), e.column().value_or(0));
  }
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required").with_path(flag);
  }
}

void emit_error(std::ostream& err, const std::string& code, const std::string& category,
                const std::string& message, const Error* e) {
  nlohmann::ordered_json rec;
  rec["error"] = code;
  rec["category"] = category;
  rec["message"] = message;
  if (e) {
    if (!e->path().empty()) rec["path"] = e->path();
    if (e->row() && *e->row() > 0) rec["row"] = *e->row();
    if (e->column() && *e->column() > 0) rec["column"] = *e->column();
    if (!e->id().empty()) rec["id"] = e->id();
  }
  err << rec.dump() << "\n";
}

std::string category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::validation:
      return "validation";
    case ErrorCategory::computation:
      return "computation";
    case ErrorCategory::io:
      return "io";
  }
  return "validation";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted TOPSIS rankings and WMSD-space plots", "wmsd"};
  app.require_subcommand(1);
  Options opt;

  auto add_data = [&](CLI::App* sub) {
    sub->add_option("--data", opt.data, "CSV dataset (id column, then criteria)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--aggregation", opt.aggregation, "I, A or R (comma list for plot)");
    sub->add_flag("--unweighted", opt.unweighted, "ignore weights (w = 1)");
    sub->add_option("--out", opt.out, "output file (default stdout)");
    sub->add_option("--tie-tol", opt.tie_tol, "indifference tolerance for ranking")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--clamp", opt.clamp, "clamp out-of-domain values instead of failing");
  };

  auto* rank_cmd = app.add_subcommand("rank", "rank alternatives");
  add_data(rank_cmd);
  rank_cmd->add_option("--config", opt.configs, "JSON run config")->expected(1);
  rank_cmd->add_option("--format", opt.format, "csv or json");
  add_common(rank_cmd);

  auto* transform_cmd = app.add_subcommand("transform", "utility, weighted and WMSD coordinates");
  add_data(transform_cmd);
  transform_cmd->add_option("--config", opt.configs, "JSON run config")->expected(1);
  transform_cmd->add_option("--format", opt.format, "csv or json");
  add_common(transform_cmd);

  auto* boundary_cmd = app.add_subcommand("boundary", "attainable-region boundary");
  boundary_cmd->add_option("--config", opt.configs, "JSON run config")->expected(1);
  boundary_cmd->add_option("--resolution", opt.resolution, "envelope grid points");
  boundary_cmd->add_option("--format", opt.format, "csv or json");
  add_common(boundary_cmd);

  auto* plot_cmd = app.add_subcommand("plot", "SVG plot in WMSD-space");
  add_data(plot_cmd);
  plot_cmd->add_option("--config", opt.configs, "JSON run config, repeat for a panel grid");
  plot_cmd->add_option("--overlay", opt.overlay, "second CSV snapshot drawn hollow");
  plot_cmd->add_option("--grid", opt.grid, "colour cells per axis");
  plot_cmd->add_option("--resolution", opt.resolution, "boundary grid points");
  plot_cmd->add_option("--columns", opt.columns, "panels per row");
  plot_cmd->add_option("--isolines", opt.isolines, "comma-separated isoline levels");
  plot_cmd->add_flag("--no-labels", opt.no_labels, "omit point labels");
  plot_cmd->add_flag("--force", opt.force, "draw points outside the attainable region");
  plot_cmd->add_option("--width", opt.width, "panel width in pixels");
  plot_cmd->add_option("--height", opt.height, "panel height in pixels");
  plot_cmd->add_option("--format", opt.format, "svg");
  add_common(plot_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "compare rankings under two configs");
  add_data(compare_cmd);
  compare_cmd->add_option("--config", opt.configs, "first JSON run config")->expected(1);
  compare_cmd->add_option("--config-b", opt.config_b, "second JSON run config");
  compare_cmd->add_option("--format", opt.format, "csv or json");
  add_common(compare_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    emit_error(err, "InvalidArgument", "validation", e.what(), nullptr);
    return 1;
  }

  try {
    const std::string config_path = opt.configs.empty() ? std::string() : opt.configs.front();
    std::string text;
    if (rank_cmd->parsed() || transform_cmd->parsed()) {
      require(opt.data, "--data");
      require(config_path, "--config");
      const Run r = load(opt.data, load_config(config_path, opt));
      const Format f = parse_format(opt.format, Format::csv);
      text = rank_cmd->parsed() ? cmd_rank(r, f) : cmd_transform(r, f);
    } else if (boundary_cmd->parsed()) {
      require(config_path, "--config");
      text = cmd_boundary(load_config(config_path, opt), opt.resolution,
                          parse_format(opt.format, Format::csv));
    } else if (plot_cmd->parsed()) {
      require(opt.data, "--data");
      if (opt.configs.empty()) require("", "--config");
      if (parse_format(opt.format, Format::svg) != Format::svg) {
        throw Error(ErrorCode::InvalidArgument, "plot writes svg only").with_path("--format");
      }
      PlotOptions po;
      po.grid = opt.grid;
      po.resolution = opt.resolution;
      po.columns = opt.columns;
      po.isolines = parse_levels(opt.isolines);
      po.labels = !opt.no_labels;
      po.force = opt.force;
      po.canvas = {opt.width, opt.height};
      std::vector<Run> runs;
      for (const auto& path : opt.configs) runs.push_back(load(opt.data, load_config(path, opt)));
      if (!opt.overlay.empty()) {
        if (runs.size() != 1) {
          throw Error(ErrorCode::InvalidArgument, "--overlay takes exactly one --config")
              .with_path("--overlay");
        }
        const Run after = load(opt.overlay, runs.front().config);
        text = cmd_overlay(runs.front(), after, po);
      } else {
        std::vector<AggregationKind> kinds = parse_kinds(opt.aggregation);
        if (kinds.empty()) {
          for (const auto& r : runs) {
            if (r.config.aggregation != runs.front().config.aggregation) {
              throw Error(ErrorCode::InvalidArgument,
                          "configs disagree on the aggregation; pass --aggregation")
                  .with_path("--aggregation");
            }
          }
          kinds.push_back(runs.front().config.aggregation);
        }
        text = cmd_plot(runs, kinds, po);
      }
    } else if (compare_cmd->parsed()) {
      require(opt.data, "--data");
      require(config_path, "--config");
      require(opt.config_b, "--config-b");
      const Run a = load(opt.data, load_config(config_path, opt));
      const Run b = load(opt.data, load_config(opt.config_b, opt));
      text = cmd_compare(a, b, parse_format(opt.format, Format::csv));
    }
    write_output(text, opt.out, out);
    return 0;
  } catch (const Error& e) {
    emit_error(err, std::string(to_string(e.code())), category_name(e.category()), e.what(), &e);
    return static_cast<int>(e.category());
  }
}

}  // namespace wmsd::cli
