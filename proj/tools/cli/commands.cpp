#include "commands.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "wmsd/error.hpp"
#include "wmsd/geometry.hpp"
#include "wmsd/spaces.hpp"
#include "wmsd/wmsd.hpp"

namespace wmsd::cli {

namespace {

using nlohmann::ordered_json;

std::string fixed6(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;  // no "-0.000000"
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

void require_tabular(Format format) {
  if (format == Format::svg) {
    throw Error(ErrorCode::InvalidArgument, "this command writes csv or json, not svg");
  }
}

ordered_json ranking_json(const Ranking& r) {
  ordered_json rows = ordered_json::array();
  for (const auto& e : r.entries) {
    rows.push_back({{"id", e.id}, {"score", e.score}, {"rank", e.rank}, {"group", e.group}});
  }
  return rows;
}

std::string ranking_csv(const Ranking& r) {
  std::string out = "id,score,rank,group\n";
  for (const auto& e : r.entries) {
    out += csv_field(e.id) + "," + fixed6(e.score) + "," + std::to_string(e.rank) + "," +
           std::to_string(e.group) + "\n";
  }
  return out;
}

std::string panel_title(const Run& run, std::size_t index, AggregationKind kind) {
  std::string name = run.config.label.empty() ? "config " + std::to_string(index + 1)
                                              : run.config.label;
  return name + " \xC2\xB7 " + std::string(to_string(kind)) + (run.config.weighted ? "_w" : "");
}

PlotSpec make_spec(const Run& run, AggregationKind kind, const PlotOptions& options) {
  PlotSpec spec(run.weights());
  spec.kind = kind;
  spec.grid = options.grid;
  spec.boundary_resolution = options.resolution;
  spec.isolines = options.isolines;
  spec.labels = options.labels;
  spec.force = options.force;
  spec.canvas = options.canvas;
  return spec;
}

}  // namespace

WeightVector Run::weights() const {
  return config.weighted ? matrix.weights() : WeightVector::ones(matrix.columns());
}

std::vector<ScoredId> Run::scores() const {
  const WeightVector w = weights();
  const auto utilities = matrix_to_utility(matrix);
  std::vector<ScoredId> out;
  out.reserve(utilities.size());
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    const auto& id = matrix.alternatives()[i].id;
    const double score = config.weighted
                             ? agg_weighted(config.aggregation, to_weighted(utilities[i], w), w)
                             : agg_unweighted(config.aggregation, utilities[i]);
    out.emplace_back(id, score);
  }
  return out;
}

std::vector<PlotPoint> Run::points() const {
  const WeightVector w = weights();
  const auto utilities = matrix_to_utility(matrix);
  std::vector<PlotPoint> out;
  out.reserve(utilities.size());
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    out.push_back({matrix.alternatives()[i].id, to_wmsd(to_weighted(utilities[i], w), w),
                   MarkerStyle::solid});
  }
  return out;
}

Run load_run(std::string_view csv_text, RunConfig config) {
  DecisionMatrix matrix = read_matrix(csv_text, config);
  return Run{std::move(config), std::move(matrix)};
}

std::string cmd_rank(const Run& run, Format format) {
  require_tabular(format);
  const auto scores = run.scores();
  const Ranking r = rank(scores, run.config.tie_tolerance);
  if (format == Format::json) {
    ordered_json doc;
    doc["aggregation"] = std::string(to_string(run.config.aggregation));
    doc["weighted"] = run.config.weighted;
    doc["ranking"] = ranking_json(r);
    return dump(doc);
  }
  return ranking_csv(r);
}

std::string cmd_transform(const Run& run, Format format) {
  require_tabular(format);
  const std::size_t n = run.matrix.columns();
  const WeightVector w = run.weights();
  const auto utilities = matrix_to_utility(run.matrix);

  std::vector<std::string> header{"id"};
  for (std::size_t j = 1; j <= n; ++j) header.push_back("U" + std::to_string(j));
  for (std::size_t j = 1; j <= n; ++j) header.push_back("V" + std::to_string(j));
  for (const char* h : {"M", "SD", "WM", "WSD", "I", "A", "R", "I_w", "A_w", "R_w"}) {
    header.emplace_back(h);
  }

  std::vector<std::vector<double>> rows;
  rows.reserve(utilities.size());
  for (const auto& u : utilities) {
    const WeightedPoint v = to_weighted(u, w);
    const WmsdPoint m = msd(u);
    const WmsdPoint p = to_wmsd(v, w);
    std::vector<double> row(u.coords().begin(), u.coords().end());
    row.insert(row.end(), v.coords().begin(), v.coords().end());
    row.insert(row.end(), {m.wm, m.wsd, p.wm, p.wsd});
    for (auto kind : {AggregationKind::I, AggregationKind::A, AggregationKind::R}) {
      row.push_back(agg_unweighted(kind, u));
    }
    for (auto kind : {AggregationKind::I, AggregationKind::A, AggregationKind::R}) {
      row.push_back(agg_weighted(kind, v, w));
    }
    rows.push_back(std::move(row));
  }

  if (format == Format::json) {
    ordered_json doc;
    ordered_json names = ordered_json::array();
    for (const auto& c : run.matrix.criteria()) names.push_back(c.name);
    doc["criteria"] = names;
    doc["weights"] = std::vector<double>(w.values().begin(), w.values().end());
    doc["mean_w"] = w.mean();
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ordered_json obj;
      obj["id"] = run.matrix.alternatives()[i].id;
      for (std::size_t k = 0; k < rows[i].size(); ++k) obj[header[k + 1]] = rows[i][k];
      list.push_back(std::move(obj));
    }
    doc["alternatives"] = std::move(list);
    return dump(doc);
  }

  std::string out;
  for (std::size_t k = 0; k < header.size(); ++k) out += (k ? "," : "") + header[k];
  out += "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += csv_field(run.matrix.alternatives()[i].id);
    for (double x : rows[i]) out += "," + fixed6(x);
    out += "\n";
  }
  return out;
}

std::string cmd_boundary(const RunConfig& config, std::size_t resolution, Format format) {
  require_tabular(format);
  const WeightVector w = config.effective_weights();
  const BoundaryEnvelope env = boundary(w, resolution);
  if (format == Format::json) {
    auto pairs = [](const std::vector<WmsdPoint>& pts) {
      ordered_json arr = ordered_json::array();
      for (const auto& p : pts) arr.push_back({p.wm, p.wsd});
      return arr;
    };
    ordered_json doc;
    doc["mean_w"] = env.mean_w;
    doc["boundary"] = pairs(env.outline);
    doc["vertices"] = pairs(env.vertex_images);
    return dump(doc);
  }
  std::string out = "section,wm,wsd\n";
  for (const auto& p : env.outline) out += "boundary," + fixed6(p.wm) + "," + fixed6(p.wsd) + "\n";
  for (const auto& p : env.vertex_images) {
    out += "vertex," + fixed6(p.wm) + "," + fixed6(p.wsd) + "\n";
  }
  return out;
}

std::string cmd_plot(const std::vector<Run>& runs, const std::vector<AggregationKind>& kinds,
                     const PlotOptions& options) {
  if (runs.empty() || kinds.empty()) {
    throw Error(ErrorCode::InvalidArgument, "plot needs at least one config and aggregation");
  }
  std::vector<PlotSpec> specs;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (auto kind : kinds) {
      PlotSpec spec = make_spec(runs[i], kind, options);
      spec.points = runs[i].points();
      if (runs.size() * kinds.size() > 1) spec.title = panel_title(runs[i], i, kind);
      specs.push_back(std::move(spec));
    }
  }
  if (specs.size() == 1) return render_wmsd_plot(specs.front());
  return render_panel_grid(specs, options.columns);
}

std::string cmd_overlay(const Run& before, const Run& after, const PlotOptions& options) {
  PlotSpec spec = make_spec(before, before.config.aggregation, options);
  const auto a = before.points();
  const auto b = after.points();
  return render_overlay(spec, a, b);
}

std::string cmd_compare(const Run& a, const Run& b, Format format) {
  require_tabular(format);
  const auto sa = a.scores();
  const auto sb = b.scores();
  const Ranking ra = rank(sa, a.config.tie_tolerance);
  const Ranking rb = rank(sb, b.config.tie_tolerance);
  const RankComparison cmp = compare_rankings(ra, rb);

  if (format == Format::json) {
    ordered_json doc;
    doc["ranking_a"] = ranking_json(ra);
    doc["ranking_b"] = ranking_json(rb);
    ordered_json deltas = ordered_json::array();
    for (const auto& d : cmp.deltas) {
      const RankEntry* ea = ra.find(d.id);
      const RankEntry* eb = rb.find(d.id);
      deltas.push_back({{"id", d.id},
                        {"score_a", ea->score},
                        {"rank_a", d.rank_a},
                        {"score_b", eb->score},
                        {"rank_b", d.rank_b},
                        {"delta", d.delta}});
    }
    doc["deltas"] = std::move(deltas);
    doc["kendall_tau_b"] = cmp.kendall_tau_b;
    ordered_json rev = ordered_json::array();
    for (const auto& [x, y] : cmp.reversals) rev.push_back({x, y});
    doc["reversals"] = std::move(rev);
    return dump(doc);
  }

  std::string out = "# table\nid,score_a,rank_a,score_b,rank_b,delta\n";
  for (const auto& d : cmp.deltas) {
    out += csv_field(d.id) + "," + fixed6(ra.find(d.id)->score) + "," +
           std::to_string(d.rank_a) + "," + fixed6(rb.find(d.id)->score) + "," +
           std::to_string(d.rank_b) + "," + std::to_string(d.delta) + "\n";
  }
  out += "\n# kendall_tau_b\n" + fixed6(cmp.kendall_tau_b) + "\n";
  out += "\n# reversals\nfirst,second\n";
  for (const auto& [x, y] : cmp.reversals) out += csv_field(x) + "," + csv_field(y) + "\n";
  return out;
}

}  // namespace wmsd::cli
