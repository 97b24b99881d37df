// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "fixtures.hpp"
#include "golden.hpp"
#include "svg_cells.hpp"
#include "wmsd/aggregate.hpp"
#include "wmsd/error.hpp"
#include "wmsd/geometry.hpp"
#include "wmsd/render.hpp"
#include "wmsd/spaces.hpp"
#include "wmsd/wmsd.hpp"

using namespace wmsd;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

constexpr AggregationKind kKinds[] = {AggregationKind::I, AggregationKind::A, AggregationKind::R};

std::vector<double> draw(std::mt19937_64& rng, std::size_t n, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> x(n);
  for (double& c : x) c = d(rng);
  return x;
}

std::size_t draw_n(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// 1. Every printed column of the students table within +-0.005.
Outcome students_table() {
  const auto run = fx::run("students.csv", "students.json");
  const auto doc = nlohmann::json::parse(cli::cmd_transform(run, cli::Format::json));
  static const char* columns[] = {"U1", "U2", "U3", "V1", "V2", "V3", "M", "SD",
                                  "WM", "WSD", "I", "A", "R", "I_w", "A_w", "R_w"};
  int bad = 0;
  double worst = 0.0;
  std::string where;
  for (const auto& row : golden::kStudents) {
    const nlohmann::json* alt = nullptr;
    for (const auto& a : doc["alternatives"]) {
      if (a["id"] == row.id) alt = &a;
    }
    if (!alt) return {false, "missing " + std::string(row.id)};
    for (std::size_t c = 0; c < 16; ++c) {
      const double dev = std::abs((*alt)[columns[c]].get<double>() - row.values[c]);
      if (dev > 0.005 + 1e-12) {
        ++bad;
        if (dev > worst) where = std::string(row.id) + "." + columns[c];
      }
      worst = std::max(worst, dev);
    }
  }
  return {bad == 0, std::to_string(240 - bad) + "/240 cells within 0.005, max deviation " +
                        fmt("%.4f", worst) + (bad ? " at " + where : "")};
}

// 2. Worked two-criteria example.
Outcome worked_example() {
  const auto w = fx::weights({1.0, 0.5});
  const auto v = to_weighted(UtilityPoint({0.75, 0.5}), w);
  const auto pr = project(v, w);
  const auto p = to_wmsd(v, w);
  const double d0 = weighted_rescaled_euclid(v, WeightedPoint::anti_ideal(w), w);
  const double dw = weighted_rescaled_euclid(v, WeightedPoint::ideal(w), w);
  const double proj_err = std::max({std::abs(pr.proj[0] - 0.70), std::abs(pr.proj[1] - 0.35),
                                    std::abs(pr.rej[0] - 0.05), std::abs(pr.rej[1] + 0.10)});
  const bool ok = proj_err <= 1e-12 && std::abs(w.scaling() - 1.4907) <= 1e-3 &&
                  std::abs(p.wm - 0.525) <= 1e-3 && std::abs(p.wsd - 0.075) <= 1e-3 &&
                  std::abs(d0 - 0.53) <= 0.005 && std::abs(dw - 0.24) <= 0.005;
  return {ok, "proj/rej err " + fmt("%.1e", proj_err) + ", s=" + fmt("%.4f", w.scaling()) +
                  ", WM=" + fmt("%.4f", p.wm) + ", WSD=" + fmt("%.4f", p.wsd) +
                  ", d(v,0)=" + fmt("%.4f", d0) + ", d(v,w)=" + fmt("%.4f", dw)};
}

// 3. Country rankings for w1..w4.
Outcome country_rankings() {
  const char* configs[] = {"countries_w1.json", "countries_w2.json", "countries_w3.json",
                           "countries_w4.json"};
  int within = 0;
  int orders = 0;
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto run = fx::run("countries.csv", configs[k]);
    const auto scores = run.scores();
    const Ranking r = rank(scores);
    bool same = true;
    for (std::size_t pos = 0; pos < 12; ++pos) {
      const auto& printed = golden::kCountryRankings[k][pos];
      same &= r.entries[pos].id == printed.id;
      const double dev = std::abs(r.find(printed.id)->score - printed.r_w);
      worst = std::max(worst, dev);
      within += dev <= 1e-3 + 1e-12;
    }
    orders += same;
  }
  return {within == 48 && orders == 4, std::to_string(within) + "/48 scores within 0.001 (max " +
                                           fmt("%.4f", worst) + "), " + std::to_string(orders) +
                                           "/4 orderings identical"};
}

// 4. Distances recovered from (WM, WSD).
Outcome ia_identity() {
  std::mt19937_64 rng(4);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = draw_n(rng, 2, 10);
    const auto w = fx::weights(draw(rng, n, 0.01, 1.0));
    const auto v = to_weighted(UtilityPoint(draw(rng, n)), w);
    const auto d = ia_distances(to_wmsd(v, w), w.mean());
    worst = std::max(worst, std::abs(d.to_anti_ideal -
                                     weighted_rescaled_euclid(v, WeightedPoint::anti_ideal(w), w)));
    worst = std::max(worst, std::abs(d.to_ideal -
                                     weighted_rescaled_euclid(v, WeightedPoint::ideal(w), w)));
  }
  return {worst < 1e-12, "1000 pairs, max residual " + fmt("%.2e", worst)};
}

// 5. w = 1 reduces to mean / population std and unweighted aggregations.
Outcome msd_reduction() {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = draw_n(rng, 2, 10);
    const auto w = WeightVector::ones(n);
    const UtilityPoint u(draw(rng, n));
    const auto v = to_weighted(u, w);
    const auto p = to_wmsd(v, w);
    const auto m = msd(u);
    worst = std::max({worst, std::abs(p.wm - m.wm), std::abs(p.wsd - m.wsd)});
    for (auto k : kKinds) {
      worst = std::max(worst, std::abs(agg_weighted(k, v, w) - agg_unweighted(k, u)));
    }
  }
  return {worst < 1e-12, "1000 points, max residual " + fmt("%.2e", worst)};
}

// 6. Finite-difference signs of every aggregation and the R neutrality line.
Outcome interplay() {
  std::mt19937_64 rng(6);
  const double h = 1e-7;
  int checked = 0;
  int wrong = 0;
  double neutral = 0.0;
  for (auto kind : kKinds) {
    int points = 0;
    while (points < 200) {
      const std::size_t n = draw_n(rng, 2, 8);
      const auto w = fx::weights(draw(rng, n, 0.05, 1.0));
      const double m = w.mean();
      const auto p = to_wmsd(to_weighted(UtilityPoint(draw(rng, n, 0.02, 0.98)), w), w);
      if (p.wsd < 10 * h || std::abs(p.wm - m / 2.0) < 1e-4) continue;
      ++points;
      const double gm = agg_from_wmsd(kind, {p.wm + h, p.wsd}, m) -
                        agg_from_wmsd(kind, {p.wm - h, p.wsd}, m);
      const double gs = agg_from_wmsd(kind, {p.wm, p.wsd + h}, m) -
                        agg_from_wmsd(kind, {p.wm, p.wsd - h}, m);
      bool ok = gm > 0.0;
      switch (kind) {
        case AggregationKind::I: ok &= gs < 0.0; break;
        case AggregationKind::A: ok &= gs > 0.0; break;
        case AggregationKind::R: ok &= (gs > 0.0) == (p.wm < m / 2.0); break;
      }
      wrong += !ok;
      ++checked;
      if (kind == AggregationKind::R) {
        // neutrality along WSD at WM = mean(w) / 2
        const AttainableRegion region(w);
        const double top = region.upper_wsd(m / 2.0);
        const double y = top * draw(rng, 1, 0.05, 0.95)[0];
        neutral = std::max(neutral,
                           std::abs(agg_from_wmsd(kind, {m / 2.0, y + h}, m) -
                                    agg_from_wmsd(kind, {m / 2.0, y - h}, m)));
      }
    }
  }
  return {wrong == 0 && neutral < 1e-12, std::to_string(checked - wrong) + "/" +
                                             std::to_string(checked) +
                                             " sign checks, max |dR_w| on neutrality line " +
                                             fmt("%.1e", neutral)};
}

// 7. Envelope contains, hugs and is permutation invariant.
Outcome boundary_oracle() {
  const std::vector<std::vector<double>> weights{
      {1, 1}, {1, 0.5}, {0.5, 0.6, 1.0}, {0.25, 1, 0.25, 0.5}, {1, 0.66, 0.33, 0}};
  std::mt19937_64 rng(7);
  std::bernoulli_distribution coin(0.5);
  std::size_t outside = 0;
  double gap = 0.0;
  double perm = 0.0;
  for (const auto& raw : weights) {
    const auto w = fx::weights(raw);
    const std::size_t n = raw.size();
    const AttainableRegion region(w);
    const auto env = region.envelope(512);

    // Half uniform interior samples, half on the hyperrectangle edges.
    std::vector<WmsdPoint> pool;
    pool.reserve(100000);
    for (int i = 0; i < 100000; ++i) {
      std::vector<double> u = draw(rng, n);
      if (i % 2) {
        const std::size_t free = draw_n(rng, 0, n - 1);
        for (std::size_t j = 0; j < n; ++j) {
          if (j != free) u[j] = coin(rng) ? 1.0 : 0.0;
        }
      }
      const auto p = to_wmsd(to_weighted(UtilityPoint(u), w), w);
      outside += !region.contains(p, 1e-9);
      pool.push_back(p);
    }
    std::sort(pool.begin(), pool.end(),
              [](const WmsdPoint& a, const WmsdPoint& b) { return a.wm < b.wm; });
    for (const auto& e : env.upper) {
      double best = 1e300;
      auto it = std::lower_bound(pool.begin(), pool.end(), e.wm - 0.01,
                                 [](const WmsdPoint& p, double x) { return p.wm < x; });
      for (; it != pool.end() && it->wm <= e.wm + 0.01; ++it) {
        best = std::min(best, std::hypot(it->wm - e.wm, it->wsd - e.wsd));
      }
      gap = std::max(gap, best);
    }

    std::vector<double> shuffled = raw;
    std::reverse(shuffled.begin(), shuffled.end());
    for (int round = 0; round < 3; ++round) {
      const auto other = boundary(fx::weights(shuffled), 512);
      for (std::size_t k = 0; k < env.upper.size(); ++k) {
        perm = std::max(perm, std::abs(other.upper[k].wsd - env.upper[k].wsd));
        perm = std::max(perm, std::abs(other.upper[k].wm - env.upper[k].wm));
      }
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
    }
  }
  return {outside == 0 && gap <= 0.01 && perm <= 1e-9,
          std::to_string(outside) + " of 5x10^5 samples outside, tightness gap " +
              fmt("%.4f", gap) + ", permutation diff " + fmt("%.1e", perm)};
}

// 8. Appending a zero-weight criterion.
Outcome zero_weight() {
  std::mt19937_64 rng(8);
  double score_diff = 0.0;
  double scale_diff = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = draw_n(rng, 2, 10);
    auto raw = draw(rng, n, 0.05, 1.0);
    auto u = draw(rng, n);
    const auto w = fx::weights(raw);
    const auto v = to_weighted(UtilityPoint(u), w);
    raw.push_back(0.0);
    u.push_back(draw(rng, 1)[0]);
    const auto wp = fx::weights(raw);
    const auto vp = to_weighted(UtilityPoint(u), wp);
    const double ratio = static_cast<double>(n) / static_cast<double>(n + 1);
    const auto p = to_wmsd(v, w);
    const auto q = to_wmsd(vp, wp);
    scale_diff = std::max({scale_diff, std::abs(q.wm - ratio * p.wm),
                           std::abs(q.wsd - ratio * p.wsd)});
    for (auto k : kKinds) {
      score_diff = std::max(score_diff, std::abs(agg_weighted(k, vp, wp) - agg_weighted(k, v, w)));
    }
  }
  return {score_diff <= 1e-12 && scale_diff <= 1e-12,
          "max score change " + fmt("%.1e", score_diff) + ", max scaling residual " +
              fmt("%.1e", scale_diff)};
}

// 9. 2x2 country panel: determinism, colours, field inside the region.
Outcome rendering() {
  std::vector<cli::Run> runs;
  for (const char* cfg : {"countries_w1.json", "countries_w2.json", "countries_w3.json",
                          "countries_w4.json"}) {
    runs.push_back(fx::run("countries.csv", cfg));
  }
  const cli::PlotOptions opts;
  const std::string first = cli::cmd_plot(runs, {AggregationKind::R}, opts);
  const std::string second = cli::cmd_plot(runs, {AggregationKind::R}, opts);
  const bool identical = first == second;

  const auto cells = fx::field_cells(first);
  std::size_t outside = 0;
  std::vector<AttainableRegion> regions;
  std::vector<PlotFrame> frames;
  for (const auto& r : runs) {
    PlotSpec spec(r.weights());
    regions.emplace_back(spec.weights);
    frames.push_back(frame_for(spec, regions.back().envelope(spec.boundary_resolution)));
  }
  auto centre = [&](const fx::FieldCell& c) {
    const auto& f = frames[c.panel];
    return WmsdPoint{f.wm_at(c.cx()), f.wsd_at(c.cy())};
  };
  for (const auto& c : cells) {
    // tolerance covers the 0.001 px rounding of the coordinates
    outside += !regions[c.panel].contains(centre(c), 1e-5);
  }

  std::mt19937_64 rng(9);
  int matched = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& c = cells[draw_n(rng, 0, cells.size() - 1)];
    const int level =
        color_level(agg_from_wmsd(AggregationKind::R, centre(c), regions[c.panel].mean_w()));
    bool near = false;
    for (int d = -1; d <= 1; ++d) {
      near |= level + d >= 0 && level + d < kColorLevels && level_color(level + d) == c.fill;
    }
    matched += near;
  }
  return {identical && matched == 100 && outside == 0 && cells.size() > 1000,
          std::string(identical ? "byte-identical" : "outputs differ") + ", " +
              std::to_string(matched) + "/100 sampled cells within one level, " +
              std::to_string(outside) + " of " + std::to_string(cells.size()) +
              " cells outside"};
}

// 10. Ranking changes between configurations.
Outcome reversals() {
  const auto plain = fx::run("students.csv", "students_unweighted.json");
  const auto weighted = fx::run("students.csv", "students.json");
  const auto s1 = plain.scores();
  const auto s2 = weighted.scores();
  const auto students = compare_rankings(rank(s1), rank(s2));
  bool s8s9 = false;
  for (const auto& [x, y] : students.reversals) s8s9 |= x == "S8" && y == "S9";

  const auto w1 = fx::run("countries.csv", "countries_w1.json");
  const auto w2 = fx::run("countries.csv", "countries_w2.json");
  const auto c1 = w1.scores();
  const auto c2 = w2.scores();
  const auto countries = compare_rankings(rank(c1), rank(c2));
  bool ury = false;
  for (const auto& d : countries.deltas) {
    ury |= d.id == "URY" && d.rank_a == 2 && d.rank_b == 5;
  }
  return {s8s9 && ury, std::string("(S8, S9) reversal ") + (s8s9 ? "flagged" : "missing") +
                           ", URY 2nd->5th " + (ury ? "reported" : "missing")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"students table reproduction", students_table},
      {"worked example", worked_example},
      {"country rankings reproduction", country_rankings},
      {"IA identity", ia_identity},
      {"MSD reduction", msd_reduction},
      {"aggregation interplay", interplay},
      {"boundary oracle", boundary_oracle},
      {"zero-weight elimination", zero_weight},
      {"rendering determinism and colours", rendering},
      {"ranking reversals", reversals},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %2d  %-36s %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%d criteria passed in %.2f s\n", index - failed, index, secs);
  return failed;
}
