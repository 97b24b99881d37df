#include "wmsd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "wmsd/error.hpp"

namespace wmsd {

namespace {

// All (sum at 1, sum at 0) pairs over the subsets of `squares`.
std::vector<std::pair<double, double>> subset_sums(const std::vector<double>& squares) {
  std::vector<std::pair<double, double>> sums{{0.0, 0.0}};
  sums.reserve(std::size_t{1} << squares.size());
  for (double a : squares) {
    const std::size_t count = sums.size();
    for (std::size_t k = 0; k < count; ++k) {
      const auto [on, off] = sums[k];
      sums[k] = {on, off + a};
      sums.emplace_back(on + a, off);
    }
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

double edge_lagrange(double on, double off, double a, double t) {
  return on * off + a * (on * (1.0 - t) * (1.0 - t) + off * t * t);
}

std::vector<double> positive_squares(const WeightVector& w) {
  std::vector<double> sq;
  for (double x : w.values()) {
    if (x > 0.0) sq.push_back(x * x);
  }
  std::sort(sq.begin(), sq.end(), std::greater<>());
  return sq;
}

// Mean over all n entries, summed in sorted order so permutations agree bitwise.
double sorted_mean(const WeightVector& w) {
  std::vector<double> pos;
  for (double x : w.values()) {
    if (x > 0.0) pos.push_back(x);
  }
  std::sort(pos.begin(), pos.end(), std::greater<>());
  double sum = 0.0;
  for (double x : pos) sum += x;
  return sum / static_cast<double>(w.size());
}

double grid_wm(double mean, std::size_t k, std::size_t resolution) {
  if (k + 1 == resolution) return mean;
  return mean * static_cast<double>(k) / static_cast<double>(resolution - 1);
}

void require_resolution(std::size_t resolution) {
  if (resolution < 2) {
    throw Error(ErrorCode::InvalidArgument, "boundary resolution must be at least 2");
  }
}

}  // namespace

AttainableRegion::AttainableRegion(const WeightVector& w)
    : mean_(sorted_mean(w)), squares_(positive_squares(w)) {
  if (squares_.size() > kMaxExactCriteria) {
    throw Error(ErrorCode::TooManyCriteria,
                std::to_string(squares_.size()) + " positive weights exceed the exact limit of " +
                    std::to_string(kMaxExactCriteria));
  }
  for (double a : squares_) total_ += a;

  free_.reserve(squares_.size());
  for (std::size_t j = 0; j < squares_.size(); ++j) {
    std::vector<double> others;
    others.reserve(squares_.size() - 1);
    for (std::size_t i = 0; i < squares_.size(); ++i) {
      if (i != j) others.push_back(squares_[i]);
    }
    free_.push_back({squares_[j], subset_sums(others)});
  }

  const double scale = mean_ / total_;
  for (const auto& [on, off] : subset_sums(squares_)) {
    vertices_.push_back({on * scale, std::sqrt(on * off) * scale});
  }
  std::sort(vertices_.begin(), vertices_.end(), [](const WmsdPoint& a, const WmsdPoint& b) {
    return a.wm < b.wm || (a.wm == b.wm && a.wsd < b.wsd);
  });
  auto near = [](const WmsdPoint& a, const WmsdPoint& b) {
    return std::abs(a.wm - b.wm) <= 1e-12 && std::abs(a.wsd - b.wsd) <= 1e-12;
  };
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end(), near), vertices_.end());
}

double AttainableRegion::upper_wsd(double wm) const {
  const double c = std::clamp(wm, 0.0, mean_) / mean_ * total_;
  double best = 0.0;
  for (const auto& f : free_) {
    auto it = std::lower_bound(f.sums.begin(), f.sums.end(), c - f.square,
                               [](const std::pair<double, double>& s, double v) {
                                 return s.first < v;
                               });
    for (; it != f.sums.end() && it->first <= c; ++it) {
      const double t = std::clamp((c - it->first) / f.square, 0.0, 1.0);
      best = std::max(best, edge_lagrange(it->first, it->second, f.square, t));
    }
  }
  return std::sqrt(best) * mean_ / total_;
}

bool AttainableRegion::contains(WmsdPoint p, double tol) const {
  if (!(p.wm >= -tol && p.wm <= mean_ + tol)) return false;
  if (!(p.wsd >= -tol)) return false;
  return p.wsd <= upper_wsd(p.wm) + tol;
}

BoundaryEnvelope AttainableRegion::envelope(std::size_t resolution) const {
  require_resolution(resolution);
  BoundaryEnvelope env;
  env.mean_w = mean_;
  env.vertex_images = vertices_;
  env.upper.reserve(resolution);
  for (std::size_t k = 0; k < resolution; ++k) {
    const double x = grid_wm(mean_, k, resolution);
    const bool end = k == 0 || k + 1 == resolution;
    env.upper.push_back({x, end ? 0.0 : upper_wsd(x)});
  }

  // Every vertex image has on * off = c * (total - c), the outer bound of any
  // attainable point at that WM, so all of them lie on the envelope.
  env.outline = env.upper;
  env.outline.insert(env.outline.end(), vertices_.begin(), vertices_.end());
  std::stable_sort(env.outline.begin(), env.outline.end(),
                   [](const WmsdPoint& a, const WmsdPoint& b) { return a.wm < b.wm; });
  env.outline.erase(std::unique(env.outline.begin(), env.outline.end(),
                                [](const WmsdPoint& a, const WmsdPoint& b) {
                                  return std::abs(a.wm - b.wm) <= 1e-15;
                                }),
                    env.outline.end());
  return env;
}

BoundaryEnvelope boundary(const WeightVector& w, std::size_t resolution) {
  return AttainableRegion(w).envelope(resolution);
}

std::vector<WmsdPoint> vertex_images(const WeightVector& w) {
  return AttainableRegion(w).vertex_images();
}

bool is_attainable(WmsdPoint p, const WeightVector& w, double tol) {
  return AttainableRegion(w).contains(p, tol);
}

BoundaryEnvelope sampled_boundary(const WeightVector& w, std::size_t resolution,
                                  std::size_t trials, std::uint64_t seed) {
  require_resolution(resolution);
  const std::vector<double> squares = positive_squares(w);
  const double mean = sorted_mean(w);
  double total = 0.0;
  for (double a : squares) total += a;

  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> base(squares.size());
  std::iota(base.begin(), base.end(), std::size_t{0});
  orders.push_back(base);
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::shuffle(base.begin(), base.end(), rng);
    orders.push_back(base);
  }

  BoundaryEnvelope env;
  env.mean_w = mean;
  env.exact = false;
  const double scale = mean / total;
  std::vector<char> on(squares.size());
  for (std::size_t k = 0; k < resolution; ++k) {
    const double x = grid_wm(mean, k, resolution);
    const double c = x / mean * total;
    double best = 0.0;
    for (const auto& order : orders) {
      std::fill(on.begin(), on.end(), 0);
      double at_one = 0.0;
      std::size_t free_index = squares.size();
      for (std::size_t i : order) {
        if (at_one + squares[i] <= c) {
          at_one += squares[i];
          on[i] = 1;
        } else if (free_index == squares.size()) {
          free_index = i;
        }
      }
      if (free_index == squares.size()) continue;  // c == total, wsd is 0
      double at_zero = 0.0;
      for (std::size_t i = 0; i < squares.size(); ++i) {
        if (!on[i] && i != free_index) at_zero += squares[i];
      }
      const double a = squares[free_index];
      const double t = std::clamp((c - at_one) / a, 0.0, 1.0);
      best = std::max(best, edge_lagrange(at_one, at_zero, a, t));
    }
    const bool end = k == 0 || k + 1 == resolution;
    const double lower = end ? 0.0 : std::sqrt(best) * scale;
    const double bound = std::sqrt(std::max(0.0, c * (total - c))) * scale;
    env.looseness = std::max(env.looseness, bound - lower);
    env.upper.push_back({x, lower});
  }
  env.outline = env.upper;
  return env;
}

namespace {

IsolineShape isoline_shape(AggregationKind kind, double level, double m) {
  switch (kind) {
    case AggregationKind::A:
      if (level == 0.0) return DegeneratePoint{{0.0, 0.0}};
      return CircleArc{0.0, level * m};
    case AggregationKind::I:
      if (level == 1.0) return DegeneratePoint{{m, 0.0}};
      return CircleArc{m, (1.0 - level) * m};
    case AggregationKind::R: {
      if (level == 0.0) return DegeneratePoint{{0.0, 0.0}};
      if (level == 1.0) return DegeneratePoint{{m, 0.0}};
      if (level == 0.5) return VerticalSegment{m / 2.0};
      const double k = level / (1.0 - level);
      const double k2 = k * k;
      return CircleArc{k2 * m / (k2 - 1.0), k * m / std::abs(1.0 - k2)};
    }
  }
  return DegeneratePoint{{0.0, 0.0}};
}

struct PieceCollector {
  const AttainableRegion& region;
  std::vector<std::vector<WmsdPoint>> pieces;
  bool open = false;

  void add(WmsdPoint p) {
    if (region.contains(p, 1e-12)) {
      if (!open) pieces.emplace_back();
      pieces.back().push_back(p);
      open = true;
    } else {
      open = false;
    }
  }
};

}  // namespace

Isoline isoline(AggregationKind kind, double level, const AttainableRegion& region,
                std::size_t samples) {
  if (!(level >= 0.0 && level <= 1.0)) {
    throw Error(ErrorCode::LevelOutOfRange, "isoline level must lie in [0, 1]");
  }
  samples = std::max<std::size_t>(samples, 2);
  const double m = region.mean_w();
  Isoline out{kind, level, isoline_shape(kind, level, m), {}};
  PieceCollector collect{region, {}, false};

  if (const auto* arc = std::get_if<CircleArc>(&out.shape)) {
    // Only the part of the upper half circle with 0 <= wm <= m can be inside.
    const double hi_cos = std::clamp((m - arc->center_wm) / arc->radius, -1.0, 1.0);
    const double lo_cos = std::clamp(-arc->center_wm / arc->radius, -1.0, 1.0);
    const double from = std::acos(hi_cos);
    const double to = std::acos(lo_cos);
    for (std::size_t i = 0; i < samples; ++i) {
      const double theta = from + (to - from) * static_cast<double>(i) /
                                      static_cast<double>(samples - 1);
      collect.add({arc->center_wm + arc->radius * std::cos(theta),
                   std::max(0.0, arc->radius * std::sin(theta))});
    }
  } else if (const auto* seg = std::get_if<VerticalSegment>(&out.shape)) {
    const double top = region.upper_wsd(seg->wm);
    for (std::size_t i = 0; i < samples; ++i) {
      collect.add({seg->wm, top * static_cast<double>(i) / static_cast<double>(samples - 1)});
    }
  } else {
    collect.add(std::get<DegeneratePoint>(out.shape).at);
  }
  out.pieces = std::move(collect.pieces);
  return out;
}

Isoline isoline(AggregationKind kind, double level, const WeightVector& w,
                std::size_t samples) {
  return isoline(kind, level, AttainableRegion(w), samples);
}

}  // namespace wmsd
