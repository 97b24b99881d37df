// Seeded randomized invariants. Each test draws from its own generator so
// a failure reproduces in isolation.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "wmsd/aggregate.hpp"
#include "wmsd/geometry.hpp"
#include "wmsd/spaces.hpp"
#include "wmsd/wmsd.hpp"

using namespace wmsd;

namespace {

constexpr AggregationKind kKinds[] = {AggregationKind::I, AggregationKind::A, AggregationKind::R};

std::vector<double> draw(std::mt19937_64& rng, std::size_t n, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> x(n);
  for (double& c : x) c = d(rng);
  return x;
}

WeightVector draw_weights(std::mt19937_64& rng, std::size_t n) {
  auto raw = draw(rng, n, 0.05, 1.0);
  return fx::weights(raw);
}

std::size_t draw_n(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

TEST(Properties, NormalizationIsScaleInvariant) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto raw = draw(rng, draw_n(rng, 1, 12), 0.0, 5.0);
    raw[0] += 0.1;
    const auto w = fx::weights(raw);
    for (double& r : raw) r *= 7.25;
    const auto scaled = fx::weights(raw);
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_NEAR(scaled[i], w[i], 1e-15);
    EXPECT_DOUBLE_EQ(*std::max_element(w.values().begin(), w.values().end()), 1.0);
  }
}

TEST(Properties, IaIdentity) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = draw_n(rng, 2, 10);
    const auto w = draw_weights(rng, n);
    const auto v = to_weighted(UtilityPoint(draw(rng, n)), w);
    const auto p = to_wmsd(v, w);
    const auto d = ia_distances(p, w.mean());
    EXPECT_NEAR(d.to_anti_ideal, weighted_rescaled_euclid(v, WeightedPoint::anti_ideal(w), w),
                1e-12);
    EXPECT_NEAR(d.to_ideal, weighted_rescaled_euclid(v, WeightedPoint::ideal(w), w), 1e-12);
  }
}

TEST(Properties, OrthogonalDecomposition) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = draw_n(rng, 2, 10);
    const auto w = draw_weights(rng, n);
    const auto v = to_weighted(UtilityPoint(draw(rng, n)), w);
    const auto pr = project(v, w);
    EXPECT_NEAR(dot(pr.proj, pr.rej), 0.0, 1e-14);
    EXPECT_NEAR(dot(v.coords(), v.coords()), dot(pr.proj, pr.proj) + dot(pr.rej, pr.rej), 1e-12);
  }
}

TEST(Properties, EqualWeightsReduceToMsd) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = draw_n(rng, 2, 10);
    const auto w = WeightVector::ones(n);
    const UtilityPoint u(draw(rng, n));
    const auto v = to_weighted(u, w);
    const auto p = to_wmsd(v, w);
    const auto m = msd(u);
    EXPECT_NEAR(p.wm, m.wm, 1e-12);
    EXPECT_NEAR(p.wsd, m.wsd, 1e-12);
    for (auto kind : kKinds) EXPECT_NEAR(agg_weighted(kind, v, w), agg_unweighted(kind, u), 1e-12);
  }
}

TEST(Properties, ZeroWeightPadding) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = draw_n(rng, 2, 9);
    auto raw = draw(rng, n, 0.05, 1.0);
    auto u = draw(rng, n);
    const auto w = fx::weights(raw);
    raw.push_back(0.0);
    u.push_back(draw(rng, 1)[0]);
    const auto padded = fx::weights(raw);
    const auto v = to_weighted(UtilityPoint(std::vector<double>(u.begin(), u.end() - 1)), w);
    const auto vp = to_weighted(UtilityPoint(u), padded);
    const double ratio = static_cast<double>(n) / static_cast<double>(n + 1);
    const auto p = to_wmsd(v, w);
    const auto q = to_wmsd(vp, padded);
    EXPECT_NEAR(q.wm, p.wm * ratio, 1e-12);
    EXPECT_NEAR(q.wsd, p.wsd * ratio, 1e-12);
    for (auto kind : kKinds) {
      EXPECT_NEAR(agg_weighted(kind, vp, padded), agg_weighted(kind, v, w), 1e-12);
    }
  }
}

TEST(Properties, InterplaySigns) {
  std::mt19937_64 rng(16);
  const double h = 1e-6;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = draw_n(rng, 2, 6);
    const auto w = draw_weights(rng, n);
    const double m = w.mean();
    const auto p = to_wmsd(to_weighted(UtilityPoint(draw(rng, n, 0.05, 0.95)), w), w);
    if (p.wsd < 2 * h) continue;
    auto dwm = [&](AggregationKind k) {
      return agg_from_wmsd(k, {p.wm + h, p.wsd}, m) - agg_from_wmsd(k, {p.wm - h, p.wsd}, m);
    };
    auto dwsd = [&](AggregationKind k) {
      return agg_from_wmsd(k, {p.wm, p.wsd + h}, m) - agg_from_wmsd(k, {p.wm, p.wsd - h}, m);
    };
    EXPECT_GT(dwm(AggregationKind::I), 0.0);
    EXPECT_GT(dwm(AggregationKind::A), 0.0);
    EXPECT_GT(dwm(AggregationKind::R), 0.0);
    EXPECT_LT(dwsd(AggregationKind::I), 0.0);
    EXPECT_GT(dwsd(AggregationKind::A), 0.0);
    if (std::abs(p.wm - m / 2.0) > 1e-3) {
      EXPECT_EQ(dwsd(AggregationKind::R) > 0.0, p.wm < m / 2.0);
    }
  }
}

TEST(Properties, NeutralityLine) {
  const auto w = fx::weights({0.5, 0.6, 1.0});
  const AttainableRegion region(w);
  const double m = w.mean();
  const double top = region.upper_wsd(m / 2.0);
  for (int i = 1; i < 100; ++i) {
    const double y = top * i / 100.0;
    EXPECT_NEAR(agg_from_wmsd(AggregationKind::R, {m / 2.0, y}, m), 0.5, 1e-12);
  }
}

TEST(Properties, PermutedWeightsGiveIdenticalRegion) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    auto raw = draw(rng, draw_n(rng, 2, 8), 0.0, 1.0);
    raw[0] = 1.0;
    auto shuffled = raw;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto a = boundary(fx::weights(raw), 97);
    const auto b = boundary(fx::weights(shuffled), 97);
    ASSERT_EQ(a.outline.size(), b.outline.size());
    for (std::size_t i = 0; i < a.outline.size(); ++i) {
      EXPECT_EQ(a.outline[i].wm, b.outline[i].wm);
      EXPECT_EQ(a.outline[i].wsd, b.outline[i].wsd);
    }
  }
}

TEST(Properties, VerticesAttainTheEnvelopeOrLieBelow) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = draw_n(rng, 2, 7);
    const auto w = draw_weights(rng, n);
    const AttainableRegion region(w);
    for (const auto& v : region.vertex_images()) {
      EXPECT_LE(v.wsd, region.upper_wsd(v.wm) + 1e-12);
    }
    // Random utility points never escape.
    for (int k = 0; k < 200; ++k) {
      const auto p = to_wmsd(to_weighted(UtilityPoint(draw(rng, n)), w), w);
      EXPECT_TRUE(region.contains(p, 1e-12));
    }
  }
}

TEST(Properties, SampledEnvelopeIsALowerBound) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = draw_n(rng, 2, 10);
    const auto w = draw_weights(rng, n);
    const auto exact = boundary(w, 33);
    const auto sampled = sampled_boundary(w, 33, 64, 1000 + t);
    for (std::size_t k = 0; k < 33; ++k) {
      EXPECT_LE(sampled.upper[k].wsd, exact.upper[k].wsd + 1e-12);
    }
  }
}

TEST(Properties, IsolineLevels) {
  std::mt19937_64 rng(20);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = draw_n(rng, 2, 6);
    const AttainableRegion region(draw_weights(rng, n));
    for (auto kind : kKinds) {
      const double level = draw(rng, 1, 0.02, 0.98)[0];
      for (const auto& piece : isoline(kind, level, region, 64).pieces) {
        for (const auto& p : piece) {
          EXPECT_NEAR(agg_from_wmsd(kind, p, region.mean_w()), level, 1e-9);
        }
      }
    }
  }
}
