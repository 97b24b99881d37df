#ifndef WMSD_GEOMETRY_HPP_
#define WMSD_GEOMETRY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "wmsd/aggregate.hpp"
#include "wmsd/model.hpp"
#include "wmsd/wmsd.hpp"

namespace wmsd {

/// Largest number of positive weights handled by exact edge enumeration.
inline constexpr std::size_t kMaxExactCriteria = 20;

struct BoundaryEnvelope {
  double mean_w = 0.0;
  /// Upper boundary sampled on a uniform WM grid from 0 to mean_w.
  std::vector<WmsdPoint> upper;
  /// Images of the hyperrectangle vertices, sorted by (wm, wsd).
  std::vector<WmsdPoint> vertex_images;
  /// `upper` merged with the vertex images that lie on the envelope; this
  /// is what gets drawn.
  std::vector<WmsdPoint> outline;
  bool exact = true;
  /// For sampled envelopes: max gap between a proven upper bound and the
  /// sampled curve. Zero for exact envelopes.
  double looseness = 0.0;

  std::array<WmsdPoint, 2> lower() const { return {WmsdPoint{0.0, 0.0}, WmsdPoint{mean_w, 0.0}}; }
};

/// The set of (wm, wsd) pairs reachable from VS for one weight vector.
///
/// VS is the hyperrectangle prod [0, w_i]. For a fixed wm the constraint
/// v . w = c is a hyperplane, and ||v||^2 is convex, so the largest wsd on
/// that slice is reached at a vertex of the slice, i.e. on an edge of the
/// hyperrectangle. Zero-weight coordinates contribute nothing and are
/// dropped. For each free coordinate j the evaluator keeps the sorted
/// subset sums (over the other squared weights) of the coordinates fixed
/// at 1 and at 0; wsd on an edge then follows from the Lagrange identity
///
///   ||v||^2 ||w||^2 - (v . w)^2 = S Z + a_j (S (1 - t)^2 + Z t^2),
///
/// with a_j = w_j^2, S and Z the squared-weight sums of the coordinates at
/// their upper and lower bound, and t in [0, 1] the free coordinate's
/// utility. Every term is non-negative, so wsd stays accurate near 0.
///
/// Weights are sorted before enumeration, so any permutation of w yields
/// bit-identical results. Memory grows as n_p * 2^(n_p - 1).
class AttainableRegion {
 public:
  /// Throws TooManyCriteria when more than kMaxExactCriteria weights are
  /// positive.
  explicit AttainableRegion(const WeightVector& w);

  double mean_w() const noexcept { return mean_; }
  std::size_t positive_count() const noexcept { return squares_.size(); }

  /// Exact height of the upper envelope at wm (clamped into [0, mean_w]).
  double upper_wsd(double wm) const;

  bool contains(WmsdPoint p, double tol) const;

  const std::vector<WmsdPoint>& vertex_images() const noexcept { return vertices_; }

  /// Throws InvalidArgument when resolution < 2.
  BoundaryEnvelope envelope(std::size_t resolution) const;

 private:
  struct FreeCoordinate {
    double square = 0.0;
    // (sum of squares fixed at 1, sum of squares fixed at 0), sorted.
    std::vector<std::pair<double, double>> sums;
  };

  double mean_ = 0.0;
  double total_ = 0.0;  // ||w||^2
  std::vector<double> squares_;
  std::vector<FreeCoordinate> free_;
  std::vector<WmsdPoint> vertices_;
};

BoundaryEnvelope boundary(const WeightVector& w, std::size_t resolution);

std::vector<WmsdPoint> vertex_images(const WeightVector& w);

bool is_attainable(WmsdPoint p, const WeightVector& w, double tol);

/// Envelope estimate that does not enumerate edges, for weight vectors past
/// kMaxExactCriteria. Each grid level is filled greedily along `trials`
/// random coordinate orders (each order yields a feasible edge point); the
/// bound ||v||^2 <= v . w gives the reported looseness. Deterministic for a
/// given seed. vertex_images is left empty.
BoundaryEnvelope sampled_boundary(const WeightVector& w, std::size_t resolution,
                                  std::size_t trials = 256, std::uint64_t seed = 1);

struct CircleArc {
  double center_wm = 0.0;  // the centre lies on the WM axis
  double radius = 0.0;
};

struct VerticalSegment {
  double wm = 0.0;
};

struct DegeneratePoint {
  WmsdPoint at;
};

using IsolineShape = std::variant<CircleArc, VerticalSegment, DegeneratePoint>;

struct Isoline {
  AggregationKind kind = AggregationKind::R;
  double level = 0.0;
  IsolineShape shape;
  /// Samples of the shape inside the attainable region, split into
  /// connected runs.
  std::vector<std::vector<WmsdPoint>> pieces;
};

/// Level set of an aggregation in WMSD-space:
///   A: circle around (0, 0) with radius level * mean(w),
///   I: circle around (mean(w), 0) with radius (1 - level) * mean(w),
///   R: the Apollonius circle of (0, 0) and (mean(w), 0) for the distance
///      ratio level / (1 - level), or the vertical line WM = mean(w) / 2 at
///      level 0.5.
/// Throws LevelOutOfRange unless 0 <= level <= 1.
Isoline isoline(AggregationKind kind, double level, const WeightVector& w,
                std::size_t samples = 256);

Isoline isoline(AggregationKind kind, double level, const AttainableRegion& region,
                std::size_t samples = 256);

}  // namespace wmsd

#endif  // WMSD_GEOMETRY_HPP_
