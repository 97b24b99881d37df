#ifndef WMSD_WMSD_HPP_
#define WMSD_WMSD_HPP_

#include <vector>

#include "wmsd/model.hpp"
#include "wmsd/spaces.hpp"

namespace wmsd {

/// Location of an alternative in WMSD-space: weight-scaled mean (wm) and
/// weight-scaled standard deviation (wsd).
struct WmsdPoint {
  double wm = 0.0;
  double wsd = 0.0;

  friend bool operator==(const WmsdPoint&, const WmsdPoint&) = default;
};

/// Decomposition v = proj + rej with proj parallel to w and rej orthogonal.
struct ProjectionPair {
  std::vector<double> proj;
  std::vector<double> rej;
};

ProjectionPair project(const WeightedPoint& v, const WeightVector& w);

/// ||v projected on w|| / s, computed as (v . w) / (||w|| s). In [0, mean(w)].
double wm(const WeightedPoint& v, const WeightVector& w);

/// ||v rejected from w|| / s.
double wsd(const WeightedPoint& v, const WeightVector& w);

WmsdPoint to_wmsd(const WeightedPoint& v, const WeightVector& w);

/// Plain mean and population standard deviation of a utility vector. This
/// is the w = 1 special case of to_wmsd, computed independently.
WmsdPoint msd(const UtilityPoint& u);

struct IaDistances {
  double to_anti_ideal = 0.0;
  double to_ideal = 0.0;
};

/// Distances to the anti-ideal 0 and the ideal w, recovered from the
/// WMSD coordinates alone.
IaDistances ia_distances(WmsdPoint p, double mean_w);

}  // namespace wmsd

#endif  // WMSD_WMSD_HPP_
