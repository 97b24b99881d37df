#ifndef WMSD_SPACES_HPP_
#define WMSD_SPACES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wmsd/model.hpp"

namespace wmsd {

/// A point of the utility space [0,1]^n. Every criterion has been rescaled
/// to gain type, so 1 is the ideal and 0 the anti-ideal.
class UtilityPoint {
 public:
  UtilityPoint() = default;
  /// Throws InvalidArgument if a coordinate falls outside [0, 1].
  explicit UtilityPoint(std::vector<double> coords);

  static UtilityPoint ideal(std::size_t n) { return UtilityPoint(std::vector<double>(n, 1.0)); }
  static UtilityPoint anti_ideal(std::size_t n) {
    return UtilityPoint(std::vector<double>(n, 0.0));
  }

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

 private:
  std::vector<double> coords_;
};

/// A point of the weighted utility space VS = { w o u : u in US }, tagged
/// with the fingerprint of the weights that produced it.
class WeightedPoint {
 public:
  WeightedPoint() = default;
  /// Throws InvalidArgument unless 0 <= coords[i] <= w[i] for all i.
  WeightedPoint(std::vector<double> coords, const WeightVector& w);

  static WeightedPoint ideal(const WeightVector& w);
  static WeightedPoint anti_ideal(const WeightVector& w);

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  std::uint64_t weights_id() const noexcept { return weights_id_; }

 private:
  std::vector<double> coords_;
  std::uint64_t weights_id_ = 0;
};

/// Min-max rescaling of a raw value onto [0, 1] with 1 at the most
/// preferred end of the domain.
double to_utility(double value, const CriterionSpec& spec,
                  DomainPolicy policy = DomainPolicy::reject);

std::vector<UtilityPoint> matrix_to_utility(const DecisionMatrix& m);

/// Element-wise product w o u.
WeightedPoint to_weighted(const UtilityPoint& u, const WeightVector& w);

double euclid(std::span<const double> a, std::span<const double> b);

/// Euclidean distance divided by sqrt(n); lies in [0, 1] inside US.
double rescaled_euclid(const UtilityPoint& a, const UtilityPoint& b);

/// Euclidean distance divided by s = ||w|| / mean(w); lies in [0, mean(w)]
/// inside VS. Both points must come from w.
double weighted_rescaled_euclid(const WeightedPoint& a, const WeightedPoint& b,
                                const WeightVector& w);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace wmsd

#endif  // WMSD_SPACES_HPP_
