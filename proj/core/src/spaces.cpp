#include "wmsd/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wmsd/error.hpp"

namespace wmsd {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::LengthMismatch, "vector lengths differ: " + std::to_string(a) +
                                               " vs " + std::to_string(b));
  }
}

}  // namespace

UtilityPoint::UtilityPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "utility coordinate outside [0, 1]");
    }
  }
}

WeightedPoint::WeightedPoint(std::vector<double> coords, const WeightVector& w)
    : coords_(std::move(coords)), weights_id_(w.fingerprint()) {
  require_same_length(coords_.size(), w.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!(coords_[i] >= 0.0 && coords_[i] <= w[i])) {
      throw Error(ErrorCode::InvalidArgument, "weighted coordinate outside [0, w_i]");
    }
  }
}

WeightedPoint WeightedPoint::ideal(const WeightVector& w) {
  return WeightedPoint({w.values().begin(), w.values().end()}, w);
}

WeightedPoint WeightedPoint::anti_ideal(const WeightVector& w) {
  return WeightedPoint(std::vector<double>(w.size(), 0.0), w);
}

double to_utility(double value, const CriterionSpec& spec, DomainPolicy policy) {
  if (value < spec.v_min || value > spec.v_max || !std::isfinite(value)) {
    if (policy == DomainPolicy::reject || !std::isfinite(value)) {
      throw Error(ErrorCode::OutOfDomain,
                  "value " + std::to_string(value) + " outside the domain of '" +
                      spec.name + "'");
    }
    value = std::clamp(value, spec.v_min, spec.v_max);
  }
  const double worst = spec.least_preferred();
  const double best = spec.most_preferred();
  // Same expression for both kinds: (v - v_*) / (v^* - v_*).
  return (value - worst) / (best - worst);
}

std::vector<UtilityPoint> matrix_to_utility(const DecisionMatrix& m) {
  std::vector<UtilityPoint> out;
  out.reserve(m.rows());
  const auto& criteria = m.criteria();
  for (const auto& alt : m.alternatives()) {
    std::vector<double> coords(criteria.size());
    for (std::size_t c = 0; c < criteria.size(); ++c) {
      coords[c] = to_utility(alt.values[c], criteria[c]);
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

WeightedPoint to_weighted(const UtilityPoint& u, const WeightVector& w) {
  require_same_length(u.size(), w.size());
  std::vector<double> v(u.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = w[i] * u[i];
  return WeightedPoint(std::move(v), w);
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_length(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double euclid(std::span<const double> a, std::span<const double> b) {
  require_same_length(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

double rescaled_euclid(const UtilityPoint& a, const UtilityPoint& b) {
  require_same_length(a.size(), b.size());
  if (a.size() == 0) return 0.0;
  return euclid(a.coords(), b.coords()) / std::sqrt(static_cast<double>(a.size()));
}

double weighted_rescaled_euclid(const WeightedPoint& a, const WeightedPoint& b,
                                const WeightVector& w) {
  require_same_length(a.size(), b.size());
  require_same_length(a.size(), w.size());
  if (a.weights_id() != w.fingerprint() || b.weights_id() != w.fingerprint()) {
    throw Error(ErrorCode::WeightMismatch, "points were not produced by these weights");
  }
  return euclid(a.coords(), b.coords()) / w.scaling();
}

}  // namespace wmsd
