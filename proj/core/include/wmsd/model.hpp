#ifndef WMSD_MODEL_HPP_
#define WMSD_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wmsd {

enum class CriterionKind { gain, cost };

/// A criterion with a bounded real domain [v_min, v_max] and a preference
/// direction. For gain criteria v_max is the most preferred value, for cost
/// criteria v_min is.
struct CriterionSpec {
  std::string name;
  double v_min = 0.0;
  double v_max = 1.0;
  CriterionKind kind = CriterionKind::gain;
  double raw_weight = 1.0;

  double least_preferred() const noexcept {
    return kind == CriterionKind::gain ? v_min : v_max;
  }
  double most_preferred() const noexcept {
    return kind == CriterionKind::gain ? v_max : v_min;
  }
};

/// Checks every criterion (finite, strictly ordered bounds; finite,
/// non-negative weight; unique names) and returns the specs unchanged.
std::vector<CriterionSpec> validate_criteria(std::span<const CriterionSpec> specs);

/// Max-normalized criteria weights together with the statistics the
/// WMSD machinery needs. Immutable once built.
class WeightVector {
 public:
  /// Divides every entry by the maximum. Throws NegativeWeight,
  /// NonFiniteWeight or AllZeroWeights.
  static WeightVector from_raw(std::span<const double> raw);
  static WeightVector ones(std::size_t n);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const noexcept { return weights_; }
  std::span<const double> raw() const noexcept { return raw_; }

  std::size_t positive_count() const noexcept { return positive_count_; }
  double norm() const noexcept { return norm_; }
  double mean() const noexcept { return mean_; }
  /// ||w|| / mean(w); equals sqrt(n) for the all-ones vector.
  double scaling() const noexcept { return scaling_; }

  /// Bitwise hash of the normalized weights, used to tag weighted points.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.weights_ == b.weights_;
  }

 private:
  WeightVector() = default;

  std::vector<double> weights_;
  std::vector<double> raw_;
  std::size_t positive_count_ = 0;
  double norm_ = 0.0;
  double mean_ = 0.0;
  double scaling_ = 0.0;
  std::uint64_t fingerprint_ = 0;
};

inline WeightVector normalize_weights(std::span<const double> raw) {
  return WeightVector::from_raw(raw);
}

inline double scaling_coefficient(const WeightVector& w) noexcept {
  return w.scaling();
}

enum class DomainPolicy { reject, clamp };

struct Alternative {
  std::string id;
  std::vector<double> values;
};

/// m alternatives described on n criteria. Values outside a criterion's
/// domain are rejected unless the clamp policy is requested.
class DecisionMatrix {
 public:
  DecisionMatrix(std::vector<CriterionSpec> criteria,
                 std::vector<Alternative> alternatives,
                 DomainPolicy policy = DomainPolicy::reject);

  const std::vector<CriterionSpec>& criteria() const noexcept { return criteria_; }
  const std::vector<Alternative>& alternatives() const noexcept {
    return alternatives_;
  }
  std::size_t rows() const noexcept { return alternatives_.size(); }
  std::size_t columns() const noexcept { return criteria_.size(); }

  /// Raw criterion weights normalized into a WeightVector.
  WeightVector weights() const;

 private:
  std::vector<CriterionSpec> criteria_;
  std::vector<Alternative> alternatives_;
};

}  // namespace wmsd

#endif  // WMSD_MODEL_HPP_
