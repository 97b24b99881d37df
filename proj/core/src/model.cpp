#include "wmsd/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>
#include <utility>

#include "wmsd/error.hpp"

namespace wmsd {

namespace {

std::string entry_path(std::size_t i) {
  return "criteria[" + std::to_string(i) + "]";
}

std::uint64_t fnv1a(std::span<const double> values) {
  std::uint64_t h = 1469598103934665603ULL;
  for (double v : values) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

}  // namespace

std::vector<CriterionSpec> validate_criteria(std::span<const CriterionSpec> specs) {
  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& c = specs[i];
    if (!std::isfinite(c.v_min) || !std::isfinite(c.v_max)) {
      throw Error(ErrorCode::NonFiniteBound,
                  "criterion '" + c.name + "' has a non-finite bound")
          .with_path(entry_path(i));
    }
    if (!(c.v_min < c.v_max)) {
      throw Error(ErrorCode::DegenerateDomain,
                  "criterion '" + c.name + "' needs min < max")
          .with_path(entry_path(i));
    }
    if (!std::isfinite(c.raw_weight)) {
      throw Error(ErrorCode::NonFiniteWeight,
                  "criterion '" + c.name + "' has a non-finite weight")
          .with_path(entry_path(i) + ".weight");
    }
    if (c.raw_weight < 0.0) {
      throw Error(ErrorCode::NegativeWeight,
                  "criterion '" + c.name + "' has a negative weight")
          .with_path(entry_path(i) + ".weight");
    }
    if (!names.insert(c.name).second) {
      throw Error(ErrorCode::DuplicateName, "duplicate criterion name '" + c.name + "'")
          .with_path(entry_path(i) + ".name");
    }
  }
  return {specs.begin(), specs.end()};
}

WeightVector WeightVector::from_raw(std::span<const double> raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::AllZeroWeights, "weight vector is empty");
  }
  double max_entry = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) {
      throw Error(ErrorCode::NonFiniteWeight,
                  "weight " + std::to_string(i) + " is not finite");
    }
    if (raw[i] < 0.0) {
      throw Error(ErrorCode::NegativeWeight,
                  "weight " + std::to_string(i) + " is negative");
    }
    max_entry = std::max(max_entry, raw[i]);
  }
  if (max_entry <= 0.0) {
    throw Error(ErrorCode::AllZeroWeights, "at least one weight must be positive");
  }

  WeightVector w;
  w.raw_.assign(raw.begin(), raw.end());
  w.weights_.reserve(raw.size());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double r : raw) {
    // x / max is exactly 1 for the maximal entry, so a second pass is a no-op.
    const double x = r / max_entry;
    w.weights_.push_back(x);
    sum += x;
    sum_sq += x * x;
    if (x > 0.0) ++w.positive_count_;
  }
  w.norm_ = std::sqrt(sum_sq);
  w.mean_ = sum / static_cast<double>(raw.size());
  w.scaling_ = w.norm_ / w.mean_;
  w.fingerprint_ = fnv1a(w.weights_);
  return w;
}

WeightVector WeightVector::ones(std::size_t n) {
  std::vector<double> raw(n, 1.0);
  return from_raw(raw);
}

DecisionMatrix::DecisionMatrix(std::vector<CriterionSpec> criteria,
                               std::vector<Alternative> alternatives,
                               DomainPolicy policy)
    : criteria_(validate_criteria(criteria)), alternatives_(std::move(alternatives)) {
  std::unordered_set<std::string> ids;
  for (std::size_t r = 0; r < alternatives_.size(); ++r) {
    auto& alt = alternatives_[r];
    if (!ids.insert(alt.id).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate alternative id '" + alt.id + "'")
          .with_id(alt.id);
    }
    if (alt.values.size() != criteria_.size()) {
      throw Error(ErrorCode::LengthMismatch,
                  "alternative '" + alt.id + "' has " + std::to_string(alt.values.size()) +
                      " values, expected " + std::to_string(criteria_.size()))
          .with_id(alt.id);
    }
    for (std::size_t c = 0; c < criteria_.size(); ++c) {
      double& v = alt.values[c];
      const auto& spec = criteria_[c];
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::NonFiniteValue,
                    "value of '" + alt.id + "' on '" + spec.name + "' is not finite")
            .with_id(alt.id)
            .with_cell(static_cast<long>(r), static_cast<long>(c));
      }
      if (v < spec.v_min || v > spec.v_max) {
        if (policy == DomainPolicy::clamp) {
          v = std::clamp(v, spec.v_min, spec.v_max);
        } else {
          throw Error(ErrorCode::OutOfDomain,
                      "value of '" + alt.id + "' on '" + spec.name +
                          "' lies outside its domain")
              .with_id(alt.id)
              .with_cell(static_cast<long>(r), static_cast<long>(c));
        }
      }
    }
  }
}

WeightVector DecisionMatrix::weights() const {
  std::vector<double> raw;
  raw.reserve(criteria_.size());
  for (const auto& c : criteria_) raw.push_back(c.raw_weight);
  return WeightVector::from_raw(raw);
}

}  // namespace wmsd
