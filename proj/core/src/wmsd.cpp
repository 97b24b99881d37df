#include "wmsd/wmsd.hpp"

#include <cmath>

#include "wmsd/error.hpp"

namespace wmsd {

namespace {

void require_compatible(const WeightedPoint& v, const WeightVector& w) {
  if (v.size() != w.size()) {
    throw Error(ErrorCode::LengthMismatch, "point and weights differ in length");
  }
}

std::vector<double> rejection(const WeightedPoint& v, const WeightVector& w) {
  const double k = dot(v.coords(), w.values()) / (w.norm() * w.norm());
  std::vector<double> rej(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) rej[i] = v[i] - k * w[i];
  return rej;
}

double norm(const std::vector<double>& x) {
  double acc = 0.0;
  for (double c : x) acc += c * c;
  return std::sqrt(acc);
}

}  // namespace

ProjectionPair project(const WeightedPoint& v, const WeightVector& w) {
  require_compatible(v, w);
  const double k = dot(v.coords(), w.values()) / (w.norm() * w.norm());
  ProjectionPair out;
  out.proj.resize(v.size());
  out.rej.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.proj[i] = k * w[i];
    out.rej[i] = v[i] - out.proj[i];
  }
  return out;
}

double wm(const WeightedPoint& v, const WeightVector& w) {
  require_compatible(v, w);
  return dot(v.coords(), w.values()) / (w.norm() * w.scaling());
}

double wsd(const WeightedPoint& v, const WeightVector& w) {
  require_compatible(v, w);
  return norm(rejection(v, w)) / w.scaling();
}

WmsdPoint to_wmsd(const WeightedPoint& v, const WeightVector& w) {
  return {wm(v, w), wsd(v, w)};
}

WmsdPoint msd(const UtilityPoint& u) {
  if (u.size() == 0) return {};
  const auto n = static_cast<double>(u.size());
  double sum = 0.0;
  for (double c : u.coords()) sum += c;
  const double mean = sum / n;
  double ss = 0.0;
  for (double c : u.coords()) ss += (c - mean) * (c - mean);
  return {mean, std::sqrt(ss / n)};
}

IaDistances ia_distances(WmsdPoint p, double mean_w) {
  const double gap = mean_w - p.wm;
  return {std::hypot(p.wm, p.wsd), std::hypot(gap, p.wsd)};
}

}  // namespace wmsd
