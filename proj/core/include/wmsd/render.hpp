#ifndef WMSD_RENDER_HPP_
#define WMSD_RENDER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wmsd/aggregate.hpp"
#include "wmsd/geometry.hpp"
#include "wmsd/model.hpp"
#include "wmsd/wmsd.hpp"

namespace wmsd {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Number of distinct colours the field colormap can produce.
inline constexpr int kColorLevels = 257;  // anchors land exactly on levels

/// Quantization level of an aggregation value in [0, 1].
int color_level(double value) noexcept;

/// Colour of a quantization level: linear RGB interpolation through
/// #00008B, #00BFBF, #008B00, #BFBF00, #8B0000 at 0, 0.25, 0.5, 0.75, 1.
Rgb level_color(int level) noexcept;

inline Rgb colormap(double value) noexcept { return level_color(color_level(value)); }

std::string to_hex(Rgb c);

enum class MarkerStyle { solid, hollow };

struct PlotPoint {
  std::string id;
  WmsdPoint at;
  MarkerStyle style = MarkerStyle::solid;
};

struct Canvas {
  int width = 640;
  int height = 480;
};

struct PlotSpec {
  explicit PlotSpec(WeightVector w) : weights(std::move(w)) {}

  WeightVector weights;
  AggregationKind kind = AggregationKind::R;
  std::vector<PlotPoint> points;
  std::size_t grid = 100;  // colour field cells per axis, at least 16
  Canvas canvas;
  std::vector<double> isolines;
  bool labels = true;
  std::string title;
  /// Draw points even if they fall outside the attainable region.
  bool force = false;
  std::size_t boundary_resolution = 256;
};

/// Pixel transform of one panel. WM runs left to right over [0, wm_max],
/// WSD bottom to top over [0, wsd_max].
class PlotFrame {
 public:
  static constexpr double kMarginLeft = 56.0;
  static constexpr double kMarginRight = 16.0;
  static constexpr double kMarginTop = 28.0;
  static constexpr double kMarginBottom = 44.0;

  /// Throws DegenerateCanvas when the plot area would be empty.
  PlotFrame(Canvas canvas, double wm_max, double wsd_max);

  double x(double wm) const noexcept { return left_ + wm / wm_max_ * width_; }
  double y(double wsd) const noexcept { return top_ + height_ - wsd / wsd_max_ * height_; }
  double wm_at(double px) const noexcept { return (px - left_) / width_ * wm_max_; }
  double wsd_at(double py) const noexcept { return (top_ + height_ - py) / height_ * wsd_max_; }

  double left() const noexcept { return left_; }
  double top() const noexcept { return top_; }
  double width() const noexcept { return width_; }
  double height() const noexcept { return height_; }
  double wm_max() const noexcept { return wm_max_; }
  double wsd_max() const noexcept { return wsd_max_; }

 private:
  double left_;
  double top_;
  double width_;
  double height_;
  double wm_max_;
  double wsd_max_;
};

/// Frame used for a spec: WM over [0, mean(w)], WSD up to 5% above the
/// envelope peak.
PlotFrame frame_for(const PlotSpec& spec, const BoundaryEnvelope& env);

/// Single-panel SVG: colour field over the attainable region, boundary,
/// optional isolines, axes and markers. Byte-identical for equal inputs.
std::string render_wmsd_plot(const PlotSpec& spec);

/// Panels laid out row-major with a shared colour legend on the right.
std::string render_panel_grid(std::span<const PlotSpec> specs, std::size_t columns);

/// Snapshot a drawn solid, snapshot b hollow, with arrows from a to b for
/// every id whose position changed. Both snapshots must cover the same ids.
std::string render_overlay(const PlotSpec& base, std::span<const PlotPoint> snapshot_a,
                           std::span<const PlotPoint> snapshot_b);

}  // namespace wmsd

#endif  // WMSD_RENDER_HPP_
