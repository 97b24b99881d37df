#include "wmsd/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <string_view>

#include "wmsd/error.hpp"

namespace wmsd {

namespace {

constexpr std::array<Rgb, 5> kAnchors{{
    {0x00, 0x00, 0x8B},
    {0x00, 0xBF, 0xBF},
    {0x00, 0x8B, 0x00},
    {0xBF, 0xBF, 0x00},
    {0x8B, 0x00, 0x00},
}};

constexpr double kLegendWidth = 96.0;
constexpr double kMarkerRadius = 4.0;
constexpr double kPointTolerance = 1e-9;

std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string tick(double v) {
  if (std::abs(v) < 5e-4) v = 0.0;
  char buf[32];
  // two decimals unless that would misstate the tick, as for 0.125
  const bool fine = std::abs(std::round(v * 100.0) - v * 100.0) > 1e-6;
  std::snprintf(buf, sizeof buf, fine ? "%.3f" : "%.2f", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Arrow {
  WmsdPoint from;
  WmsdPoint to;
};

void validate(const PlotSpec& spec) {
  if (spec.canvas.width <= 0 || spec.canvas.height <= 0) {
    throw Error(ErrorCode::DegenerateCanvas, "canvas dimensions must be positive");
  }
  if (spec.grid < 16) {
    throw Error(ErrorCode::InvalidArgument, "colour grid must have at least 16 cells per axis");
  }
  for (double level : spec.isolines) {
    if (!(level >= 0.0 && level <= 1.0)) {
      throw Error(ErrorCode::LevelOutOfRange, "isoline level must lie in [0, 1]");
    }
  }
}

void check_points(const AttainableRegion& region, std::span<const PlotPoint> points, bool force) {
  if (force) return;
  for (const auto& p : points) {
    if (!region.contains(p.at, kPointTolerance)) {
      throw Error(ErrorCode::UnattainablePoint,
                  "point '" + p.id + "' lies outside the attainable region")
          .with_id(p.id);
    }
  }
}

void svg_open(std::string& out, double width, double height) {
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
         "\" font-family=\"sans-serif\">\n";
  out += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" fill=\"#ffffff\"/>\n";
}

void svg_close(std::string& out) { out += "</svg>\n"; }

void draw_field(std::string& out, const PlotSpec& spec, const AttainableRegion& region,
                const PlotFrame& frame, const std::string& clip_id) {
  const auto g = static_cast<double>(spec.grid);
  const double m = region.mean_w();
  const double cell_w = frame.width() / g;
  const double cell_h = frame.height() / g;
  out += "<g class=\"field\" clip-path=\"url(#" + clip_id + ")\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t c = 0; c < spec.grid; ++c) {
    const double wm = (static_cast<double>(c) + 0.5) / g * m;
    const double top = region.upper_wsd(wm);
    const std::string x = num(frame.x(static_cast<double>(c) / g * m));
    for (std::size_t r = 0; r < spec.grid; ++r) {
      const double wsd = (static_cast<double>(r) + 0.5) / g * frame.wsd_max();
      if (wsd > top) break;
      const double value = agg_from_wmsd(spec.kind, {wm, wsd}, m);
      out += "<rect x=\"" + x + "\" y=\"" +
             num(frame.y(static_cast<double>(r + 1) / g * frame.wsd_max())) + "\" width=\"" +
             num(cell_w) + "\" height=\"" + num(cell_h) + "\" fill=\"" +
             to_hex(colormap(value)) + "\"/>\n";
    }
  }
  out += "</g>\n";
}

std::string outline_path(const BoundaryEnvelope& env, const PlotFrame& frame) {
  std::string d;
  for (std::size_t i = 0; i < env.outline.size(); ++i) {
    d += (i == 0 ? "M" : " L");
    d += num(frame.x(env.outline[i].wm)) + "," + num(frame.y(env.outline[i].wsd));
  }
  return d + " Z";  // closes along the WSD = 0 baseline
}

void draw_clip(std::string& out, const BoundaryEnvelope& env, const PlotFrame& frame,
               const std::string& clip_id) {
  out += "<clipPath id=\"" + clip_id + "\"><path d=\"" + outline_path(env, frame) +
         "\"/></clipPath>\n";
}

void draw_boundary(std::string& out, const BoundaryEnvelope& env, const PlotFrame& frame) {
  const std::string d = outline_path(env, frame);
  out += "<path class=\"boundary\" d=\"" + d +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.2\"/>\n";
}

void draw_isolines(std::string& out, const PlotSpec& spec, const AttainableRegion& region,
                   const PlotFrame& frame) {
  if (spec.isolines.empty()) return;
  out += "<g class=\"isolines\" fill=\"none\" stroke=\"#ffffff\" stroke-width=\"0.8\">\n";
  for (double level : spec.isolines) {
    const Isoline line = isoline(spec.kind, level, region);
    for (const auto& piece : line.pieces) {
      if (piece.size() < 2) continue;
      std::string d;
      for (std::size_t i = 0; i < piece.size(); ++i) {
        d += (i == 0 ? "M" : " L");
        d += num(frame.x(piece[i].wm)) + "," + num(frame.y(piece[i].wsd));
      }
      out += "<path class=\"isoline\" data-level=\"" + num(level) + "\" d=\"" + d + "\"/>\n";
    }
  }
  out += "</g>\n";
}

void draw_axes(std::string& out, const PlotFrame& frame) {
  const double x0 = frame.left();
  const double y0 = frame.top() + frame.height();
  out += "<g class=\"axes\" stroke=\"#000000\" stroke-width=\"1\" font-size=\"11\">\n";
  out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" +
         num(x0 + frame.width()) + "\" y2=\"" + num(y0) + "\"/>\n";
  out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" +
         num(frame.top()) + "\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double wm = frame.wm_max() * i / 4.0;
    const double px = frame.x(wm);
    out += "<line x1=\"" + num(px) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(px) + "\" y2=\"" +
           num(y0 + 4.0) + "\"/>\n";
    out += "<text x=\"" + num(px) + "\" y=\"" + num(y0 + 16.0) +
           "\" stroke=\"none\" text-anchor=\"middle\">" + tick(wm) + "</text>\n";
  }
  const double step = frame.wsd_max() < 0.3 ? 0.05 : 0.1;
  for (int i = 0; step * i <= frame.wsd_max() + 1e-12; ++i) {
    const double py = frame.y(step * i);
    out += "<line x1=\"" + num(x0 - 4.0) + "\" y1=\"" + num(py) + "\" x2=\"" + num(x0) +
           "\" y2=\"" + num(py) + "\"/>\n";
    out += "<text x=\"" + num(x0 - 6.0) + "\" y=\"" + num(py + 4.0) +
           "\" stroke=\"none\" text-anchor=\"end\">" + tick(step * i) + "</text>\n";
  }
  out += "<text class=\"axis-label\" x=\"" + num(x0 + frame.width() / 2.0) + "\" y=\"" +
         num(y0 + 34.0) + "\" stroke=\"none\" text-anchor=\"middle\">WM</text>\n";
  out += "<text class=\"axis-label\" x=\"14\" y=\"" + num(frame.top() + frame.height() / 2.0) +
         "\" stroke=\"none\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
         num(frame.top() + frame.height() / 2.0) + ")\">WSD</text>\n";
  out += "</g>\n";
}

void draw_arrows(std::string& out, std::span<const Arrow> arrows, const PlotFrame& frame) {
  if (arrows.empty()) return;
  out += "<g class=\"arrows\" stroke=\"#000000\" stroke-width=\"0.8\">\n";
  for (const auto& a : arrows) {
    out += "<line class=\"arrow\" x1=\"" + num(frame.x(a.from.wm)) + "\" y1=\"" +
           num(frame.y(a.from.wsd)) + "\" x2=\"" + num(frame.x(a.to.wm)) + "\" y2=\"" +
           num(frame.y(a.to.wsd)) + "\" marker-end=\"url(#arrowhead)\"/>\n";
  }
  out += "</g>\n";
}

void draw_points(std::string& out, std::span<const PlotPoint> points, const PlotFrame& frame,
                 bool labels) {
  out += "<g class=\"points\" font-size=\"10\">\n";
  for (const auto& p : points) {
    const double cx = frame.x(p.at.wm);
    const double cy = frame.y(p.at.wsd);
    const bool solid = p.style == MarkerStyle::solid;
    out += "<circle class=\"marker " + std::string(solid ? "solid" : "hollow") +
           "\" data-id=\"" + escape(p.id) + "\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) +
           "\" r=\"" + num(kMarkerRadius) + "\" fill=\"" + (solid ? "#000000" : "none") +
           "\" stroke=\"" + (solid ? "#ffffff" : "#000000") + "\" stroke-width=\"1.2\"/>\n";
    if (labels && solid) {
      out += "<text class=\"label\" x=\"" + num(cx + 5.0) + "\" y=\"" + num(cy - 5.0) + "\">" +
             escape(p.id) + "</text>\n";
    }
  }
  out += "</g>\n";
}

void draw_panel(std::string& out, const PlotSpec& spec, std::span<const PlotPoint> points,
                std::span<const Arrow> arrows, double ox, double oy, std::size_t index) {
  validate(spec);
  const AttainableRegion region(spec.weights);
  const BoundaryEnvelope env = region.envelope(spec.boundary_resolution);
  const PlotFrame frame = frame_for(spec, env);
  check_points(region, points, spec.force);

  out += "<g class=\"panel\" transform=\"translate(" + num(ox) + "," + num(oy) + ")\">\n";
  if (!spec.title.empty()) {
    out += "<text class=\"title\" x=\"" + num(frame.left() + frame.width() / 2.0) +
           "\" y=\"18\" font-size=\"13\" text-anchor=\"middle\">" + escape(spec.title) +
           "</text>\n";
  }
  // Cells are kept or dropped by their centre; the clip only trims the
  // parts of boundary cells that stick out past the envelope.
  const std::string clip_id = "region-" + std::to_string(index);
  draw_clip(out, env, frame, clip_id);
  draw_field(out, spec, region, frame, clip_id);
  draw_boundary(out, env, frame);
  draw_isolines(out, spec, region, frame);
  draw_axes(out, frame);
  draw_arrows(out, arrows, frame);
  draw_points(out, points, frame, spec.labels);
  out += "</g>\n";
}

void draw_legend(std::string& out, double ox, double height) {
  constexpr int kStrips = 64;
  const double bar_top = 40.0;
  const double bar_height = std::max(40.0, std::min(300.0, height - 80.0));
  const double strip = bar_height / kStrips;
  out += "<g class=\"legend\" transform=\"translate(" + num(ox) + ",0)\" font-size=\"10\">\n";
  out += "<g shape-rendering=\"crispEdges\">\n";
  for (int i = 0; i < kStrips; ++i) {
    // top strip is the most preferred
    const double value = 1.0 - (i + 0.5) / kStrips;
    out += "<rect x=\"16\" y=\"" + num(bar_top + strip * i) + "\" width=\"16\" height=\"" +
           num(strip) + "\" fill=\"" + to_hex(colormap(value)) + "\"/>\n";
  }
  out += "</g>\n";
  out += "<rect x=\"16\" y=\"" + num(bar_top) + "\" width=\"16\" height=\"" + num(bar_height) +
         "\" fill=\"none\" stroke=\"#000000\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double value = i / 4.0;
    const double py = bar_top + (1.0 - value) * bar_height;
    out += "<text x=\"36\" y=\"" + num(py + 3.5) + "\">" + tick(value) + "</text>\n";
  }
  out += "</g>\n";
}

}  // namespace

int color_level(double value) noexcept {
  if (!(value >= 0.0)) value = 0.0;
  if (value > 1.0) value = 1.0;
  return static_cast<int>(std::lround(value * (kColorLevels - 1)));
}

Rgb level_color(int level) noexcept {
  level = std::clamp(level, 0, kColorLevels - 1);
  const double t = static_cast<double>(level) / (kColorLevels - 1) * 4.0;
  const int k = std::min(3, static_cast<int>(t));
  const double f = t - k;
  const Rgb a = kAnchors[static_cast<std::size_t>(k)];
  const Rgb b = kAnchors[static_cast<std::size_t>(k + 1)];
  auto mix = [f](std::uint8_t x, std::uint8_t y) {
    return static_cast<std::uint8_t>(std::lround(x + (y - x) * f));
  };
  return {mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)};
}

std::string to_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02X%02X%02X", c.r, c.g, c.b);
  return buf;
}

PlotFrame::PlotFrame(Canvas canvas, double wm_max, double wsd_max)
    : left_(kMarginLeft),
      top_(kMarginTop),
      width_(canvas.width - kMarginLeft - kMarginRight),
      height_(canvas.height - kMarginTop - kMarginBottom),
      wm_max_(wm_max),
      wsd_max_(wsd_max) {
  if (!(width_ > 0.0 && height_ > 0.0 && wm_max_ > 0.0 && wsd_max_ > 0.0)) {
    throw Error(ErrorCode::DegenerateCanvas, "canvas too small for the plot margins");
  }
}

PlotFrame frame_for(const PlotSpec& spec, const BoundaryEnvelope& env) {
  double peak = 0.0;
  for (const auto& p : env.outline) peak = std::max(peak, p.wsd);
  const double wsd_max = peak > 0.0 ? peak * 1.05 : 0.1 * env.mean_w;
  return PlotFrame(spec.canvas, env.mean_w, wsd_max);
}

std::string render_wmsd_plot(const PlotSpec& spec) {
  validate(spec);
  std::string out;
  svg_open(out, spec.canvas.width, spec.canvas.height);
  draw_panel(out, spec, spec.points, {}, 0.0, 0.0, 0);
  svg_close(out);
  return out;
}

std::string render_panel_grid(std::span<const PlotSpec> specs, std::size_t columns) {
  if (specs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "panel grid needs at least one plot");
  }
  if (columns == 0) {
    throw Error(ErrorCode::InvalidArgument, "panel grid needs at least one column");
  }
  columns = std::min(columns, specs.size());
  const std::size_t rows = (specs.size() + columns - 1) / columns;
  double cell_w = 0.0;
  double cell_h = 0.0;
  for (const auto& s : specs) {
    cell_w = std::max(cell_w, static_cast<double>(s.canvas.width));
    cell_h = std::max(cell_h, static_cast<double>(s.canvas.height));
  }
  const double width = cell_w * static_cast<double>(columns) + kLegendWidth;
  const double height = cell_h * static_cast<double>(rows);

  std::string out;
  svg_open(out, width, height);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    try {
      draw_panel(out, specs[i], specs[i].points, {}, cell_w * static_cast<double>(i % columns),
                 cell_h * static_cast<double>(i / columns), i);
    } catch (Error& e) {
      throw Error(e.code(), "panel " + std::to_string(i) + ": " + e.what())
          .with_id(e.id())
          .with_path("panels[" + std::to_string(i) + "]");
    }
  }
  draw_legend(out, cell_w * static_cast<double>(columns), height);
  svg_close(out);
  return out;
}

std::string render_overlay(const PlotSpec& base, std::span<const PlotPoint> snapshot_a,
                           std::span<const PlotPoint> snapshot_b) {
  validate(base);
  std::map<std::string, WmsdPoint> later;
  for (const auto& p : snapshot_b) later.emplace(p.id, p.at);
  if (later.size() != snapshot_b.size() || snapshot_a.size() != snapshot_b.size()) {
    throw Error(ErrorCode::IdSetMismatch, "overlay snapshots cover different ids");
  }

  std::vector<PlotPoint> points;
  std::vector<Arrow> arrows;
  for (const auto& p : snapshot_a) {
    auto it = later.find(p.id);
    if (it == later.end()) {
      throw Error(ErrorCode::IdSetMismatch, "'" + p.id + "' is missing from the second snapshot")
          .with_id(p.id);
    }
    const WmsdPoint to = it->second;
    if (std::abs(to.wm - p.at.wm) > 1e-12 || std::abs(to.wsd - p.at.wsd) > 1e-12) {
      arrows.push_back({p.at, to});
    }
  }
  for (const auto& p : snapshot_a) points.push_back({p.id, p.at, MarkerStyle::solid});
  for (const auto& p : snapshot_a) points.push_back({p.id, later[p.id], MarkerStyle::hollow});

  std::string out;
  svg_open(out, base.canvas.width, base.canvas.height);
  out += "<defs><marker id=\"arrowhead\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 Z\" "
         "fill=\"#000000\"/></marker></defs>\n";
  draw_panel(out, base, points, arrows, 0.0, 0.0, 0);
  svg_close(out);
  return out;
}

}  // namespace wmsd
