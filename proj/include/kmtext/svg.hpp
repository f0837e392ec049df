#pragma once

// Deterministic SVG 1.1 charts. Every renderer is a pure function of its
// inputs and ChartStyle; coordinates are printed with two decimals.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kmtext/error.hpp"

namespace kmtext::svg {

struct ChartStyle {
  int width = 800;
  int height = 600;
  int margin = 50;
  std::string font_family = "Helvetica, Arial, sans-serif";
  std::vector<std::string> palette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

  void validate() const {
    if (width <= 2 * margin || height <= 2 * margin) throw ArgumentError("chart style: size must exceed 2 x margin");
    if (palette.empty()) throw ArgumentError("chart style: empty palette");
  }

  const std::string& color(std::size_t i) const { return palette[i % palette.size()]; }
};

/// Reference line color for the neutral (zero) level.
inline constexpr std::string_view kNeutralLineColor = "#ff7f0e";

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

inline std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        // Control characters are not allowed in XML 1.0.
        if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n' && c != '\r') {
          out.push_back(' ');
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

/// Comment bodies may not contain "--".
inline std::string comment_safe(std::string_view text) {
  std::string out = escape(text);
  for (std::size_t pos; (pos = out.find("--")) != std::string::npos;) out.replace(pos, 2, "- -");
  return out;
}

class Document {
 public:
  Document(const ChartStyle& style, std::string_view title) : style_(style) {
    style.validate();
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(style.width) +
            "\" height=\"" + std::to_string(style.height) + "\" viewBox=\"0 0 " + std::to_string(style.width) + " " +
            std::to_string(style.height) + "\" font-family=\"" + escape(style.font_family) + "\">\n";
    out_ += "<title>" + escape(title) + "</title>\n";
    out_ += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + std::to_string(style.width) + "\" height=\"" +
            std::to_string(style.height) + "\" fill=\"#ffffff\"/>\n";
  }

  Document& raw(std::string_view s) {
    out_ += s;
    return *this;
  }

  Document& line(double x1, double y1, double x2, double y2, std::string_view cls, std::string_view stroke,
                 double width = 1.0) {
    out_ += "<line class=\"" + std::string(cls) + "\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
            "\" y2=\"" + num(y2) + "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + num(width) + "\"/>\n";
    return *this;
  }

  Document& text(double x, double y, std::string_view content, std::string_view cls, double size = 12.0,
                 std::string_view anchor = "middle", std::string_view extra = {}) {
    out_ += "<text class=\"" + std::string(cls) + "\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" +
            num(size) + "\" text-anchor=\"" + std::string(anchor) + "\"";
    if (!extra.empty()) out_ += " " + std::string(extra);
    out_ += ">" + escape(content) + "</text>\n";
    return *this;
  }

  Document& comment(std::string_view body) {
    out_ += "<!-- " + comment_safe(body) + " -->\n";
    return *this;
  }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  const ChartStyle& style_;
  std::string out_;
};

inline std::string attr(std::string_view name, std::string_view value) {
  return std::string(name) + "=\"" + escape(value) + "\"";
}

/// Linear value -> pixel map.
struct Scale {
  double v0, v1, p0, p1;
  double operator()(double v) const { return p0 + (v - v0) / (v1 - v0) * (p1 - p0); }
};

// --- radar -------------------------------------------------------------------

struct RadarVertex {
  std::string label;
  double value;
  double x, y;
};

/// N spokes clockwise from 12 o'clock, vertex radius value / max x plot radius.
inline std::vector<RadarVertex> radar_vertices(const std::vector<std::pair<std::string, double>>& values,
                                               const ChartStyle& style) {
  if (values.size() < 3) throw ArgumentError("radar chart needs at least 3 labels");
  double max_value = 0.0;
  for (const auto& [label, v] : values) {
    if (!(v >= 0.0)) throw ArgumentError("radar chart value for '" + label + "' must be >= 0");
    max_value = std::max(max_value, v);
  }
  const double cx = style.width / 2.0, cy = style.height / 2.0;
  const double radius = std::min(style.width, style.height) / 2.0 - style.margin;
  std::vector<RadarVertex> out;
  const auto n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
    const double r = max_value > 0.0 ? values[i].second / max_value * radius : 0.0;
    out.push_back({values[i].first, values[i].second, cx + r * std::sin(angle), cy - r * std::cos(angle)});
  }
  return out;
}

inline std::string render_radar(const std::vector<std::pair<std::string, double>>& values, const ChartStyle& style = {},
                                std::string_view title = "Radar chart") {
  const auto vertices = radar_vertices(values, style);
  Document doc(style, title);
  const double cx = style.width / 2.0, cy = style.height / 2.0;
  const double radius = std::min(style.width, style.height) / 2.0 - style.margin;
  const auto n = values.size();
  auto spoke = [&](std::size_t i, double r) {
    const double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
    return std::pair{cx + r * std::sin(angle), cy - r * std::cos(angle)};
  };

  for (int ring = 1; ring <= 4; ++ring) {
    std::string pts;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [x, y] = spoke(i, radius * ring / 4.0);
      pts += (i ? " " : "") + num(x) + "," + num(y);
    }
    doc.raw("<polygon class=\"grid\" points=\"" + pts + "\" fill=\"none\" stroke=\"#dddddd\"/>\n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto [x, y] = spoke(i, radius);
    doc.line(cx, cy, x, y, "axis", "#999999");
    const auto [lx, ly] = spoke(i, radius + 14.0);
    doc.text(lx, ly + 4.0, values[i].first, "axis-label", 11.0);
  }
  std::string pts;
  for (std::size_t i = 0; i < n; ++i) pts += (i ? " " : "") + num(vertices[i].x) + "," + num(vertices[i].y);
  doc.raw("<polygon class=\"data\" points=\"" + pts + "\" fill=\"" + style.color(0) +
          "\" fill-opacity=\"0.35\" stroke=\"" + style.color(0) + "\" stroke-width=\"2.00\"/>\n");
  for (const auto& v : vertices) {
    doc.raw("<circle class=\"vertex\" " + attr("data-label", v.label) + " " + attr("data-value", num(v.value)) +
            " cx=\"" + num(v.x) + "\" cy=\"" + num(v.y) + "\" r=\"3.00\" fill=\"" + style.color(0) + "\"/>\n");
  }
  return doc.finish();
}

// --- scatter -----------------------------------------------------------------

struct ScatterPoint {
  double x;
  double y;
  std::string label;
};

struct Range {
  double lo;
  double hi;
};

inline std::string render_scatter(const std::vector<ScatterPoint>& points, Range x_range, Range y_range,
                                  const ChartStyle& style = {}, std::string_view title = "Scatter plot",
                                  std::string_view x_label = "", std::string_view y_label = "") {
  if (!(x_range.hi > x_range.lo) || !(y_range.hi > y_range.lo)) throw ArgumentError("scatter: degenerate range");
  Document doc(style, title);
  const double left = style.margin, right = style.width - style.margin;
  const double top = style.margin, bottom = style.height - style.margin;
  const Scale sx{x_range.lo, x_range.hi, left, right};
  const Scale sy{y_range.lo, y_range.hi, bottom, top};

  doc.line(left, bottom, right, bottom, "x-axis", "#333333");
  doc.line(left, bottom, left, top, "y-axis", "#333333");
  std::vector<double> x_ticks{x_range.lo};
  if (x_range.lo < 0.0 && 0.0 < x_range.hi) x_ticks.push_back(0.0);
  x_ticks.push_back(x_range.hi);
  for (double t : x_ticks) {
    doc.line(sx(t), bottom, sx(t), bottom + 5.0, "x-tick", "#333333");
    doc.text(sx(t), bottom + 18.0, num(t), "x-tick-label", 11.0, "middle", attr("data-value", num(t)));
  }
  if (x_range.lo < 0.0 && 0.0 < x_range.hi) doc.line(sx(0.0), bottom, sx(0.0), top, "x-zero", "#cccccc");
  for (double t : {y_range.lo, y_range.hi}) {
    doc.line(left - 5.0, sy(t), left, sy(t), "y-tick", "#333333");
    doc.text(left - 8.0, sy(t) + 4.0, num(t), "y-tick-label", 11.0, "end");
  }
  if (!x_label.empty()) doc.text((left + right) / 2.0, bottom + 36.0, x_label, "x-label", 13.0);
  if (!y_label.empty()) {
    doc.text(16.0, (top + bottom) / 2.0, y_label, "y-label", 13.0, "middle",
             "transform=\"rotate(-90 16.00 " + num((top + bottom) / 2.0) + ")\"");
  }

  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const double x = std::clamp(p.x, x_range.lo, x_range.hi);
    const double y = std::clamp(p.y, y_range.lo, y_range.hi);
    if (x != p.x || y != p.y) doc.comment("clamped: " + p.label);
    doc.raw("<circle class=\"point\" " + attr("data-label", p.label) + " cx=\"" + num(sx(x)) + "\" cy=\"" +
            num(sy(y)) + "\" r=\"5.00\" fill=\"" + style.color(i) + "\"/>\n");
    doc.text(sx(x) + 7.0, sy(y) - 7.0, p.label, "point-label", 10.0, "start");
  }
  return doc.finish();
}

// --- time series ---------------------------------------------------------------

struct LabeledSeries {
  std::string label;
  std::vector<std::pair<long, double>> points;  // strictly increasing index

  void validate() const {
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (points[i].first <= points[i - 1].first) {
        throw ArgumentError("series '" + label + "': indices must be strictly increasing");
      }
    }
  }
};

/// Small multiples, one panel per series, y fixed to [-1, 1] with an orange
/// neutral line at 0.
inline std::string render_timeseries(const std::vector<LabeledSeries>& series, const ChartStyle& style = {},
                                     std::string_view title = "Time series") {
  for (const auto& s : series) s.validate();
  Document doc(style, title);
  if (series.empty()) return doc.finish();
  const auto n = series.size();
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const auto rows = (n + cols - 1) / cols;
  const double area_w = style.width - 2.0 * style.margin;
  const double area_h = style.height - 2.0 * style.margin;
  const double cell_w = area_w / static_cast<double>(cols);
  const double cell_h = area_h / static_cast<double>(rows);
  const double pad = 6.0, title_h = 14.0;

  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = series[i];
    const double x0 = style.margin + static_cast<double>(i % cols) * cell_w + pad;
    const double y0 = style.margin + static_cast<double>(i / cols) * cell_h + pad + title_h;
    const double w = cell_w - 2.0 * pad;
    const double h = cell_h - 2.0 * pad - title_h;

    long lo = 0, hi = 1;
    if (!s.points.empty()) {
      lo = std::min(0L, s.points.front().first);
      hi = std::max(lo + 1, s.points.back().first);
    }
    const Scale sx{static_cast<double>(lo), static_cast<double>(hi), x0, x0 + w};
    const Scale sy{-1.0, 1.0, y0 + h, y0};

    doc.raw("<g class=\"panel\" " + attr("data-label", s.label) + ">\n");
    doc.raw("<rect class=\"frame\" x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(w) + "\" height=\"" +
            num(h) + "\" fill=\"none\" stroke=\"#cccccc\"/>\n");
    doc.text(x0 + w / 2.0, y0 - 4.0, s.label, "panel-title", 11.0);
    doc.line(x0, sy(0.0), x0 + w, sy(0.0), "zero-line", kNeutralLineColor, 1.5);
    std::string pts;
    for (const auto& [idx, value] : s.points) {
      pts += (pts.empty() ? "" : " ") + num(sx(static_cast<double>(idx))) + "," + num(sy(std::clamp(value, -1.0, 1.0)));
    }
    if (s.points.size() >= 2) {
      doc.raw("<polyline class=\"series\" points=\"" + pts + "\" fill=\"none\" stroke=\"" + style.color(0) +
              "\" stroke-width=\"1.50\"/>\n");
    }
    for (const auto& [idx, value] : s.points) {
      doc.raw("<circle class=\"marker\" cx=\"" + num(sx(static_cast<double>(idx))) + "\" cy=\"" +
              num(sy(std::clamp(value, -1.0, 1.0))) + "\" r=\"2.00\" fill=\"" + style.color(0) + "\"/>\n");
    }
    doc.raw("</g>\n");
  }
  return doc.finish();
}

// --- word cloud ----------------------------------------------------------------

struct Box {
  double x, y, w, h;  // top-left corner and size

  bool overlaps(const Box& o) const { return x < o.x + o.w && o.x < x + w && y < o.y + o.h && o.y < y + h; }
};

struct PlacedWord {
  std::string term;
  std::size_t count;
  double font_size;
  Box box;  // layout coordinates, before fitting to the canvas
};

inline std::size_t utf8_length(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) n += (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  return n;
}

inline Box word_box(double cx, double cy, std::string_view term, double font_size) {
  const double w = 0.6 * font_size * static_cast<double>(utf8_length(term));
  const double h = 1.1 * font_size;
  return {cx - w / 2.0, cy - h / 2.0, w, h};
}

/// Descending-count placement along an Archimedean spiral (r = 2 * theta
/// pixels, 0.1 rad steps) around the origin. No randomness.
inline std::vector<PlacedWord> layout_wordcloud(const std::vector<std::pair<std::string, std::size_t>>& freqs) {
  for (const auto& [term, count] : freqs) {
    if (count == 0) throw ArgumentError("word cloud: count for '" + term + "' must be > 0");
  }
  auto order = freqs;
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<PlacedWord> placed;
  if (order.empty()) return placed;
  const double lo = static_cast<double>(order.back().second);
  const double hi = static_cast<double>(order.front().second);

  for (const auto& [term, count] : order) {
    const double size = hi == lo ? 48.0 : 12.0 + (static_cast<double>(count) - lo) / (hi - lo) * 36.0;
    for (std::size_t step = 0;; ++step) {
      const double theta = 0.1 * static_cast<double>(step);
      const double r = 2.0 * theta;
      const Box box = word_box(r * std::cos(theta), r * std::sin(theta), term, size);
      const bool clear = std::none_of(placed.begin(), placed.end(), [&](const auto& p) { return p.box.overlaps(box); });
      if (clear) {
        placed.push_back({term, count, size, box});
        break;
      }
    }
  }
  return placed;
}

inline std::string render_wordcloud(const std::vector<std::pair<std::string, std::size_t>>& freqs,
                                    const ChartStyle& style = {}, std::string_view title = "Word cloud") {
  const auto placed = layout_wordcloud(freqs);
  Document doc(style, title);
  if (placed.empty()) return doc.finish();

  // Fit the layout's extent into the plot area; never enlarge.
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  for (const auto& p : placed) {
    min_x = std::min(min_x, p.box.x);
    min_y = std::min(min_y, p.box.y);
    max_x = std::max(max_x, p.box.x + p.box.w);
    max_y = std::max(max_y, p.box.y + p.box.h);
  }
  const double span = std::max({std::abs(min_x), std::abs(max_x)}) * 2.0;
  const double span_y = std::max({std::abs(min_y), std::abs(max_y)}) * 2.0;
  const double avail_w = style.width - 2.0 * style.margin, avail_h = style.height - 2.0 * style.margin;
  const double scale = std::min({1.0, avail_w / span, avail_h / span_y});
  doc.raw("<g class=\"cloud\" transform=\"translate(" + num(style.width / 2.0) + " " + num(style.height / 2.0) +
          ") scale(" + num(scale) + ")\">\n");
  for (std::size_t i = 0; i < placed.size(); ++i) {
    const auto& p = placed[i];
    const double cx = p.box.x + p.box.w / 2.0;
    // Baseline about a third of the box height below its centre.
    const double baseline = p.box.y + p.box.h * 0.8;
    doc.text(cx, baseline, p.term, "word", p.font_size, "middle",
             attr("data-count", std::to_string(p.count)) + " fill=\"" + style.color(i) + "\"");
  }
  doc.raw("</g>\n");
  return doc.finish();
}

// --- bars ----------------------------------------------------------------------

/// One bar per label in input order; height proportional to value / max.
/// Negative values draw as zero-height bars.
inline std::string render_bars(const std::vector<std::pair<std::string, double>>& values, const ChartStyle& style = {},
                               std::string_view title = "Bar chart") {
  Document doc(style, title);
  const double left = style.margin, right = style.width - style.margin;
  const double top = style.margin, bottom = style.height - style.margin;
  doc.line(left, bottom, right, bottom, "x-axis", "#333333");
  doc.line(left, bottom, left, top, "y-axis", "#333333");
  if (values.empty()) return doc.finish();

  double max_value = 0.0;
  for (const auto& [label, v] : values) max_value = std::max(max_value, v);
  const double slot = (right - left) / static_cast<double>(values.size());
  const double bar_w = slot * 0.7;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& [label, v] = values[i];
    const double h = max_value > 0.0 && v > 0.0 ? v / max_value * (bottom - top) : 0.0;
    const double x = left + slot * static_cast<double>(i) + (slot - bar_w) / 2.0;
    doc.raw("<rect class=\"bar\" " + attr("data-label", label) + " " + attr("data-value", num(v)) + " x=\"" + num(x) +
            "\" y=\"" + num(bottom - h) + "\" width=\"" + num(bar_w) + "\" height=\"" + num(h) + "\" fill=\"" +
            style.color(0) + "\"/>\n");
    doc.text(x + bar_w / 2.0, bottom - h - 4.0, num(v), "bar-value", 10.0);
    doc.text(x + bar_w / 2.0, bottom + 14.0, label, "bar-label", 10.0);
  }
  return doc.finish();
}

}  // namespace kmtext::svg
