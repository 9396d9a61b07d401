#include "cartograph/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <numeric>

#include "cartograph/error.hpp"

namespace cartograph {

namespace {

// Fixed 3-decimal formatting keeps coordinates byte-stable across platforms.
void append_fixed3(std::string& out, double value) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 3);
  std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
  if (text == "-0.000") text = "0.000";
  out.append(text);
}

void append_escaped(std::string& out, std::string_view text) {
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
}

void append_attr(std::string& out, std::string_view name, double value) {
  out += ' ';
  out += name;
  out += "=\"";
  append_fixed3(out, value);
  out += '"';
}

void append_attr(std::string& out, std::string_view name,
                 std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  append_escaped(out, value);
  out += '"';
}

void append_line(std::string& out, std::string_view css_class, double x1,
                 double y1, double x2, double y2, std::string_view color,
                 double width) {
  out += "<line";
  append_attr(out, "class", css_class);
  append_attr(out, "x1", x1);
  append_attr(out, "y1", y1);
  append_attr(out, "x2", x2);
  append_attr(out, "y2", y2);
  append_attr(out, "stroke", color);
  append_attr(out, "stroke-width", width);
  out += "/>\n";
}

void append_point(std::string& out, double x, double y, bool first) {
  if (!first) out += ' ';
  append_fixed3(out, x);
  out += ',';
  append_fixed3(out, y);
}

// Destination marker at the point where the longitude crosses its
// destination latitude: pointing down when that is the lower end, up when
// the upper, right for loops (where the crossing is mid-stub).
void append_marker(std::string& out, const Longitude& lon,
                   std::string_view color, double size) {
  const double x = lon.x_center;
  const double y = lon.destination_marker->y;
  out += "<polygon";
  append_attr(out, "class", std::string_view("marker"));
  out += " points=\"";
  if (lon.destination_marker->glyph == MarkerGlyph::Diamond) {
    append_point(out, x, y - 0.6 * size, true);
    append_point(out, x + 0.6 * size, y, false);
    append_point(out, x, y + 0.6 * size, false);
    append_point(out, x - 0.6 * size, y, false);
  } else if (lon.is_loop) {
    append_point(out, x + 0.6 * size, y, true);
    append_point(out, x - 0.4 * size, y - 0.5 * size, false);
    append_point(out, x - 0.4 * size, y + 0.5 * size, false);
  } else if (y >= lon.y_bottom) {
    append_point(out, x, y + 0.6 * size, true);
    append_point(out, x - 0.5 * size, y - 0.4 * size, false);
    append_point(out, x + 0.5 * size, y - 0.4 * size, false);
  } else {
    append_point(out, x, y - 0.6 * size, true);
    append_point(out, x - 0.5 * size, y + 0.4 * size, false);
    append_point(out, x + 0.5 * size, y + 0.4 * size, false);
  }
  out += '"';
  append_attr(out, "fill", color);
  out += "/>\n";
}

void append_text(std::string& out, std::string_view css_class,
                 const LabelAnchor& anchor, std::string_view content,
                 double font_size) {
  // SVG's text y is the baseline; shift horizontal text so the glyph body
  // centers on the anchor, and slide rotated text so it centers on the
  // column after the quarter turn.
  const double x = anchor.rotated ? anchor.x - 0.3 * font_size : anchor.x;
  const double y = anchor.rotated ? anchor.y : anchor.y + 0.35 * font_size;
  out += "<text";
  append_attr(out, "class", css_class);
  append_attr(out, "x", x);
  append_attr(out, "y", y);
  if (anchor.align == TextAlign::Middle) {
    append_attr(out, "text-anchor", std::string_view("middle"));
  } else if (anchor.align == TextAlign::End) {
    append_attr(out, "text-anchor", std::string_view("end"));
  }
  if (anchor.rotated) {
    out += " transform=\"rotate(90 ";
    append_fixed3(out, x);
    out += ' ';
    append_fixed3(out, y);
    out += ")\"";
  }
  out += '>';
  append_escaped(out, content);
  out += "</text>\n";
}

}  // namespace

std::string format_weight(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, static_cast<std::size_t>(res.ptr - buf));
}

std::string format_fixed3(double value) {
  std::string out;
  append_fixed3(out, value);
  return out;
}

std::vector<EdgeVisual> apply_weight_style(std::span<const Longitude> longitudes,
                                           const RenderStyle& style) {
  std::vector<EdgeVisual> visuals(longitudes.size());
  const bool has_light =
      std::any_of(longitudes.begin(), longitudes.end(), [](const Longitude& l) {
        return l.ink_class == InkClass::Light;
      });
  for (std::size_t i = 0; i < longitudes.size(); ++i) {
    visuals[i].color = longitudes[i].ink_class == InkClass::Light
                           ? style.longitude_light_color
                           : style.longitude_dark_color;
    visuals[i].width = longitudes[i].band_width;
  }
  // Comparison ink and weight styling are mutually exclusive per drawing.
  const WeightMode mode = has_light ? WeightMode::None : style.weight_mode;
  if (mode == WeightMode::None || longitudes.empty()) return visuals;

  const Longitude* missing = nullptr;
  for (const Longitude& lon : longitudes) {
    if (!lon.weight.has_value() && (!missing || lon.slot < missing->slot)) {
      missing = &lon;
    }
  }
  if (missing != nullptr) {
    throw Error(ErrorKind::MissingWeight,
                "edge " + missing->key + " has no weight");
  }

  switch (mode) {
    case WeightMode::ColorRamp: {
      // Rank-based quartiles; ties resolved by weight value, then slot.
      std::vector<std::size_t> order(longitudes.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) {
                  if (*longitudes[a].weight != *longitudes[b].weight) {
                    return *longitudes[a].weight < *longitudes[b].weight;
                  }
                  return longitudes[a].slot < longitudes[b].slot;
                });
      for (std::size_t rank = 0; rank < order.size(); ++rank) {
        visuals[order[rank]].color =
            style.ramp_buckets[rank * 4 / order.size()];
      }
      break;
    }
    case WeightMode::Annotation: {
      for (std::size_t i = 0; i < longitudes.size(); ++i) {
        visuals[i].annotation = format_weight(*longitudes[i].weight);
      }
      break;
    }
    case WeightMode::ProportionalWidth: {
      double w_min = *longitudes.front().weight;
      double w_max = w_min;
      for (const Longitude& lon : longitudes) {
        w_min = std::min(w_min, *lon.weight);
        w_max = std::max(w_max, *lon.weight);
      }
      for (std::size_t i = 0; i < longitudes.size(); ++i) {
        const double w = *longitudes[i].weight;
        double t = 1.0;  // constant-weight graphs draw at full width
        if (w_max > w_min) {
          t = style.width_scale == WidthScale::Linear
                  ? (w - w_min) / (w_max - w_min)
                  : std::log1p(w - w_min) / std::log1p(w_max - w_min);
        }
        visuals[i].width =
            style.min_band_width +
            (style.max_band_width - style.min_band_width) * t;
      }
      break;
    }
    case WeightMode::None:
      break;
  }
  return visuals;
}

std::string render_svg(const CartographicLayout& layout,
                       const RenderStyle& style) {
  const std::vector<EdgeVisual> visuals =
      apply_weight_style(layout.longitudes, style);

  std::string svg;
  svg.reserve(256 + 96 * layout.latitudes.size() +
              (layout.directed ? 256 : 152) * layout.longitudes.size() +
              96 * layout.gaps.size() + 96 * layout.annotations.size());

  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
  append_attr(svg, "width", layout.canvas.width);
  append_attr(svg, "height", layout.canvas.height);
  svg += " viewBox=\"0 0 ";
  append_fixed3(svg, layout.canvas.width);
  svg += ' ';
  append_fixed3(svg, layout.canvas.height);
  svg += "\">\n";
  if (!layout.title.empty()) {
    svg += "<title>";
    append_escaped(svg, layout.title);
    svg += "</title>\n";
  }

  // Underlays: latitudes top to bottom, then absent-edge columns left to
  // right. Group separators deliberately draw nothing.
  for (const Latitude& lat : layout.latitudes) {
    append_line(svg, "latitude", lat.underlay_x0, lat.y_center,
                lat.underlay_x1, lat.y_center, style.latitude_color,
                lat.band_height);
  }
  for (const GapColumn& gap : layout.gaps) {
    if (gap.purpose != GapKind::AbsentEdge) continue;
    append_line(svg, "gap", gap.x_center, layout.underlay_y0, gap.x_center,
                layout.underlay_y1, style.gap_underlay_color, gap.band_width);
  }

  const double tick = 0.45 * layout.col_pitch;
  auto draw_longitude = [&](std::size_t i) {
    const Longitude& lon = layout.longitudes[i];
    const bool light = lon.ink_class == InkClass::Light;
    append_line(svg, light ? "longitude light" : "longitude dark",
                lon.x_center, lon.y_top, lon.x_center, lon.y_bottom,
                visuals[i].color, visuals[i].width);
    if (lon.is_loop) {
      // Serif ticks keep both stub ends visible and identifiable as ends.
      append_line(svg, "loopend", lon.x_center - tick, lon.y_top,
                  lon.x_center + tick, lon.y_top, visuals[i].color,
                  visuals[i].width);
      append_line(svg, "loopend", lon.x_center - tick, lon.y_bottom,
                  lon.x_center + tick, lon.y_bottom, visuals[i].color,
                  visuals[i].width);
    }
  };
  for (std::size_t i = 0; i < layout.longitudes.size(); ++i) {
    if (layout.longitudes[i].ink_class == InkClass::Light) draw_longitude(i);
  }
  for (std::size_t i = 0; i < layout.longitudes.size(); ++i) {
    if (layout.longitudes[i].ink_class != InkClass::Light) draw_longitude(i);
  }

  const double marker_size = 0.85 * layout.col_pitch;
  for (std::size_t i = 0; i < layout.longitudes.size(); ++i) {
    if (layout.longitudes[i].destination_marker.has_value()) {
      append_marker(svg, layout.longitudes[i], visuals[i].color, marker_size);
    }
  }

  svg += "<g font-family=\"";
  append_escaped(svg, style.font_family);
  svg += "\"";
  append_attr(svg, "font-size", style.font_size);
  svg += " fill=\"#000000\">\n";
  for (const Latitude& lat : layout.latitudes) {
    append_text(svg, "vlabel", lat.label_anchor, lat.text, style.font_size);
  }
  for (const Longitude& lon : layout.longitudes) {
    if (lon.label.has_value()) {
      append_text(svg, "elabel", lon.label_anchor, *lon.label,
                  style.font_size);
    }
  }
  for (std::size_t i = 0; i < layout.longitudes.size(); ++i) {
    if (visuals[i].annotation.has_value()) {
      const LabelAnchor anchor{layout.longitudes[i].x_center,
                               layout.weight_label_y, TextAlign::Start, true};
      append_text(svg, "wlabel", anchor, *visuals[i].annotation,
                  style.font_size);
    }
  }
  for (const Annotation& note : layout.annotations) {
    const LabelAnchor anchor{note.x, note.y, note.align, false};
    append_text(svg, "annotation", anchor, note.text, style.font_size);
  }
  svg += "</g>\n";

  svg += "</svg>\n";
  return svg;
}

}  // namespace cartograph
