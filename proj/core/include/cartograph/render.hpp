#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cartograph/layout.hpp"

namespace cartograph {

enum class WeightMode { None, ColorRamp, Annotation, ProportionalWidth };
enum class WidthScale { Linear, Logarithmic };

struct RenderStyle {
  std::string latitude_color = "#808080";
  std::string longitude_dark_color = "#000000";
  std::string longitude_light_color = "#b3b3b3";
  std::string gap_underlay_color = "#808080";
  WeightMode weight_mode = WeightMode::None;
  WidthScale width_scale = WidthScale::Linear;
  // Ordered lightest (smallest weights) to most intense (largest).
  std::array<std::string, 4> ramp_buckets = {"#d3d3d3", "#a9a9a9", "#8b0000",
                                             "#ff0000"};
  std::string font_family = "Helvetica, Arial, sans-serif";
  double font_size = 3.5;
  // Band-width range for proportional-width mode, in layout units.
  double min_band_width = 0.5;
  double max_band_width = 3.5;
};

/// Resolved per-longitude presentation.
struct EdgeVisual {
  std::string color;
  double width = 0.0;
  std::optional<std::string> annotation;
};

/// Map weights to visual attributes per the style's weight mode. Weight
/// styling and comparison ink classes are mutually exclusive: when any
/// longitude carries light ink, the weight mode is ignored and plain
/// dark/light colors apply. Modes other than none require every longitude to
/// carry a weight (MissingWeight).
std::vector<EdgeVisual> apply_weight_style(std::span<const Longitude> longitudes,
                                           const RenderStyle& style);

/// Deterministic SVG 1.1 text: underlays, then light longitudes, then dark
/// longitudes, then destination markers, then labels, then annotations.
/// Byte-identical output for identical inputs.
std::string render_svg(const CartographicLayout& layout,
                       const RenderStyle& style);

/// Shortest decimal representation that round-trips to the same double.
std::string format_weight(double value);

/// Fixed 3-decimal coordinate formatting shared by the SVG and the layout
/// export ("-0.000" never appears).
std::string format_fixed3(double value);

}  // namespace cartograph
