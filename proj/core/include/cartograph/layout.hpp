#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartograph/graph.hpp"
#include "cartograph/ordering.hpp"

namespace cartograph {

enum class BandThickness { Thin, Thick };
enum class VertexLabelPlacement { OnBand, LeftMargin, RightMargin };
enum class EdgeLabelPlacement { OnBand, TopMargin, BottomMargin };
enum class MarkerGlyph { Arrowhead, Diamond };
enum class InkClass { Dark, Light };
enum class TextAlign { Start, Middle, End };

struct Margins {
  double top = 20.0;
  double right = 20.0;
  double bottom = 20.0;
  double left = 20.0;
};

struct LayoutOptions {
  double row_pitch = 10.0;
  double col_pitch = 4.0;
  BandThickness latitude_thickness = BandThickness::Thin;
  BandThickness longitude_thickness = BandThickness::Thin;
  Margins margins{};
  VertexLabelPlacement vertex_labels = VertexLabelPlacement::LeftMargin;
  EdgeLabelPlacement edge_labels = EdgeLabelPlacement::BottomMargin;
  MarkerGlyph marker = MarkerGlyph::Arrowhead;
  // Width of one group-separator gap, in column units.
  double separator_columns = 1.0;
  // Shorten each vertex underlay to its incident-edge span instead of the
  // full drawing width.
  bool trim_underlays = false;

  // Thin bands are one unit; thick bands take 60% of the pitch.
  double latitude_band_height() const {
    return latitude_thickness == BandThickness::Thin ? 1.0 : 0.6 * row_pitch;
  }
  double longitude_band_width() const {
    return longitude_thickness == BandThickness::Thin ? 1.0 : 0.6 * col_pitch;
  }
};

struct LabelAnchor {
  double x = 0.0;
  double y = 0.0;
  TextAlign align = TextAlign::Middle;
  // Rotated 90° about the anchor; used for texts under edge columns, which
  // would otherwise collide at default column pitch.
  bool rotated = false;
};

struct Latitude {
  std::string vertex;
  std::string text;  // display label: the vertex's label if set, else its id
  double y_center = 0.0;
  double band_height = 0.0;
  double underlay_x0 = 0.0;
  double underlay_x1 = 0.0;
  LabelAnchor label_anchor;
};

struct DestinationMarker {
  double y = 0.0;
  MarkerGlyph glyph = MarkerGlyph::Arrowhead;
};

struct Longitude {
  std::size_t edge = 0;
  std::uint64_t slot = 0;  // canonical slot index in the source graph
  std::string key;
  double x_center = 0.0;
  double band_width = 0.0;
  double y_top = 0.0;
  double y_bottom = 0.0;
  std::optional<DestinationMarker> destination_marker;
  InkClass ink_class = InkClass::Dark;
  bool is_loop = false;
  std::optional<double> weight;
  std::optional<std::string> label;
  LabelAnchor label_anchor;
};

struct GapColumn {
  double x_center = 0.0;
  GapKind purpose = GapKind::AbsentEdge;
  double band_width = 0.0;
};

struct Annotation {
  std::string text;
  double x = 0.0;
  double y = 0.0;
  TextAlign align = TextAlign::Start;
};

struct Canvas {
  double width = 0.0;
  double height = 0.0;
};

struct CartographicLayout {
  std::string title;
  bool directed = false;
  std::vector<Latitude> latitudes;
  std::vector<Longitude> longitudes;
  std::vector<GapColumn> gaps;
  std::vector<Annotation> annotations;
  Canvas canvas;

  // Shared geometry the renderer and exporter reuse.
  double underlay_x0 = 0.0;  // horizontal extent of full-width underlays
  double underlay_x1 = 0.0;
  double underlay_y0 = 0.0;  // vertical extent of absent-column underlays
  double underlay_y1 = 0.0;
  double weight_label_y = 0.0;  // baseline for bottom-margin weight texts
  double row_pitch = 0.0;
  double col_pitch = 0.0;
};

/// Resolve an ordering and a vertex order into absolute geometry. Latitude i
/// sits at y = top margin + i·row_pitch; column j at x = left margin +
/// j·col_pitch, gaps consuming column positions. The ordering must reference
/// exactly the graph's edges (OrderingMismatch otherwise); vorder must
/// permute its vertices (NotAPermutation); option invariants are enforced
/// (InvalidOption).
CartographicLayout compute_layout(const Graph& g, const EdgeOrdering& ordering,
                                  const VertexOrder& vorder,
                                  const LayoutOptions& opts);

/// Back-of-envelope physical size: (height, width) = (n_vertices, n_columns)
/// · resolution, margins excluded. Units follow the resolution's unit.
std::pair<double, double> estimate_canvas(std::uint64_t n_vertices,
                                          std::uint64_t n_columns,
                                          double resolution);

}  // namespace cartograph
