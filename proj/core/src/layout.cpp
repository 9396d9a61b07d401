#include "cartograph/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>
#include <unordered_map>

#include "cartograph/error.hpp"
#include "cartograph/incidence.hpp"

namespace cartograph {

namespace {

void validate_options(const LayoutOptions& opts) {
  if (!(opts.row_pitch > 0.0) || !(opts.col_pitch > 0.0)) {
    throw Error(ErrorKind::InvalidOption, "pitches must be strictly positive");
  }
  if (!(opts.latitude_band_height() < opts.row_pitch)) {
    throw Error(ErrorKind::InvalidOption,
                "latitude band height must be smaller than the row pitch");
  }
  if (!(opts.longitude_band_width() < opts.col_pitch)) {
    throw Error(ErrorKind::InvalidOption,
                "longitude band width must be smaller than the column pitch");
  }
  if (!(opts.separator_columns > 0.0)) {
    throw Error(ErrorKind::InvalidOption,
                "separator width must be strictly positive");
  }
  const Margins& m = opts.margins;
  if (m.top < 0.0 || m.right < 0.0 || m.bottom < 0.0 || m.left < 0.0) {
    throw Error(ErrorKind::InvalidOption, "margins must be non-negative");
  }
}

// Drawing row of each vertex handle under the given latitude order.
std::vector<std::uint32_t> rows_by_handle(const Graph& g,
                                          const VertexOrder& vorder) {
  if (vorder.size() != g.vertex_count()) {
    throw Error(ErrorKind::NotAPermutation,
                "vertex order lists " + std::to_string(vorder.size()) +
                    " ids, graph has " + std::to_string(g.vertex_count()));
  }
  std::vector<std::uint32_t> row_of(g.vertex_count(), 0);
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::uint32_t row = 0; row < vorder.size(); ++row) {
    if (!g.has_vertex(vorder[row])) {
      throw Error(ErrorKind::NotAPermutation,
                  "vertex order names unknown vertex '" + vorder[row] + "'");
    }
    const std::uint32_t handle = g.handle_of(vorder[row]);
    if (seen[handle]) {
      throw Error(ErrorKind::NotAPermutation,
                  "vertex order repeats vertex '" + vorder[row] + "'");
    }
    seen[handle] = true;
    row_of[handle] = row;
  }
  return row_of;
}

}  // namespace

CartographicLayout compute_layout(const Graph& g, const EdgeOrdering& ordering,
                                  const VertexOrder& vorder,
                                  const LayoutOptions& opts) {
  validate_options(opts);
  const std::vector<std::uint32_t> row_of = rows_by_handle(g, vorder);

  CartographicLayout layout;
  layout.title = g.name();
  layout.directed = g.kind().directed;
  layout.row_pitch = opts.row_pitch;
  layout.col_pitch = opts.col_pitch;

  const double lat_height = opts.latitude_band_height();
  const double lon_width = opts.longitude_band_width();
  const Margins& m = opts.margins;
  const std::size_t n = g.vertex_count();

  // Column positions first: x advances one unit per edge or absent-edge gap,
  // opts.separator_columns units per group separator.
  double units = 0.0;
  std::vector<bool> used(g.edge_count(), false);
  std::size_t used_count = 0;
  layout.longitudes.reserve(ordering.edge_column_count());
  for (const Column& column : ordering.columns) {
    if (column.is_gap) {
      GapColumn gap;
      gap.purpose = column.purpose;
      if (column.purpose == GapKind::GroupSeparator) {
        gap.x_center =
            m.left + (units + (opts.separator_columns - 1.0) / 2.0) *
                         opts.col_pitch;
        gap.band_width = opts.separator_columns * opts.col_pitch;
        units += opts.separator_columns;
      } else {
        gap.x_center = m.left + units * opts.col_pitch;
        gap.band_width = lon_width;
        units += 1.0;
      }
      layout.gaps.push_back(gap);
      continue;
    }
    if (column.edge >= g.edge_count()) {
      throw Error(ErrorKind::OrderingMismatch,
                  "ordering references edge index " +
                      std::to_string(column.edge) + ", graph has " +
                      std::to_string(g.edge_count()) + " edges");
    }
    if (used[column.edge]) {
      throw Error(ErrorKind::OrderingMismatch,
                  "ordering lists edge " + g.edge_key(column.edge) +
                      " more than once");
    }
    used[column.edge] = true;
    ++used_count;

    Longitude lon;
    lon.edge = column.edge;
    lon.slot = canonical_slot_of(g, column.edge);
    lon.key = g.edge_key(column.edge);
    lon.x_center = m.left + units * opts.col_pitch;
    lon.band_width = lon_width;
    lon.is_loop = g.is_loop(column.edge);
    lon.weight = g.edge(column.edge).weight;
    lon.label = g.edge(column.edge).label;
    units += 1.0;

    const double y_source =
        m.top + row_of[g.edge(column.edge).u] * opts.row_pitch;
    const double y_target =
        m.top + row_of[g.edge(column.edge).v] * opts.row_pitch;
    if (lon.is_loop) {
      // A loop is a stub of height 0.6·row_pitch centered on its latitude,
      // both ends on the one band.
      lon.y_top = y_source - 0.3 * opts.row_pitch;
      lon.y_bottom = y_source + 0.3 * opts.row_pitch;
    } else {
      lon.y_top = std::min(y_source, y_target);
      lon.y_bottom = std::max(y_source, y_target);
    }
    if (g.kind().directed) {
      lon.destination_marker = DestinationMarker{y_target, opts.marker};
    }
    layout.longitudes.push_back(std::move(lon));
  }
  if (used_count != g.edge_count()) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (!used[i]) {
        throw Error(ErrorKind::OrderingMismatch,
                    "ordering omits edge " + g.edge_key(i));
      }
    }
  }

  // Shared extents. An edgeless drawing still gets one column unit of
  // underlay width so latitudes stay visible.
  const double content_x1 =
      m.left + (units > 0.0 ? units - 1.0 : 0.0) * opts.col_pitch;
  const double content_y1 =
      m.top + (n > 0 ? static_cast<double>(n - 1) : 0.0) * opts.row_pitch;
  layout.underlay_x0 = std::max(0.0, m.left - 0.5 * opts.col_pitch);
  layout.underlay_x1 = content_x1 + 0.5 * opts.col_pitch;
  layout.underlay_y0 = m.top;
  layout.underlay_y1 = content_y1;
  layout.weight_label_y = content_y1 + 0.6 * opts.row_pitch;

  // Latitudes, top to bottom in vertex-order sequence.
  layout.latitudes.reserve(n);
  for (std::uint32_t row = 0; row < n; ++row) {
    Latitude lat;
    lat.vertex = vorder[row];
    const Vertex& v = g.vertex_of_handle(g.handle_of(vorder[row]));
    lat.text = v.label.has_value() ? *v.label : v.id;
    lat.y_center = m.top + row * opts.row_pitch;
    lat.band_height = lat_height;
    lat.underlay_x0 = layout.underlay_x0;
    lat.underlay_x1 = layout.underlay_x1;
    switch (opts.vertex_labels) {
      case VertexLabelPlacement::LeftMargin:
        lat.label_anchor = {layout.underlay_x0 - 0.3 * opts.col_pitch,
                            lat.y_center, TextAlign::End, false};
        break;
      case VertexLabelPlacement::RightMargin:
        lat.label_anchor = {layout.underlay_x1 + 0.3 * opts.col_pitch,
                            lat.y_center, TextAlign::Start, false};
        break;
      case VertexLabelPlacement::OnBand:
        lat.label_anchor = {(layout.underlay_x0 + layout.underlay_x1) / 2.0,
                            lat.y_center, TextAlign::Middle, false};
        break;
    }
    layout.latitudes.push_back(std::move(lat));
  }

  // Trim underlays to the incident-edge span where requested; isolated
  // vertices keep the full-width line (there is nothing to trim to).
  if (opts.trim_underlays && !layout.longitudes.empty()) {
    std::unordered_map<std::string_view, std::size_t> row_by_id;
    row_by_id.reserve(n);
    for (std::size_t row = 0; row < n; ++row) {
      row_by_id.emplace(layout.latitudes[row].vertex, row);
    }
    std::vector<std::pair<double, double>> span(
        n, {std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity()});
    for (const Longitude& lon : layout.longitudes) {
      for (const std::string_view id :
           {std::string_view(g.source_id(lon.edge)),
            std::string_view(g.target_id(lon.edge))}) {
        auto& [lo, hi] = span[row_by_id.at(id)];
        lo = std::min(lo, lon.x_center - lon.band_width / 2.0);
        hi = std::max(hi, lon.x_center + lon.band_width / 2.0);
      }
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (span[row].first <= span[row].second) {
        layout.latitudes[row].underlay_x0 = span[row].first;
        layout.latitudes[row].underlay_x1 = span[row].second;
      }
    }
  }

  // Edge label anchors need the final extents.
  for (Longitude& lon : layout.longitudes) {
    switch (opts.edge_labels) {
      case EdgeLabelPlacement::OnBand:
        lon.label_anchor = {lon.x_center, (lon.y_top + lon.y_bottom) / 2.0,
                            TextAlign::Middle, false};
        break;
      case EdgeLabelPlacement::TopMargin:
        lon.label_anchor = {lon.x_center, m.top - 0.35 * opts.row_pitch,
                            TextAlign::Start, true};
        break;
      case EdgeLabelPlacement::BottomMargin:
        lon.label_anchor = {lon.x_center, content_y1 + 0.35 * opts.row_pitch,
                            TextAlign::Start, true};
        break;
    }
  }

  layout.canvas.width = content_x1 + lon_width / 2.0 + m.right;
  layout.canvas.height = content_y1 + lat_height / 2.0 + m.bottom;
  // Landscape when there are at least as many column positions as latitudes:
  // pad the width if the pitches alone would not get there.
  if (ordering.columns.size() >= n) {
    layout.canvas.width = std::max(layout.canvas.width, layout.canvas.height);
  }
  return layout;
}

std::pair<double, double> estimate_canvas(std::uint64_t n_vertices,
                                          std::uint64_t n_columns,
                                          double resolution) {
  if (!(resolution > 0.0)) {
    throw Error(ErrorKind::InvalidOption,
                "resolution must be strictly positive");
  }
  return {static_cast<double>(n_vertices) * resolution,
          static_cast<double>(n_columns) * resolution};
}

}  // namespace cartograph
