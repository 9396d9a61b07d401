#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartograph/graph.hpp"
#include "cartograph/layout.hpp"
#include "cartograph/ordering.hpp"
#include "cartograph/render.hpp"

namespace cartograph {

enum class GraphFormat { Json, EdgeList };

struct DocumentVertex {
  std::string id;
  std::optional<std::string> label;
};

struct DocumentEdge {
  std::string source;
  std::string target;
  std::optional<double> weight;
  std::optional<std::string> label;
};

/// Parsed-but-unvalidated graph description, as read from a JSON document.
struct GraphDocument {
  std::string name;
  GraphKind kind;
  std::vector<DocumentVertex> vertices;
  std::vector<DocumentEdge> edges;

  /// Construction-rule validation; diagnostics name the offending entry
  /// ("edges[3]: ..."). Edge endpoints missing from the vertex list are
  /// inferred in first-appearance order.
  Graph validate() const;
};

/// Edge-list text: one "u -- v [weight]" (undirected) or "u -> v [weight]"
/// (directed) per line, optional leading "directed" / "loops" directives,
/// bare "id" lines declaring vertices, '#' comments. Vertices are otherwise
/// inferred in first-appearance order. Diagnostics carry line and column.
Graph parse_edge_list(std::string_view text);

GraphDocument parse_graph_json_document(std::string_view text);
Graph parse_graph_json(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format);

/// Emitters invert the parsers: parse(emit(g)) reconstructs g exactly for
/// any graph the format can express (the edge-list format drops labels).
std::string emit_graph_json(const Graph& g);
std::string emit_edge_list(const Graph& g);

/// Custom-ordering text: one edge key per line ("u -- v" or "u -> v"), a
/// line containing only "---" is a gap marker, '#' comments.
std::vector<OrderingSpecItem> parse_ordering_spec(std::string_view text);

/// One vertex id per line, '#' comments.
VertexOrder parse_vertex_order(std::string_view text);

struct Config {
  LayoutOptions layout;
  RenderStyle style;
  OrderingStrategy strategy = OrderingStrategy::Canonical;
  SortDirection weight_direction = SortDirection::Ascending;
  bool show_absent = false;
  bool group_gaps = false;
  bool complement = false;
};

/// "key = value" lines over Config fields, '#' comments. Unknown keys and
/// malformed values are errors naming the line.
void apply_config(Config& config, std::string_view text);
Config parse_config(std::string_view text);

/// Machine-readable counterpart of the SVG: tab-separated records
///   canvas <width> <height>
///   latitude <id> <y_center> <band_height> <x0> <x1>
///   longitude <key> <x_center> <y_top> <y_bottom> <dark|light> <band_width>
///   gap <absent|separator> <x_center>
///   annotation <x> <y> <text>
std::string export_layout(const CartographicLayout& layout);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace cartograph
