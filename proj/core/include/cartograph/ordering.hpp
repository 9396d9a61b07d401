#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cartograph/graph.hpp"

namespace cartograph {

enum class GapKind { AbsentEdge, GroupSeparator };

/// One x position of a drawing: either a reference to an edge of the source
/// graph or a deliberate blank.
struct Column {
  static constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

  bool is_gap = false;
  GapKind purpose = GapKind::AbsentEdge;
  std::size_t edge = kNoEdge;

  static Column edge_ref(std::size_t index) {
    return Column{false, GapKind::AbsentEdge, index};
  }
  static Column gap(GapKind purpose) {
    return Column{true, purpose, kNoEdge};
  }
};

enum class OrderingStrategy { Canonical, OutDegree, InDegree, Weight, Custom };
enum class DegreeEndpoint { Origin, Destination };
enum class SortDirection { Ascending, Descending };

struct EdgeOrdering {
  OrderingStrategy strategy = OrderingStrategy::Canonical;
  std::vector<Column> columns;

  std::size_t edge_column_count() const;
  std::size_t gap_count(GapKind purpose) const;
};

/// Latitude order: vertex ids, each exactly once.
using VertexOrder = std::vector<std::string>;

VertexOrder identity_order(const Graph& g);

/// Row-major adjacency-matrix order. With show_absent, unoccupied slots
/// become absent-edge gaps; with group_gaps, one separator is placed between
/// consecutive nonempty row groups.
EdgeOrdering order_canonical(const Graph& g, bool show_absent,
                             bool group_gaps);

/// Edges grouped by origin (source) or destination (target) vertex, groups
/// sorted by that vertex's out-/in-degree descending with ties broken by
/// vertex order, canonical slot order within a group, one separator between
/// groups. Undirected graphs group by the lower-position endpoint and use the
/// plain degree for both endpoint choices.
EdgeOrdering order_by_degree(const Graph& g, DegreeEndpoint endpoint);

/// Sorted by weight, ties broken by canonical slot index. Every edge must
/// carry a weight; throws MissingWeight naming the first weightless edge in
/// canonical slot order.
EdgeOrdering order_by_weight(const Graph& g, SortDirection direction);

/// One entry of a user-supplied ordering: an edge key or a gap marker.
struct OrderingSpecItem {
  bool gap = false;
  bool directed_arrow = false;
  std::string source;
  std::string target;

  std::string key() const {
    return source + (directed_arrow ? " -> " : " -- ") + target;
  }
};

/// Columns exactly as specified. The spec must cover every edge of g exactly
/// once; throws UnknownEdge / DuplicateEdge / MissingEdge naming the key.
EdgeOrdering order_custom(const Graph& g,
                          std::span<const OrderingSpecItem> spec);

/// Same graph with its vertex list reordered; edge set unchanged, canonical
/// slots re-derive from the new positions. Throws NotAPermutation.
Graph permute_vertices(const Graph& g, const VertexOrder& order);

}  // namespace cartograph
