#include "cartograph/ordering.hpp"

#include <algorithm>
#include <unordered_set>

#include "cartograph/error.hpp"
#include "cartograph/incidence.hpp"

namespace cartograph {

namespace {

struct SlottedEdge {
  std::uint64_t slot;
  std::size_t edge;
};

// Every edge paired with its canonical slot, sorted row-major. This never
// materializes the slot universe, so it stays O(e log e) even for sparse
// graphs over large vertex sets.
std::vector<SlottedEdge> edges_by_slot(const Graph& g) {
  std::vector<SlottedEdge> slotted;
  slotted.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    slotted.push_back({canonical_slot_of(g, i), i});
  }
  std::sort(slotted.begin(), slotted.end(),
            [](const SlottedEdge& a, const SlottedEdge& b) {
              return a.slot < b.slot;
            });
  return slotted;
}

// Adjacency-matrix row a canonical slot belongs to: the source for digraphs,
// the lower-positioned endpoint otherwise.
std::uint32_t row_of_edge(const Graph& g, std::size_t edge) {
  const std::uint32_t u = g.source_position(edge);
  const std::uint32_t v = g.target_position(edge);
  if (g.kind().directed) return u;
  return u < v ? u : v;
}

}  // namespace

std::size_t EdgeOrdering::edge_column_count() const {
  std::size_t count = 0;
  for (const Column& c : columns) {
    if (!c.is_gap) ++count;
  }
  return count;
}

std::size_t EdgeOrdering::gap_count(GapKind purpose) const {
  std::size_t count = 0;
  for (const Column& c : columns) {
    if (c.is_gap && c.purpose == purpose) ++count;
  }
  return count;
}

VertexOrder identity_order(const Graph& g) {
  VertexOrder order;
  order.reserve(g.vertex_count());
  for (std::uint32_t p = 0; p < g.vertex_count(); ++p) {
    order.push_back(g.vertex_at(p).id);
  }
  return order;
}

EdgeOrdering order_canonical(const Graph& g, bool show_absent,
                             bool group_gaps) {
  EdgeOrdering ordering;
  ordering.strategy = OrderingStrategy::Canonical;
  const std::uint64_t n = g.vertex_count();
  if (n == 0) return ordering;

  const std::vector<SlottedEdge> slotted = edges_by_slot(g);

  if (!show_absent) {
    // Present edges only: walk them in slot order and note row changes.
    ordering.columns.reserve(slotted.size() + (group_gaps ? n : 0));
    bool have_row = false;
    std::uint32_t current_row = 0;
    for (const SlottedEdge& se : slotted) {
      const std::uint32_t row = row_of_edge(g, se.edge);
      if (group_gaps && have_row && row != current_row) {
        ordering.columns.push_back(Column::gap(GapKind::GroupSeparator));
      }
      current_row = row;
      have_row = true;
      ordering.columns.push_back(Column::edge_ref(se.edge));
    }
    return ordering;
  }

  // Full slot universe: every unoccupied slot becomes an absent-edge gap.
  ordering.columns.reserve(edge_slot_count(n, g.kind()) + (group_gaps ? n : 0));
  std::size_t next = 0;
  bool emitted_group = false;
  for (std::uint32_t row = 0; row < n; ++row) {
    const auto [lo, hi] = slot_row_span(row, n, g.kind());
    if (lo == hi) continue;
    if (group_gaps && emitted_group) {
      ordering.columns.push_back(Column::gap(GapKind::GroupSeparator));
    }
    emitted_group = true;
    for (std::uint64_t slot = lo; slot < hi; ++slot) {
      if (next < slotted.size() && slotted[next].slot == slot) {
        ordering.columns.push_back(Column::edge_ref(slotted[next].edge));
        ++next;
      } else {
        ordering.columns.push_back(Column::gap(GapKind::AbsentEdge));
      }
    }
  }
  return ordering;
}

EdgeOrdering order_by_degree(const Graph& g, DegreeEndpoint endpoint) {
  EdgeOrdering ordering;
  ordering.strategy = endpoint == DegreeEndpoint::Origin
                          ? OrderingStrategy::OutDegree
                          : OrderingStrategy::InDegree;
  if (g.vertex_count() == 0) return ordering;

  const std::vector<VertexDegrees> deg = degrees(g);

  // Group key per edge: chosen endpoint for digraphs, the lower-positioned
  // endpoint otherwise (where in- and out-degree coincide anyway).
  auto group_vertex = [&](std::size_t edge) -> std::uint32_t {
    const std::uint32_t u = g.source_position(edge);
    const std::uint32_t v = g.target_position(edge);
    if (!g.kind().directed) return u < v ? u : v;
    return endpoint == DegreeEndpoint::Origin ? u : v;
  };
  auto group_degree = [&](std::uint32_t position) -> std::size_t {
    return endpoint == DegreeEndpoint::Origin ? deg[position].out
                                              : deg[position].in;
  };

  struct Keyed {
    std::size_t degree;
    std::uint32_t vertex;
    std::uint64_t slot;
    std::size_t edge;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const std::uint32_t v = group_vertex(i);
    keyed.push_back({group_degree(v), v, canonical_slot_of(g, i), i});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.vertex != b.vertex) return a.vertex < b.vertex;
    return a.slot < b.slot;
  });

  ordering.columns.reserve(keyed.size() + g.vertex_count());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].vertex != keyed[i - 1].vertex) {
      ordering.columns.push_back(Column::gap(GapKind::GroupSeparator));
    }
    ordering.columns.push_back(Column::edge_ref(keyed[i].edge));
  }
  return ordering;
}

EdgeOrdering order_by_weight(const Graph& g, SortDirection direction) {
  EdgeOrdering ordering;
  ordering.strategy = OrderingStrategy::Weight;

  struct Weighted {
    double weight;
    std::uint64_t slot;
    std::size_t edge;
  };
  std::vector<Weighted> weighted;
  weighted.reserve(g.edge_count());
  std::uint64_t missing_slot = 0;
  std::size_t missing_edge = 0;
  bool missing = false;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const std::uint64_t slot = canonical_slot_of(g, i);
    if (!g.edge(i).weight.has_value()) {
      if (!missing || slot < missing_slot) {
        missing_slot = slot;
        missing_edge = i;
        missing = true;
      }
      continue;
    }
    weighted.push_back({*g.edge(i).weight, slot, i});
  }
  if (missing) {
    throw Error(ErrorKind::MissingWeight,
                "edge " + g.edge_key(missing_edge) + " has no weight");
  }

  std::sort(weighted.begin(), weighted.end(),
            [direction](const Weighted& a, const Weighted& b) {
              if (a.weight != b.weight) {
                return direction == SortDirection::Ascending
                           ? a.weight < b.weight
                           : a.weight > b.weight;
              }
              return a.slot < b.slot;
            });

  ordering.columns.reserve(weighted.size());
  for (const Weighted& w : weighted) {
    ordering.columns.push_back(Column::edge_ref(w.edge));
  }
  return ordering;
}

EdgeOrdering order_custom(const Graph& g,
                          std::span<const OrderingSpecItem> spec) {
  EdgeOrdering ordering;
  ordering.strategy = OrderingStrategy::Custom;
  ordering.columns.reserve(spec.size());

  std::vector<bool> used(g.edge_count(), false);
  std::size_t used_count = 0;
  for (const OrderingSpecItem& item : spec) {
    if (item.gap) {
      ordering.columns.push_back(Column::gap(GapKind::GroupSeparator));
      continue;
    }
    std::optional<std::size_t> edge;
    if (item.directed_arrow == g.kind().directed) {
      edge = g.find_edge(item.source, item.target);
    }
    if (!edge.has_value()) {
      throw Error(ErrorKind::UnknownEdge,
                  "ordering names edge " + item.key() +
                      ", which is not in the graph");
    }
    if (used[*edge]) {
      throw Error(ErrorKind::DuplicateEdge,
                  "ordering lists edge " + item.key() + " more than once");
    }
    used[*edge] = true;
    ++used_count;
    ordering.columns.push_back(Column::edge_ref(*edge));
  }

  if (used_count != g.edge_count()) {
    // Name the first omitted edge in canonical slot order.
    const std::vector<SlottedEdge> slotted = edges_by_slot(g);
    for (const SlottedEdge& se : slotted) {
      if (!used[se.edge]) {
        throw Error(ErrorKind::MissingEdge,
                    "ordering omits edge " + g.edge_key(se.edge));
      }
    }
  }
  return ordering;
}

Graph permute_vertices(const Graph& g, const VertexOrder& order) {
  if (order.size() != g.vertex_count()) {
    throw Error(ErrorKind::NotAPermutation,
                "vertex order lists " + std::to_string(order.size()) +
                    " ids, graph has " + std::to_string(g.vertex_count()));
  }
  std::vector<std::uint32_t> handles;
  handles.reserve(order.size());
  std::unordered_set<std::uint32_t> seen;
  for (const std::string& id : order) {
    if (!g.has_vertex(id)) {
      throw Error(ErrorKind::NotAPermutation,
                  "vertex order names unknown vertex '" + id + "'");
    }
    const std::uint32_t handle = g.handle_of(id);
    if (!seen.insert(handle).second) {
      throw Error(ErrorKind::NotAPermutation,
                  "vertex order repeats vertex '" + id + "'");
    }
    handles.push_back(handle);
  }
  return g.with_order(std::move(handles));
}

}  // namespace cartograph
