#include "cartograph/compare.hpp"

#include <algorithm>
#include <unordered_set>

#include "cartograph/error.hpp"
#include "cartograph/incidence.hpp"

namespace cartograph {

namespace {

// Cross-graph edge identity: endpoints and direction only. Ids cannot
// contain control characters, so a 0x1f separator is unambiguous.
std::string edge_identity(const Graph& g, std::size_t edge) {
  std::string u = g.source_id(edge);
  std::string v = g.target_id(edge);
  if (!g.kind().directed && v < u) std::swap(u, v);
  return u + '\x1f' + v;
}

ComparisonEdge carry_edge(const Graph& g, std::size_t edge) {
  return ComparisonEdge{g.source_id(edge), g.target_id(edge),
                        g.edge(edge).weight, g.edge(edge).label};
}

std::string display_name(const std::string& name, const char* fallback) {
  return name.empty() ? fallback : name;
}

}  // namespace

const char* to_string(Membership membership) noexcept {
  switch (membership) {
    case Membership::AOnly: return "A_only";
    case Membership::BOnly: return "B_only";
    case Membership::Both: return "both";
  }
  return "both";
}

ComparisonResult compare(const Graph& a, const Graph& b) {
  if (!(a.kind() == b.kind())) {
    throw Error(ErrorKind::KindMismatch,
                "cannot compare graphs of different kinds");
  }

  ComparisonResult result;
  result.kind = a.kind();
  result.a_name = a.name();
  result.b_name = b.name();

  result.union_vertices.reserve(a.vertex_count() + b.vertex_count());
  result.membership.reserve(a.vertex_count() + b.vertex_count());
  for (std::uint32_t p = 0; p < a.vertex_count(); ++p) {
    const std::string& id = a.vertex_at(p).id;
    result.union_vertices.push_back(id);
    result.membership.emplace(
        id, b.has_vertex(id) ? Membership::Both : Membership::AOnly);
  }
  for (std::uint32_t p = 0; p < b.vertex_count(); ++p) {
    const std::string& id = b.vertex_at(p).id;
    if (!a.has_vertex(id)) {
      result.union_vertices.push_back(id);
      result.membership.emplace(id, Membership::BOnly);
    }
  }

  std::unordered_set<std::string> b_keys;
  b_keys.reserve(b.edge_count());
  for (std::size_t i = 0; i < b.edge_count(); ++i) {
    b_keys.insert(edge_identity(b, i));
  }
  std::unordered_set<std::string> a_keys;
  a_keys.reserve(a.edge_count());
  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    a_keys.insert(edge_identity(a, i));
  }

  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    if (b_keys.contains(edge_identity(a, i))) {
      result.r_edges.push_back(carry_edge(a, i));
    } else {
      result.q_edges.push_back(carry_edge(a, i));
    }
  }
  for (std::size_t i = 0; i < b.edge_count(); ++i) {
    if (!a_keys.contains(edge_identity(b, i))) {
      result.s_edges.push_back(carry_edge(b, i));
    }
  }
  return result;
}

Graph derive_boolean(const ComparisonResult& result, BooleanOp op) {
  const std::string a = display_name(result.a_name, "A");
  const std::string b = display_name(result.b_name, "B");
  std::string name;
  bool take_q = false, take_r = false, take_s = false;
  switch (op) {
    case BooleanOp::DifferenceAB:
      name = a + " minus " + b;
      take_q = true;
      break;
    case BooleanOp::Intersection:
      name = a + " intersect " + b;
      take_r = true;
      break;
    case BooleanOp::DifferenceBA:
      name = b + " minus " + a;
      take_s = true;
      break;
    case BooleanOp::Union:
      name = a + " union " + b;
      take_q = take_r = take_s = true;
      break;
    case BooleanOp::SymmetricDifference:
      name = a + " symdiff " + b;
      take_q = take_s = true;
      break;
  }

  Graph g(result.kind, name);
  for (const std::string& id : result.union_vertices) {
    g.add_vertex(id);
  }
  auto add_all = [&g](const std::vector<ComparisonEdge>& edges) {
    for (const ComparisonEdge& e : edges) {
      g.add_edge(e.source, e.target, e.weight, e.label);
    }
  };
  if (take_q) add_all(result.q_edges);
  if (take_r) add_all(result.r_edges);
  if (take_s) add_all(result.s_edges);
  return g;
}

CartographicLayout comparison_layout(const ComparisonResult& result,
                                     const VertexOrder& vorder,
                                     const LayoutOptions& opts) {
  // The drawing is a layout of the union graph with edges inserted group by
  // group, so index ranges identify Q, R, and S.
  Graph u = derive_boolean(result, BooleanOp::Union);
  const std::size_t q_end = result.q_edges.size();
  const std::size_t r_end = q_end + result.r_edges.size();

  EdgeOrdering ordering;
  ordering.strategy = OrderingStrategy::Custom;
  ordering.columns.reserve(u.edge_count() + 2);
  struct Slotted {
    std::uint64_t slot;
    std::size_t edge;
  };
  bool any_group = false;
  for (const auto& [begin, end] :
       {std::pair<std::size_t, std::size_t>{0, q_end},
        {q_end, r_end},
        {r_end, u.edge_count()}}) {
    if (begin == end) continue;
    if (any_group) {
      ordering.columns.push_back(Column::gap(GapKind::GroupSeparator));
    }
    any_group = true;
    std::vector<Slotted> group;
    group.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      group.push_back({canonical_slot_of(u, i), i});
    }
    std::sort(group.begin(), group.end(),
              [](const Slotted& a, const Slotted& b) {
                return a.slot < b.slot;
              });
    for (const Slotted& s : group) {
      ordering.columns.push_back(Column::edge_ref(s.edge));
    }
  }

  CartographicLayout layout = compute_layout(u, ordering, vorder, opts);
  layout.title = display_name(result.a_name, "A") + " vs " +
                 display_name(result.b_name, "B");
  for (Longitude& lon : layout.longitudes) {
    if (lon.edge >= q_end && lon.edge < r_end) {
      lon.ink_class = InkClass::Light;
    }
  }

  // Right-margin notes for vertices missing from one side.
  const double note_x = layout.underlay_x1 + 0.3 * opts.col_pitch;
  const double font_estimate = 0.35 * opts.row_pitch;
  double needed_width = layout.canvas.width;
  for (const Latitude& lat : layout.latitudes) {
    const Membership membership = result.membership.at(lat.vertex);
    if (membership == Membership::Both) continue;
    Annotation note;
    note.text = "absent from " + (membership == Membership::AOnly
                                      ? display_name(result.b_name, "B")
                                      : display_name(result.a_name, "A"));
    note.x = note_x;
    note.y = lat.y_center;
    note.align = TextAlign::Start;
    needed_width = std::max(
        needed_width, note_x + 0.6 * font_estimate *
                                   static_cast<double>(note.text.size()) +
                          0.5 * opts.col_pitch);
    layout.annotations.push_back(std::move(note));
  }
  layout.canvas.width = needed_width;
  return layout;
}

}  // namespace cartograph
