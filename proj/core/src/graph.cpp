#include "cartograph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace cartograph {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidVertexId: return "invalid vertex id";
    case ErrorKind::DuplicateVertex: return "duplicate vertex";
    case ErrorKind::UnknownVertex: return "unknown vertex";
    case ErrorKind::ParallelEdge: return "parallel edge";
    case ErrorKind::LoopDisallowed: return "loop disallowed";
    case ErrorKind::NonFiniteWeight: return "non-finite weight";
    case ErrorKind::EmptyUniverse: return "empty universe";
    case ErrorKind::PositionOutOfRange: return "position out of range";
    case ErrorKind::MissingWeight: return "missing weight";
    case ErrorKind::UnknownEdge: return "unknown edge";
    case ErrorKind::DuplicateEdge: return "duplicate edge";
    case ErrorKind::MissingEdge: return "missing edge";
    case ErrorKind::NotAPermutation: return "not a permutation";
    case ErrorKind::OrderingMismatch: return "ordering mismatch";
    case ErrorKind::KindMismatch: return "kind mismatch";
    case ErrorKind::ParseError: return "parse error";
    case ErrorKind::InvalidOption: return "invalid option";
    case ErrorKind::IoError: return "io error";
  }
  return "error";
}

const char* to_string(DensityClass c) noexcept {
  return c == DensityClass::BigDense ? "BigDense" : "Other";
}

namespace {

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  if (id == "--" || id == "->" || id == "---") return false;
  if (id.front() == '#') return false;
  for (unsigned char c : id) {
    if (c <= 0x20 || c == 0x7f) return false;
  }
  return true;
}

}  // namespace

Graph::Graph(GraphKind kind, std::string name)
    : kind_(kind), name_(std::move(name)) {}

std::uint32_t Graph::add_vertex(std::string_view id,
                                std::optional<std::string> label) {
  if (!valid_id(id)) {
    throw Error(ErrorKind::InvalidVertexId,
                "invalid vertex id \"" + std::string(id) +
                    "\" (ids are non-empty whitespace-free tokens)");
  }
  std::string key(id);
  if (index_.contains(key)) {
    throw Error(ErrorKind::DuplicateVertex, "duplicate vertex id \"" + key + "\"");
  }
  auto handle = static_cast<std::uint32_t>(vertices_.size());
  index_.emplace(std::move(key), handle);
  vertices_.push_back(Vertex{std::string(id), std::move(label)});
  order_.push_back(handle);
  positions_.push_back(order_.size() - 1);
  return handle;
}

std::uint64_t Graph::pair_key(std::uint32_t u, std::uint32_t v) const {
  if (!kind_.directed && u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::size_t Graph::add_edge(std::string_view source, std::string_view target,
                            std::optional<double> weight,
                            std::optional<std::string> label) {
  std::uint32_t u = handle_of(source);
  std::uint32_t v = handle_of(target);
  if (u == v && !kind_.loops_allowed) {
    throw Error(ErrorKind::LoopDisallowed,
                "loop at vertex \"" + std::string(source) +
                    "\" but loops are not allowed");
  }
  if (weight && !std::isfinite(*weight)) {
    throw Error(ErrorKind::NonFiniteWeight,
                "edge \"" + std::string(source) + "\", \"" + std::string(target) +
                    "\" has a non-finite weight");
  }
  if (!edge_index_.emplace(pair_key(u, v), edges_.size()).second) {
    const char* arrow = kind_.directed ? " -> " : " -- ";
    throw Error(ErrorKind::ParallelEdge,
                "parallel edge \"" + std::string(source) + arrow +
                    std::string(target) + "\"");
  }
  if (!kind_.directed && u > v) std::swap(u, v);
  edges_.push_back(Edge{u, v, weight, std::move(label)});
  return edges_.size() - 1;
}

bool Graph::has_vertex(std::string_view id) const {
  return index_.find(std::string(id)) != index_.end();
}

std::uint32_t Graph::handle_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw Error(ErrorKind::UnknownVertex,
                "unknown vertex \"" + std::string(id) + "\"");
  }
  return it->second;
}

std::size_t Graph::position_of(std::string_view id) const {
  return positions_[handle_of(id)];
}

std::string Graph::edge_key(std::size_t i) const {
  const Edge& e = edges_[i];
  const char* arrow = kind_.directed ? " -> " : " -- ";
  return vertices_[e.u].id + arrow + vertices_[e.v].id;
}

std::optional<std::size_t> Graph::find_edge(std::string_view u,
                                            std::string_view v) const {
  auto iu = index_.find(std::string(u));
  auto iv = index_.find(std::string(v));
  if (iu == index_.end() || iv == index_.end()) return std::nullopt;
  auto it = edge_index_.find(pair_key(iu->second, iv->second));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::with_order(std::vector<std::uint32_t> order) const {
  if (order.size() != vertices_.size()) {
    throw Error(ErrorKind::NotAPermutation,
                "order has " + std::to_string(order.size()) + " entries for " +
                    std::to_string(vertices_.size()) + " vertices");
  }
  std::vector<std::size_t> positions(order.size());
  std::vector<bool> seen(order.size(), false);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::uint32_t h = order[pos];
    if (h >= vertices_.size() || seen[h]) {
      throw Error(ErrorKind::NotAPermutation, "order is not a permutation");
    }
    seen[h] = true;
    positions[h] = pos;
  }
  Graph g = *this;
  g.order_ = std::move(order);
  g.positions_ = std::move(positions);
  return g;
}

Graph complement(const Graph& g) {
  const GraphKind kind = g.kind();
  const std::size_t n = g.vertex_count();
  Graph out(kind, g.name());
  for (std::size_t pos = 0; pos < n; ++pos) {
    const Vertex& v = g.vertex_at(pos);
    out.add_vertex(v.id, v.label);
  }

  // Membership of position pairs, normalized the same way slots are.
  std::unordered_set<std::uint64_t> present;
  present.reserve(g.edge_count() * 2);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    std::uint64_t a = g.source_position(i);
    std::uint64_t b = g.target_position(i);
    if (!kind.directed && a > b) std::swap(a, b);
    present.insert(a * n + b);
  }

  for (std::size_t u = 0; u < n; ++u) {
    std::size_t v_begin = kind.directed ? 0 : (kind.loops_allowed ? u : u + 1);
    for (std::size_t v = v_begin; v < n; ++v) {
      if (u == v && !kind.loops_allowed) continue;
      if (present.contains(static_cast<std::uint64_t>(u) * n + v)) continue;
      out.add_edge(g.vertex_at(u).id, g.vertex_at(v).id);
    }
  }
  return out;
}

std::vector<VertexDegrees> degrees(const Graph& g) {
  std::vector<VertexDegrees> d(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    std::size_t sp = g.source_position(i);
    std::size_t tp = g.target_position(i);
    if (g.kind().directed) {
      d[sp].out += 1;
      d[tp].in += 1;
    } else if (sp == tp) {
      // loops count twice toward the plain degree
      d[sp].in += 2;
      d[sp].out += 2;
    } else {
      d[sp].in += 1;
      d[sp].out += 1;
      d[tp].in += 1;
      d[tp].out += 1;
    }
  }
  return d;
}

DensityClass classify_density(std::uint64_t vertex_count,
                              std::uint64_t edge_count) noexcept {
  using u128 = unsigned __int128;
  const u128 v3 = u128(vertex_count) * vertex_count * vertex_count;
  const u128 e2 = u128(edge_count) * edge_count;
  // Both inequalities strict: 10^6 < v^3 < e^2.
  if (v3 > 1'000'000 && e2 > v3) return DensityClass::BigDense;
  return DensityClass::Other;
}

DensityClass classify_density(const Graph& g) noexcept {
  return classify_density(g.vertex_count(), g.edge_count());
}

}  // namespace cartograph
