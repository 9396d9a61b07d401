#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cartograph/error.hpp"

namespace cartograph {

struct GraphKind {
  bool directed = false;
  bool loops_allowed = false;

  friend bool operator==(const GraphKind&, const GraphKind&) = default;
};

struct Vertex {
  std::string id;
  std::optional<std::string> label;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Immutable-after-construction graph value. Vertices keep their insertion
/// handles for the whole lifetime; the display order (which drives latitude
/// placement and canonical edge slots) is a separate permutation that
/// `with_order` can replace without touching the edge set.
///
/// Undirected edges are normalized at insertion to (lower handle, higher
/// handle) so set membership and edge keys are canonical.
class Graph {
 public:
  struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    std::optional<double> weight;
    std::optional<std::string> label;
  };

  explicit Graph(GraphKind kind, std::string name = {});

  const GraphKind& kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Ids must be non-empty, free of whitespace/control bytes, must not start
  /// with '#', and must not collide with the edge-list tokens "--", "->",
  /// "---". Throws InvalidVertexId / DuplicateVertex.
  std::uint32_t add_vertex(std::string_view id,
                           std::optional<std::string> label = {});

  /// Throws UnknownVertex, LoopDisallowed, ParallelEdge, NonFiniteWeight.
  std::size_t add_edge(std::string_view source, std::string_view target,
                       std::optional<double> weight = {},
                       std::optional<std::string> label = {});

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(std::string_view id) const;
  std::uint32_t handle_of(std::string_view id) const;
  std::size_t position_of(std::string_view id) const;
  std::size_t position_of_handle(std::uint32_t handle) const {
    return positions_[handle];
  }
  std::uint32_t handle_at(std::size_t position) const {
    return order_[position];
  }
  const Vertex& vertex_at(std::size_t position) const {
    return vertices_[order_[position]];
  }
  const Vertex& vertex_of_handle(std::uint32_t handle) const {
    return vertices_[handle];
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  bool is_loop(std::size_t i) const {
    return edges_[i].u == edges_[i].v;
  }
  const std::string& source_id(std::size_t i) const {
    return vertices_[edges_[i].u].id;
  }
  const std::string& target_id(std::size_t i) const {
    return vertices_[edges_[i].v].id;
  }
  std::size_t source_position(std::size_t i) const {
    return positions_[edges_[i].u];
  }
  std::size_t target_position(std::size_t i) const {
    return positions_[edges_[i].v];
  }

  /// "u -- v" for undirected edges, "u -> v" for directed ones. Stable under
  /// vertex reordering.
  std::string edge_key(std::size_t i) const;

  /// Kind-aware lookup; for undirected graphs either endpoint order matches.
  std::optional<std::size_t> find_edge(std::string_view u,
                                       std::string_view v) const;

  /// Same graph with the display order replaced. `order` must hold each
  /// vertex handle exactly once.
  Graph with_order(std::vector<std::uint32_t> order) const;

 private:
  GraphKind kind_;
  std::string name_;
  std::vector<Vertex> vertices_;              // indexed by handle
  std::vector<std::uint32_t> order_;          // position -> handle
  std::vector<std::size_t> positions_;        // handle -> position
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;

  std::uint64_t pair_key(std::uint32_t u, std::uint32_t v) const;
};

enum class DensityClass { BigDense, Other };

struct VertexDegrees {
  std::size_t in = 0;
  std::size_t out = 0;
};

/// Kind-appropriate complete edge set minus g's edges, on the same vertices
/// in the same order. Weights and edge labels are dropped.
Graph complement(const Graph& g);

/// Indexed by current vertex position. Undirected: in == out == incident
/// count with loops counting twice. Directed: a loop contributes one of each.
std::vector<VertexDegrees> degrees(const Graph& g);

DensityClass classify_density(std::uint64_t vertex_count,
                              std::uint64_t edge_count) noexcept;
DensityClass classify_density(const Graph& g) noexcept;

const char* to_string(DensityClass c) noexcept;

}  // namespace cartograph
