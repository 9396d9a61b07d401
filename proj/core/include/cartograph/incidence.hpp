#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cartograph/graph.hpp"

namespace cartograph {

/// Number of edge slots of the complete graph on n vertices:
///   undirected             n(n-1)/2
///   undirected with loops  n(n+1)/2
///   directed               n(n-1)
///   directed with loops    n*n
/// Throws EmptyUniverse for n == 0.
std::uint64_t edge_slot_count(std::size_t n, GraphKind kind);

/// 0-based rank of the endpoint pair (positions in the current vertex order)
/// under a row-major traversal of the adjacency matrix's stored region:
/// upper triangle for undirected kinds, full off-diagonal matrix for directed,
/// diagonal included iff loops are allowed.
std::uint64_t canonical_slot_index(std::size_t u_pos, std::size_t v_pos,
                                   std::size_t n, GraphKind kind);

/// Inverse of canonical_slot_index. For undirected kinds the returned pair
/// satisfies first <= second.
std::pair<std::size_t, std::size_t> slot_endpoints(std::uint64_t slot,
                                                   std::size_t n,
                                                   GraphKind kind);

/// Half-open slot range [begin, end) of adjacency-matrix row `row`. Rows with
/// no stored slots (the last row of a loop-free undirected matrix) are empty.
std::pair<std::uint64_t, std::uint64_t> slot_row_span(std::size_t row,
                                                      std::size_t n,
                                                      GraphKind kind);

/// Canonical slot of edge i of g, derived from the current vertex positions.
std::uint64_t canonical_slot_of(const Graph& g, std::size_t edge);

/// Sparse view of the augmented incidence matrix: the full slot table exists
/// only as the pair of bijective index functions, occupied columns as a
/// sorted index list. Never materialized densely.
class AugmentedIncidenceMatrix {
 public:
  AugmentedIncidenceMatrix(std::size_t n, GraphKind kind,
                           std::vector<std::uint64_t> occupied);

  std::size_t vertex_count() const noexcept { return n_; }
  GraphKind kind() const noexcept { return kind_; }
  std::uint64_t slot_count() const noexcept { return slot_count_; }

  /// Sorted ascending; one entry per edge of the source graph.
  const std::vector<std::uint64_t>& occupied() const noexcept {
    return occupied_;
  }
  bool is_occupied(std::uint64_t slot) const;

  std::pair<std::size_t, std::size_t> endpoints(std::uint64_t slot) const {
    return slot_endpoints(slot, n_, kind_);
  }
  std::uint64_t slot_of(std::size_t u_pos, std::size_t v_pos) const {
    return canonical_slot_index(u_pos, v_pos, n_, kind_);
  }

 private:
  std::size_t n_;
  GraphKind kind_;
  std::uint64_t slot_count_;
  std::vector<std::uint64_t> occupied_;
};

AugmentedIncidenceMatrix build_augmented_incidence(const Graph& g);

}  // namespace cartograph
