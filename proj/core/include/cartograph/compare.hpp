#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cartograph/graph.hpp"
#include "cartograph/layout.hpp"

namespace cartograph {

enum class Membership { AOnly, BOnly, Both };

enum class BooleanOp {
  DifferenceAB,
  Intersection,
  DifferenceBA,
  Union,
  SymmetricDifference
};

/// An edge carried out of a comparison, keyed by endpoint ids. Weights and
/// labels come from graph A for shared edges.
struct ComparisonEdge {
  std::string source;
  std::string target;
  std::optional<double> weight;
  std::optional<std::string> label;
};

struct ComparisonResult {
  GraphKind kind;
  std::string a_name;
  std::string b_name;
  // A's vertices in A's order, then B's novel vertices in B's order.
  std::vector<std::string> union_vertices;
  std::vector<ComparisonEdge> q_edges;  // only in A
  std::vector<ComparisonEdge> r_edges;  // in both
  std::vector<ComparisonEdge> s_edges;  // only in B
  std::unordered_map<std::string, Membership> membership;
};

/// Partition E ∪ F into Q = E\F, R = E∩F, S = F\E over the union vertex
/// set. Vertices with equal ids are the same vertex; edges are equal by
/// endpoints and direction, weights ignored. Throws KindMismatch unless both
/// graphs share a GraphKind.
ComparisonResult compare(const Graph& a, const Graph& b);

/// The Boolean-operation graph on the union vertex set: Q, R, S, Q∪R∪S, or
/// Q∪S for difference_ab, intersection, difference_ba, union, and symmetric
/// difference respectively.
Graph derive_boolean(const ComparisonResult& result, BooleanOp op);

/// Single-figure comparison drawing: Q dark on the left, R light in the
/// center, S dark on the right, each group in canonical slot order over the
/// union vertex set, one separator between consecutive nonempty groups.
/// Every vertex missing from one side gets a right-margin annotation naming
/// the graph it is absent from. vorder must permute union_vertices.
CartographicLayout comparison_layout(const ComparisonResult& result,
                                     const VertexOrder& vorder,
                                     const LayoutOptions& opts);

const char* to_string(Membership membership) noexcept;

}  // namespace cartograph
