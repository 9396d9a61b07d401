#include "cartograph/incidence.hpp"

#include <algorithm>

namespace cartograph {

namespace {

void check_position(std::size_t pos, std::size_t n) {
  if (pos >= n) {
    throw Error(ErrorKind::PositionOutOfRange,
                "vertex position " + std::to_string(pos) +
                    " out of range for order " + std::to_string(n));
  }
}

// First slot of upper-triangle row r: sum of the lengths of rows above it.
std::uint64_t triangle_row_offset(std::size_t r, std::size_t n, bool loops) {
  const std::uint64_t rr = r;
  const std::uint64_t nn = n;
  if (loops) {
    // row k holds n-k slots
    return rr * nn - rr * (rr - 1) / 2;
  }
  // row k holds n-1-k slots
  return rr * (nn - 1) - rr * (rr - 1) / 2;
}

}  // namespace

std::uint64_t edge_slot_count(std::size_t n, GraphKind kind) {
  if (n == 0) {
    throw Error(ErrorKind::EmptyUniverse, "no edge slots over zero vertices");
  }
  const std::uint64_t nn = n;
  if (kind.directed) {
    return kind.loops_allowed ? nn * nn : nn * (nn - 1);
  }
  return kind.loops_allowed ? nn * (nn + 1) / 2 : nn * (nn - 1) / 2;
}

std::uint64_t canonical_slot_index(std::size_t u_pos, std::size_t v_pos,
                                   std::size_t n, GraphKind kind) {
  check_position(u_pos, n);
  check_position(v_pos, n);
  if (u_pos == v_pos && !kind.loops_allowed) {
    throw Error(ErrorKind::LoopDisallowed,
                "loop slot at position " + std::to_string(u_pos) +
                    " but loops are not allowed");
  }
  if (kind.directed) {
    const std::uint64_t u = u_pos;
    const std::uint64_t v = v_pos;
    if (kind.loops_allowed) return u * n + v;
    return u * (std::uint64_t(n) - 1) + (v < u ? v : v - 1);
  }
  auto [a, b] = std::minmax(u_pos, v_pos);
  const std::uint64_t off = triangle_row_offset(a, n, kind.loops_allowed);
  return off + (kind.loops_allowed ? b - a : b - a - 1);
}

std::pair<std::size_t, std::size_t> slot_endpoints(std::uint64_t slot,
                                                   std::size_t n,
                                                   GraphKind kind) {
  if (slot >= edge_slot_count(n, kind)) {
    throw Error(ErrorKind::PositionOutOfRange,
                "slot " + std::to_string(slot) + " out of range");
  }
  if (kind.directed) {
    if (kind.loops_allowed) {
      return {static_cast<std::size_t>(slot / n),
              static_cast<std::size_t>(slot % n)};
    }
    std::size_t u = static_cast<std::size_t>(slot / (n - 1));
    std::size_t r = static_cast<std::size_t>(slot % (n - 1));
    return {u, r < u ? r : r + 1};
  }
  // Largest row a with offset(a) <= slot.
  std::size_t lo = 0, hi = n;  // invariant: offset(lo) <= slot < offset(hi)
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (triangle_row_offset(mid, n, kind.loops_allowed) <= slot) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const std::uint64_t within =
      slot - triangle_row_offset(lo, n, kind.loops_allowed);
  const std::size_t b =
      lo + static_cast<std::size_t>(within) + (kind.loops_allowed ? 0 : 1);
  return {lo, b};
}

std::pair<std::uint64_t, std::uint64_t> slot_row_span(std::size_t row,
                                                      std::size_t n,
                                                      GraphKind kind) {
  check_position(row, n);
  const std::uint64_t nn = n;
  if (kind.directed) {
    const std::uint64_t width = kind.loops_allowed ? nn : nn - 1;
    return {row * width, (row + 1) * width};
  }
  const std::uint64_t begin = triangle_row_offset(row, n, kind.loops_allowed);
  const std::uint64_t end =
      row + 1 < n ? triangle_row_offset(row + 1, n, kind.loops_allowed)
                  : edge_slot_count(n, kind);
  return {begin, end};
}

std::uint64_t canonical_slot_of(const Graph& g, std::size_t edge) {
  return canonical_slot_index(g.source_position(edge),
                              g.target_position(edge), g.vertex_count(),
                              g.kind());
}

AugmentedIncidenceMatrix::AugmentedIncidenceMatrix(
    std::size_t n, GraphKind kind, std::vector<std::uint64_t> occupied)
    : n_(n),
      kind_(kind),
      slot_count_(edge_slot_count(n, kind)),
      occupied_(std::move(occupied)) {
  std::sort(occupied_.begin(), occupied_.end());
}

bool AugmentedIncidenceMatrix::is_occupied(std::uint64_t slot) const {
  return std::binary_search(occupied_.begin(), occupied_.end(), slot);
}

AugmentedIncidenceMatrix build_augmented_incidence(const Graph& g) {
  std::vector<std::uint64_t> occupied;
  occupied.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    occupied.push_back(canonical_slot_of(g, i));
  }
  return AugmentedIncidenceMatrix(g.vertex_count(), g.kind(),
                                  std::move(occupied));
}

}  // namespace cartograph
