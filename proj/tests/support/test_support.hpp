#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "cartograph/error.hpp"
#include "cartograph/graph.hpp"
#include "cartograph/io.hpp"

namespace cartograph::test {

inline std::string data_path(const std::string& name) {
  return std::string(CARTOGRAPH_TEST_DATA_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(CARTOGRAPH_GOLDEN_DIR) + "/" + name;
}

inline Graph load_fixture(const std::string& name) {
  const std::string text = read_file(data_path(name));
  const bool json = name.size() > 5 && name.ends_with(".json");
  return parse_graph(text, json ? GraphFormat::Json : GraphFormat::EdgeList);
}

/// splitmix64: tiny, seedable, and identical on every platform, so
/// randomized tests replay exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Modulo bias is irrelevant at test scale.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  bool chance(unsigned percent) { return below(100) < percent; }

  double weight() { return static_cast<double>(below(1000)) / 8.0; }

 private:
  std::uint64_t state_;
};

inline GraphKind kind_from_index(unsigned i) {
  return GraphKind{(i & 2) != 0, (i & 1) != 0};
}

struct RandomGraphSpec {
  std::size_t max_vertices = 12;
  unsigned edge_percent = 40;
  bool weighted = false;
};

/// Random graph of the given kind on vertices "v0".."v<n-1>", each admissible
/// endpoint pair kept independently.
inline Graph random_graph(Rng& rng, GraphKind kind,
                          const RandomGraphSpec& spec = {}) {
  const std::size_t n = 1 + rng.below(spec.max_vertices);
  Graph g(kind, "random");
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("v" + std::to_string(i));
    g.add_vertex(ids.back());
  }
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t v_begin = kind.directed ? 0 : u;
    for (std::size_t v = v_begin; v < n; ++v) {
      if (u == v && !kind.loops_allowed) continue;
      if (!rng.chance(spec.edge_percent)) continue;
      std::optional<double> w;
      if (spec.weighted) w = rng.weight();
      g.add_edge(ids[u], ids[v], w);
    }
  }
  return g;
}

/// Normalized endpoint-pair set, the oracle representation for edge-set
/// comparisons (undirected pairs stored low id first by position).
inline std::set<std::pair<std::string, std::string>> edge_pairs(
    const Graph& g) {
  std::set<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    pairs.emplace(g.source_id(i), g.target_id(i));
  }
  return pairs;
}

inline std::set<std::string> edge_keys(const Graph& g) {
  std::set<std::string> keys;
  for (std::size_t i = 0; i < g.edge_count(); ++i) keys.insert(g.edge_key(i));
  return keys;
}

inline std::vector<std::string> vertex_ids(const Graph& g) {
  std::vector<std::string> ids;
  ids.reserve(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    ids.push_back(g.vertex_at(i).id);
  }
  return ids;
}

/// Asserts that `fn` throws Error with the expected kind and returns the
/// diagnostic for further inspection.
template <typename Fn>
std::string expect_error(ErrorKind kind, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << "wrong kind; message: " << e.what();
    return e.what();
  } catch (const std::exception& e) {
    ADD_FAILURE() << "wrong exception type: " << e.what();
    return {};
  }
  ADD_FAILURE() << "no exception thrown (expected " << to_string(kind) << ")";
  return {};
}

inline std::size_t count_occurrences(const std::string& haystack,
                                     const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace cartograph::test
