#include "cartograph/layout.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "cartograph/incidence.hpp"
#include "support/test_support.hpp"

namespace cartograph {
namespace {

using test::expect_error;
using test::kind_from_index;
using test::load_fixture;
using test::Rng;

CartographicLayout canonical_layout(const Graph& g, bool show_absent = false,
                                    bool group_gaps = false,
                                    LayoutOptions opts = {}) {
  return compute_layout(g, order_canonical(g, show_absent, group_gaps),
                        identity_order(g), opts);
}

TEST(Layout, SingleEdgeDefaults) {
  Graph g(GraphKind{false, false});
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("a", "b");
  const CartographicLayout layout = canonical_layout(g);
  ASSERT_EQ(layout.latitudes.size(), 2u);
  EXPECT_EQ(layout.latitudes[0].vertex, "a");
  EXPECT_EQ(layout.latitudes[0].y_center, 20.0);
  EXPECT_EQ(layout.latitudes[1].y_center, 30.0);
  ASSERT_EQ(layout.longitudes.size(), 1u);
  const Longitude& lon = layout.longitudes[0];
  EXPECT_EQ(lon.x_center, 20.0);
  EXPECT_EQ(lon.y_top, 20.0);
  EXPECT_EQ(lon.y_bottom, 30.0);
  EXPECT_EQ(lon.key, "a -- b");
  EXPECT_EQ(lon.ink_class, InkClass::Dark);
  EXPECT_FALSE(lon.destination_marker.has_value());
  EXPECT_TRUE(layout.gaps.empty());
  EXPECT_TRUE(layout.annotations.empty());
}

TEST(Layout, CompleteGraphSpansMatchSlots) {
  const Graph k8 = load_fixture("k8.edges");
  const CartographicLayout layout = canonical_layout(k8);
  ASSERT_EQ(layout.latitudes.size(), 8u);
  ASSERT_EQ(layout.longitudes.size(), 28u);
  // Slot 0 joins the first two latitudes, slot 27 the last two.
  EXPECT_EQ(layout.longitudes.front().y_top, layout.latitudes[0].y_center);
  EXPECT_EQ(layout.longitudes.front().y_bottom, layout.latitudes[1].y_center);
  EXPECT_EQ(layout.longitudes.back().y_top, layout.latitudes[6].y_center);
  EXPECT_EQ(layout.longitudes.back().y_bottom, layout.latitudes[7].y_center);
  // Columns advance one pitch at a time.
  for (std::size_t j = 0; j < layout.longitudes.size(); ++j) {
    EXPECT_EQ(layout.longitudes[j].x_center, 20.0 + 4.0 * j);
    EXPECT_EQ(layout.longitudes[j].slot, j);
  }
}

TEST(Layout, AbsentGapsConsumeColumnPositions) {
  Graph g(GraphKind{false, false});
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  const CartographicLayout layout = canonical_layout(g, true);
  ASSERT_EQ(layout.longitudes.size(), 2u);
  ASSERT_EQ(layout.gaps.size(), 1u);
  EXPECT_EQ(layout.longitudes[0].x_center, 20.0);
  EXPECT_EQ(layout.gaps[0].x_center, 24.0);
  EXPECT_EQ(layout.gaps[0].purpose, GapKind::AbsentEdge);
  EXPECT_EQ(layout.longitudes[1].x_center, 28.0);
}

TEST(Layout, SeparatorsTakeConfigurableWidth) {
  Graph g(GraphKind{false, false});
  for (const char* id : {"a", "b", "c", "d"}) g.add_vertex(id);
  g.add_edge("a", "b");
  g.add_edge("c", "d");
  LayoutOptions opts;
  opts.separator_columns = 3.0;
  const CartographicLayout layout = compute_layout(
      g, order_canonical(g, false, true), identity_order(g), opts);
  ASSERT_EQ(layout.longitudes.size(), 2u);
  ASSERT_EQ(layout.gaps.size(), 1u);
  EXPECT_EQ(layout.longitudes[0].x_center, 20.0);
  // The separator occupies three column units; the next edge lands after it.
  EXPECT_EQ(layout.gaps[0].band_width, 12.0);
  EXPECT_EQ(layout.gaps[0].x_center, 20.0 + 2.0 * 4.0);
  EXPECT_EQ(layout.longitudes[1].x_center, 20.0 + 4.0 * 4.0);
}

TEST(Layout, DirectedColumnsCarryDestinationMarkers) {
  const Graph g = load_fixture("digraph24.edges");
  const CartographicLayout layout = canonical_layout(g, true, true);
  EXPECT_EQ(layout.longitudes.size(), 144u);
  EXPECT_EQ(layout.gaps.size(), (552u - 144u) + 23u);
  for (const Longitude& lon : layout.longitudes) {
    ASSERT_TRUE(lon.destination_marker.has_value()) << lon.key;
    EXPECT_EQ(lon.destination_marker->glyph, MarkerGlyph::Arrowhead);
    // The marker sits on the target latitude, one of the band ends.
    EXPECT_TRUE(lon.destination_marker->y == lon.y_top ||
                lon.destination_marker->y == lon.y_bottom)
        << lon.key;
  }
  // 552 slots + 23 separators at default pitch 4.
  const double first_x = layout.longitudes.empty()
                             ? 0.0
                             : std::min(layout.longitudes[0].x_center,
                                        layout.gaps[0].x_center);
  EXPECT_EQ(first_x, 20.0);
  double max_x = 0.0;
  for (const Longitude& lon : layout.longitudes)
    max_x = std::max(max_x, lon.x_center);
  for (const GapColumn& gap : layout.gaps)
    max_x = std::max(max_x, gap.x_center);
  EXPECT_EQ(max_x, 20.0 + 4.0 * (552.0 + 23.0 - 1.0));
}

TEST(Layout, LoopsBecomeCenteredStubs) {
  Graph g(GraphKind{true, true});
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("a", "a");
  g.add_edge("a", "b");
  const CartographicLayout layout = canonical_layout(g);
  const Longitude& loop = layout.longitudes[0];
  ASSERT_TRUE(loop.is_loop);
  EXPECT_EQ(loop.y_top, 20.0 - 3.0);
  EXPECT_EQ(loop.y_bottom, 20.0 + 3.0);
  ASSERT_TRUE(loop.destination_marker.has_value());
  EXPECT_EQ(loop.destination_marker->y, 20.0);
  const Longitude& plain = layout.longitudes[1];
  EXPECT_FALSE(plain.is_loop);
  EXPECT_EQ(plain.y_top, 20.0);
  EXPECT_EQ(plain.y_bottom, 30.0);
}

TEST(Layout, UnderlaysSpanTheFullDrawingByDefault) {
  const Graph g = load_fixture("g8.edges");
  const CartographicLayout layout = canonical_layout(g);
  const double x0 = 20.0 - 2.0;          // half a column pitch left of content
  const double x1 = 20.0 + 9.0 * 4.0 + 2.0;  // ten columns, half pitch right
  for (const Latitude& lat : layout.latitudes) {
    EXPECT_EQ(lat.underlay_x0, x0);
    EXPECT_EQ(lat.underlay_x1, x1);
  }
}

TEST(Layout, TrimmedUnderlaysStopAtIncidentEdges) {
  Graph g(GraphKind{false, false});
  for (const char* id : {"a", "b", "c", "d"}) g.add_vertex(id);
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  LayoutOptions opts;
  opts.trim_underlays = true;
  const CartographicLayout layout =
      compute_layout(g, order_canonical(g, false, false), identity_order(g),
                     opts);
  // Edge columns: a--b at x=20, b--c at x=24; spans stop at the band edges.
  const Latitude& a = layout.latitudes[0];
  EXPECT_EQ(a.underlay_x0, 20.0 - 0.5);
  EXPECT_EQ(a.underlay_x1, 20.0 + 0.5);
  const Latitude& b = layout.latitudes[1];
  EXPECT_EQ(b.underlay_x0, 20.0 - 0.5);
  EXPECT_EQ(b.underlay_x1, 24.0 + 0.5);
  // Isolated vertex d keeps the full width.
  const Latitude& d = layout.latitudes[3];
  EXPECT_EQ(d.underlay_x0, layout.underlay_x0);
  EXPECT_EQ(d.underlay_x1, layout.underlay_x1);
}

TEST(Layout, VertexOrderRearrangesLatitudes) {
  Graph g(GraphKind{false, false});
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_edge("a", "c");
  const VertexOrder reversed = {"c", "b", "a"};
  const CartographicLayout layout = compute_layout(
      g, order_canonical(g, false, false), reversed, LayoutOptions{});
  ASSERT_EQ(layout.latitudes.size(), 3u);
  EXPECT_EQ(layout.latitudes[0].vertex, "c");
  EXPECT_EQ(layout.latitudes[2].vertex, "a");
  // The edge still joins its endpoints' (relocated) latitudes.
  ASSERT_EQ(layout.longitudes.size(), 1u);
  EXPECT_EQ(layout.longitudes[0].y_top, layout.latitudes[0].y_center);
  EXPECT_EQ(layout.longitudes[0].y_bottom, layout.latitudes[2].y_center);
}

TEST(Layout, VertexLabelsUseLabelsWhenPresent) {
  Graph g(GraphKind{false, false});
  g.add_vertex("a", "Amsterdam");
  g.add_vertex("b");
  g.add_edge("a", "b");
  const CartographicLayout layout = canonical_layout(g);
  EXPECT_EQ(layout.latitudes[0].text, "Amsterdam");
  EXPECT_EQ(layout.latitudes[1].text, "b");
}

TEST(Layout, LandscapeInvariantPadsNarrowDrawings) {
  Graph g(GraphKind{false, false});
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_edge("a", "b");
  g.add_edge("a", "c");
  g.add_edge("b", "c");
  const CartographicLayout layout = canonical_layout(g);
  // Three columns >= three latitudes: the drawing must not be portrait.
  EXPECT_GE(layout.canvas.width, layout.canvas.height);
}

TEST(Layout, PortraitAllowedWhenColumnsAreFewer) {
  Graph g(GraphKind{false, false});
  for (int i = 0; i < 6; ++i) g.add_vertex("v" + std::to_string(i));
  g.add_edge("v0", "v5");
  const CartographicLayout layout = canonical_layout(g);
  EXPECT_LT(layout.canvas.width, layout.canvas.height);
  // Canvas still contains all content plus margins.
  EXPECT_EQ(layout.canvas.height, 20.0 + 5.0 * 10.0 + 0.5 + 20.0);
}

TEST(Layout, ColumnXsFollowOrderingOrder) {
  Rng rng(0x10c4u);
  for (int iter = 0; iter < 40; ++iter) {
    const Graph g = test::random_graph(rng, kind_from_index(iter % 4),
                                       {.max_vertices = 12});
    const EdgeOrdering ordering = order_canonical(g, true, true);
    const CartographicLayout layout =
        compute_layout(g, ordering, identity_order(g), LayoutOptions{});
    std::size_t lon_i = 0;
    std::size_t gap_i = 0;
    double last_x = -1.0;
    for (const Column& c : ordering.columns) {
      const double x = c.is_gap ? layout.gaps[gap_i++].x_center
                                : layout.longitudes[lon_i++].x_center;
      EXPECT_GT(x, last_x);
      last_x = x;
    }
    EXPECT_EQ(lon_i, layout.longitudes.size());
    EXPECT_EQ(gap_i, layout.gaps.size());
  }
}

TEST(Layout, CollisionFreedomUnderEveryStrategy) {
  Rng rng(0x50f7u);
  for (int iter = 0; iter < 40; ++iter) {
    const GraphKind kind = kind_from_index(iter % 4);
    const Graph g = test::random_graph(
        rng, kind, {.max_vertices = 50, .edge_percent = 20, .weighted = true});
    std::vector<EdgeOrdering> orderings;
    orderings.push_back(order_canonical(g, false, false));
    orderings.push_back(order_canonical(g, true, true));
    orderings.push_back(order_by_degree(g, DegreeEndpoint::Origin));
    orderings.push_back(order_by_degree(g, DegreeEndpoint::Destination));
    orderings.push_back(order_by_weight(g, SortDirection::Ascending));
    for (const EdgeOrdering& ordering : orderings) {
      const CartographicLayout layout =
          compute_layout(g, ordering, identity_order(g), LayoutOptions{});

      std::set<double> lat_ys;
      for (const Latitude& lat : layout.latitudes) {
        EXPECT_TRUE(lat_ys.insert(lat.y_center).second)
            << "duplicate latitude y " << lat.y_center;
      }

      std::set<double> xs;
      for (const Longitude& lon : layout.longitudes) {
        EXPECT_TRUE(xs.insert(lon.x_center).second)
            << "duplicate column x " << lon.x_center;
      }
      for (const GapColumn& gap : layout.gaps) {
        EXPECT_TRUE(xs.insert(gap.x_center).second)
            << "duplicate gap x " << gap.x_center;
      }

      // Bands never overlap: neighboring centers sit at least a pitch apart
      // for same-width bands, and every longitude's span ends exactly on its
      // endpoint latitudes (or is a loop stub).
      double prev = std::numeric_limits<double>::lowest();
      bool first = true;
      for (const double x : xs) {
        if (!first) EXPECT_GE(x - prev, layout.col_pitch - 1e-9);
        prev = x;
        first = false;
      }
      for (const Longitude& lon : layout.longitudes) {
        if (lon.is_loop) {
          EXPECT_EQ(lon.y_bottom - lon.y_top, 0.6 * layout.row_pitch);
          continue;
        }
        EXPECT_TRUE(lat_ys.count(lon.y_top)) << lon.key;
        EXPECT_TRUE(lat_ys.count(lon.y_bottom)) << lon.key;
        EXPECT_LT(lon.y_top, lon.y_bottom) << lon.key;
        EXPECT_EQ(lon.destination_marker.has_value(), kind.directed);
      }
    }
  }
}

TEST(Layout, GraphAndComplementColumnsInterleave) {
  Rng rng(0x77aau);
  for (int iter = 0; iter < 30; ++iter) {
    const GraphKind kind = kind_from_index(iter % 4);
    const Graph g = test::random_graph(rng, kind, {.max_vertices = 10});
    const Graph c = complement(g);
    const CartographicLayout lg = canonical_layout(g, true);
    const CartographicLayout lc = canonical_layout(c, true);
    // With absent slots shown, g's edge columns sit exactly where the
    // complement has gaps, and vice versa.
    std::set<double> g_edges;
    for (const Longitude& lon : lg.longitudes) g_edges.insert(lon.x_center);
    std::set<double> c_gaps;
    for (const GapColumn& gap : lc.gaps) c_gaps.insert(gap.x_center);
    EXPECT_EQ(g_edges, c_gaps);
    std::set<double> g_gaps;
    for (const GapColumn& gap : lg.gaps) g_gaps.insert(gap.x_center);
    std::set<double> c_edges;
    for (const Longitude& lon : lc.longitudes) c_edges.insert(lon.x_center);
    EXPECT_EQ(g_gaps, c_edges);
  }
}

TEST(Layout, RejectsForeignOrMaimedOrderings) {
  Graph g(GraphKind{false, false});
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_edge("a", "b");
  g.add_edge("b", "c");

  EdgeOrdering missing;
  missing.columns = {Column::edge_ref(0)};
  expect_error(ErrorKind::OrderingMismatch, [&] {
    compute_layout(g, missing, identity_order(g), LayoutOptions{});
  });

  EdgeOrdering duplicated;
  duplicated.columns = {Column::edge_ref(0), Column::edge_ref(0),
                        Column::edge_ref(1)};
  expect_error(ErrorKind::OrderingMismatch, [&] {
    compute_layout(g, duplicated, identity_order(g), LayoutOptions{});
  });

  EdgeOrdering out_of_range;
  out_of_range.columns = {Column::edge_ref(0), Column::edge_ref(7)};
  expect_error(ErrorKind::OrderingMismatch, [&] {
    compute_layout(g, out_of_range, identity_order(g), LayoutOptions{});
  });

  expect_error(ErrorKind::NotAPermutation, [&] {
    compute_layout(g, order_canonical(g, false, false), {"a", "b"},
                   LayoutOptions{});
  });
}

TEST(Layout, RejectsImpossibleOptions) {
  Graph g(GraphKind{false, false});
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("a", "b");
  const EdgeOrdering ordering = order_canonical(g, false, false);

  LayoutOptions zero_pitch;
  zero_pitch.row_pitch = 0.0;
  expect_error(ErrorKind::InvalidOption, [&] {
    compute_layout(g, ordering, identity_order(g), zero_pitch);
  });

  LayoutOptions negative_margin;
  negative_margin.margins.left = -1.0;
  expect_error(ErrorKind::InvalidOption, [&] {
    compute_layout(g, ordering, identity_order(g), negative_margin);
  });

  LayoutOptions fat_bands;
  fat_bands.col_pitch = 0.5;  // thin band (1.0) would exceed the pitch
  expect_error(ErrorKind::InvalidOption, [&] {
    compute_layout(g, ordering, identity_order(g), fat_bands);
  });

  LayoutOptions zero_separator;
  zero_separator.separator_columns = 0.0;
  expect_error(ErrorKind::InvalidOption, [&] {
    compute_layout(g, ordering, identity_order(g), zero_separator);
  });
}

TEST(EstimateCanvas, DocumentedFigures) {
  const auto [h450, w450] = estimate_canvas(450, 101025, 0.5);
  EXPECT_EQ(h450, 225.0);
  EXPECT_EQ(w450, 50512.5);
  const auto [h63, w63] = estimate_canvas(63, 1953, 1.0);
  EXPECT_EQ(h63, 63.0);
  EXPECT_EQ(w63, 1953.0);
}

TEST(EstimateCanvas, ScalesLinearlyInResolution) {
  const auto [h1, w1] = estimate_canvas(7, 21, 1.0);
  const auto [h2, w2] = estimate_canvas(7, 21, 2.0);
  EXPECT_EQ(h2, 2.0 * h1);
  EXPECT_EQ(w2, 2.0 * w1);
}

TEST(EstimateCanvas, RejectsNonPositiveResolution) {
  expect_error(ErrorKind::InvalidOption, [] { estimate_canvas(5, 10, 0.0); });
  expect_error(ErrorKind::InvalidOption, [] { estimate_canvas(5, 10, -1.0); });
}

}  // namespace
}  // namespace cartograph
