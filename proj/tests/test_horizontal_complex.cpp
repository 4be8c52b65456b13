#include <gtest/gtest.h>

#include <numeric>
#include <string>

#include "artin/errors.h"
#include "artin/horizontal_complex.h"
#include "support.h"

namespace artin {
namespace {

DefiningGraph single_edge(int label) {
  DefiningGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  if (label >= 3) {
    g.add_edge("a", "b", label, "a");
  } else {
    g.add_edge("a", "b", label);
  }
  return g;
}

DefiningGraph even_square(int label) {
  DefiningGraph g;
  for (const char* n : {"a", "b", "c", "d"}) g.add_vertex(n);
  g.add_edge("a", "b", label, "a");
  g.add_edge("b", "c", label, "b");
  g.add_edge("c", "d", label, "c");
  g.add_edge("d", "a", label, "d");
  return g;
}

TEST(HorizontalFamily, QuarterEdgesFollowTheTable) {
  for (int label : {5, 6}) {
    const HorizontalFamily f = build_family(single_edge(label));
    const ColoredGraph& q = *f.xquarter;
    ASSERT_EQ(q.num_vertices(), 4u);
    ASSERT_EQ(q.num_edges(), 4u);
    // a+ = 0, b+ = 1, a- = 2, b- = 3.
    EXPECT_EQ(q.edge(0).tail, 0u);
    EXPECT_EQ(q.edge(0).head, 3u);
    EXPECT_EQ(q.edge(1).tail, 2u);
    EXPECT_EQ(q.edge(1).head, 1u);
    EXPECT_EQ(q.edge(2).tail, 3u);
    EXPECT_EQ(q.edge(2).head, label % 2 ? 2u : 0u);
    EXPECT_EQ(q.edge(3).tail, 1u);
    EXPECT_EQ(q.edge(3).head, label % 2 ? 0u : 2u);
    EXPECT_EQ(f.cover.edge_map, (std::vector<EdgeId>{0, 0, 1, 1}));
    EXPECT_EQ(f.deck, (std::vector<VertexId>{2, 3, 0, 1}));
  }
}

TEST(HorizontalFamily, XhalfDoublesEveryEdge) {
  const HorizontalFamily f = build_family(make_triangle(4, 5, 6));
  EXPECT_EQ(f.x0->num_vertices(), 1u);
  EXPECT_EQ(f.x0->num_edges(), 3u);
  EXPECT_EQ(f.xhalf->num_vertices(), 3u);
  ASSERT_EQ(f.xhalf->num_edges(), 6u);
  EXPECT_EQ(f.xhalf->edge(2).tail, 1u);
  EXPECT_EQ(f.xhalf->edge(2).head, 2u);
  EXPECT_EQ(f.xhalf->edge(3).tail, 2u);
  EXPECT_EQ(f.xhalf->edge(3).head, 1u);
  EXPECT_TRUE(is_degree_n_cover(f.cover, 2));
}

TEST(HorizontalFamily, DeckInvolution) {
  const HorizontalFamily f = build_family(make_triangle(5, 4, 3));
  const GraphMap deck = deck_involution_on_quarter(f);
  EXPECT_TRUE(is_isomorphism(deck));
  const GraphMap twice = compose(deck, deck);
  EXPECT_EQ(twice.edge_map, identity_map(f.xquarter).edge_map);
  EXPECT_EQ(compose(deck, f.cover).edge_map, f.cover.edge_map);
  EXPECT_THROW(deck_involution_on_quarter(build_family(even_square(4))), PreconditionError);
}

TEST(HorizontalFamily, RequiresWellFormedInput) {
  DefiningGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("a", "b", 3);
  EXPECT_THROW(build_family(g), PreconditionError);
}

TEST(Collapsed, PerEdgeCycles) {
  // Odd label 2m+1: one cycle of length 2m+1. Label 2: two loops. Even 2m:
  // two cycles of length m.
  for (int label = 2; label <= 12; ++label) {
    const CollapsedQuarter q = build_collapsed(single_edge(label));
    const std::size_t m = static_cast<std::size_t>(label / 2);
    std::vector<std::size_t> expected;
    if (label == 2) {
      expected = {1, 1};
    } else if (label % 2) {
      expected = {2 * m + 1};
    } else {
      expected = {m, m};
    }
    EXPECT_EQ(q.monochrome_cycles[0], expected) << label;
    const auto& seg = q.segments[0];
    EXPECT_EQ(std::accumulate(seg.begin(), seg.end(), std::size_t{0}),
              std::accumulate(expected.begin(), expected.end(), std::size_t{0}))
        << label;
    EXPECT_EQ(q.graph->num_edges(), std::accumulate(seg.begin(), seg.end(), std::size_t{0}));
    EXPECT_TRUE(q.immersion);
  }
}

TEST(Collapsed, MergedVertexNames) {
  const CollapsedQuarter q = build_collapsed(make_triangle(3, 3, 3));
  EXPECT_EQ(q.num_old_vertices, 3u);
  EXPECT_EQ(q.graph->name(0), "a+/b-");
  EXPECT_EQ(q.graph->name(1), "b+/c-");
  EXPECT_EQ(q.graph->name(2), "c+/a-");
}

TEST(Splitting, ArtThreeThreeThree) {
  const SplittingCertificate s = compute_splitting(make_triangle(3, 3, 3));
  EXPECT_EQ(s.kind, SplittingKind::kAmalgam);
  EXPECT_EQ(s.rank_a, 3u);
  EXPECT_EQ(s.rank_b, 4u);
  EXPECT_EQ(s.rank_c, 7u);
  EXPECT_EQ(s.index_c_in_b, 2u);
  EXPECT_EQ(s.collapsed_cover_degree, 3u);
  EXPECT_TRUE(s.twisted_double.has_value());
}

TEST(Splitting, EvenBipartiteSquareIsHNN) {
  const SplittingCertificate s = compute_splitting(even_square(4));
  EXPECT_EQ(s.kind, SplittingKind::kHNN);
  EXPECT_EQ(s.rank_a, 4u);
  EXPECT_EQ(s.rank_b, 5u);
  EXPECT_FALSE(s.rank_c.has_value());
  EXPECT_EQ(component_maps(s.collapsed).size(), 2u);
}

TEST(Splitting, Errors) {
  EXPECT_THROW(compute_splitting(make_triangle(2, 2, 2)), InadmissibleError);
  DefiningGraph g;
  for (const char* n : {"a", "b", "c"}) g.add_vertex(n);
  g.add_edge("a", "b", 3, "a");
  EXPECT_THROW(compute_splitting(g), PreconditionError);
  try {
    compute_splitting(make_triangle(2, 2, 2));
  } catch (const InadmissibleError& e) {
    EXPECT_TRUE(e.verdict().witness.has_value());
  }
}

// Properties over random admissible graphs.

TEST(HorizontalProperty, RanksCoversAndComponents) {
  testing::Rng rng(41);
  int amalgams = 0;
  int hnns = 0;
  for (int i = 0; i < 300; ++i) {
    auto g = testing::random_admissible(rng, 7, 0.45, 2, 8);
    if (!g) continue;
    const std::size_t v = g->num_vertices();
    const std::size_t e = g->num_edges();
    const HorizontalFamily f = build_family(*g);
    EXPECT_EQ(free_rank(*f.x0), e);
    EXPECT_EQ(free_rank(*f.xhalf), 1 - v + 2 * e);
    EXPECT_TRUE(is_degree_n_cover(f.cover, 2));
    bool all_even = true;
    for (const GammaEdge& edge : g->edges()) all_even = all_even && edge.label % 2 == 0;
    const bool split = testing::two_colorable(*g) && all_even;
    EXPECT_EQ(testing::count_components(*f.xquarter), split ? 2u : 1u);
    if (!split) {
      EXPECT_EQ(free_rank(*f.xquarter), 1 - 2 * v + 4 * e);
      ++amalgams;
    } else {
      ++hnns;
    }
    const CollapsedQuarter q = build_collapsed(*g);
    EXPECT_TRUE(q.immersion);
    // Collapsing a forest keeps the rank of every component.
    std::size_t quarter_rank = 0;
    for (const Subgraph& s : connected_components(*f.xquarter)) quarter_rank += free_rank(s.graph);
    std::size_t collapsed_rank = 0;
    for (const Subgraph& s : connected_components(*q.graph)) collapsed_rank += free_rank(s.graph);
    EXPECT_EQ(collapsed_rank, quarter_rank);
  }
  EXPECT_GT(amalgams, 100);
  EXPECT_GT(hnns, 0);
}

TEST(HorizontalProperty, ImmersionExactlyWhenAdmissible) {
  testing::Rng rng(42);
  int negatives = 0;
  for (int i = 0; i < 500; ++i) {
    const DefiningGraph g =
        testing::random_orientation(testing::random_gamma(rng, 6, 0.5, 2, 6), rng);
    const AdmissibilityVerdict v = is_admissible(g);
    if (v.collapsed_cycle) continue;
    const CollapsedQuarter q = build_collapsed(g);
    EXPECT_EQ(q.immersion, v.admissible);
    negatives += !v.admissible;
  }
  EXPECT_GT(negatives, 20);
}

}  // namespace
}  // namespace artin
