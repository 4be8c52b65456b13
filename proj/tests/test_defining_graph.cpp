#include <gtest/gtest.h>

#include <set>

#include "artin/defining_graph.h"
#include "artin/errors.h"
#include "support.h"

namespace artin {
namespace {

DefiningGraph square(int label) {
  DefiningGraph g;
  for (const char* n : {"a", "b", "c", "d"}) g.add_vertex(n);
  g.add_edge("a", "b", label);
  g.add_edge("b", "c", label);
  g.add_edge("c", "d", label);
  g.add_edge("d", "a", label);
  return g;
}

TEST(DefiningGraph, NamesAreUniqueAndNonEmpty) {
  DefiningGraph g;
  g.add_vertex("a");
  EXPECT_THROW(g.add_vertex("a"), StructuralError);
  EXPECT_THROW(g.add_vertex(""), StructuralError);
  EXPECT_THROW(g.add_edge("a", "z", 3), StructuralError);
}

TEST(DefiningGraph, TriangleHelper) {
  const DefiningGraph t = make_triangle(5, 2, 4);
  EXPECT_EQ(t.edge_name(0), "ab");
  EXPECT_EQ(t.edges()[0].label, 5);
  EXPECT_EQ(t.edges()[0].iota, Generator{0});
  EXPECT_FALSE(t.edges()[1].iota.has_value());
  EXPECT_EQ(t.edges()[2].iota, Generator{2});
  EXPECT_EQ(t.tail(2), 2u);
  EXPECT_EQ(t.head(2), 0u);
  // Without iota the tail defaults to u.
  EXPECT_EQ(t.tail(1), 1u);
  EXPECT_TRUE(validate(t).well_formed());
}

TEST(DefiningGraph, ValidateReportsEveryProblem) {
  DefiningGraph g;
  for (const char* n : {"a", "b", "c"}) g.add_vertex(n);
  g.add_edge("a", "a", 3);
  g.add_edge("a", "b", 1);
  g.add_edge("b", "a", 4);
  g.add_edge("a", "b", 5);
  g.add_edge("b", "c", 2, "b");
  g.add_edge("c", "a", 3);
  g.add_edge(GammaEdge{0, 2, 6, Generator{1}});
  const OrientationReport r = validate(g);
  std::multiset<IssueKind> kinds;
  for (const Issue& i : r.issues) kinds.insert(i.kind);
  EXPECT_EQ(kinds.count(IssueKind::kLoop), 1u);
  EXPECT_EQ(kinds.count(IssueKind::kLabelBelowTwo), 1u);
  EXPECT_GE(kinds.count(IssueKind::kDuplicateEdge), 2u);
  EXPECT_EQ(kinds.count(IssueKind::kForbiddenIota), 1u);
  EXPECT_EQ(kinds.count(IssueKind::kIotaNotEndpoint), 1u);
  EXPECT_GE(kinds.count(IssueKind::kMissingIota), 1u);
  EXPECT_FALSE(r.structurally_sound());
  EXPECT_EQ(r.edge_status[4], IotaStatus::kForbidden);
}

TEST(DefiningGraph, MissingIotaIsStructurallySound) {
  const OrientationReport r = validate(square(3));
  EXPECT_TRUE(r.structurally_sound());
  EXPECT_FALSE(r.well_formed());
  EXPECT_EQ(r.issues.size(), 4u);
  EXPECT_TRUE(validate(square(2)).well_formed());
}

TEST(DefiningGraph, ValidateIsIdempotent) {
  testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    DefiningGraph g = testing::random_gamma(rng, 6, 0.5, 1, 6);
    if (i % 2) g = testing::random_orientation(g, rng);
    const OrientationReport a = validate(g);
    const OrientationReport b = validate(g);
    ASSERT_EQ(a.issues.size(), b.issues.size());
    EXPECT_EQ(a.edge_status, b.edge_status);
    for (std::size_t k = 0; k < a.issues.size(); ++k) EXPECT_EQ(a.issues[k].message, b.issues[k].message);
  }
}

TEST(DefiningGraph, WithOrientationSizeMismatch) {
  EXPECT_THROW(square(3).with_orientation({}), PreconditionError);
}

TEST(DefiningGraph, CanonicalCycle) {
  EXPECT_EQ(canonical_cycle({2, 0, 1, 2}), (GammaCycle{0, 1, 2, 0}));
  EXPECT_EQ(canonical_cycle({0, 2, 1, 0}), (GammaCycle{0, 1, 2, 0}));
}

TEST(DefiningGraph, CyclesOfSquare) {
  const auto cycles = enumerate_cycles(square(2), 8);
  // The 4-cycle once, and its double traversal.
  ASSERT_EQ(cycles.size(), 2u);
  EXPECT_EQ(cycles[0], (GammaCycle{0, 1, 2, 3, 0}));
  EXPECT_EQ(cycles[1].size(), 9u);
  EXPECT_THROW(enumerate_cycles(square(2), kMaxCycleEnumeration + 1), RefusalError);
}

TEST(DefiningGraph, GammaCycleRules) {
  const DefiningGraph g = square(2);
  EXPECT_TRUE(is_gamma_cycle(g, {0, 1, 2, 3, 0}));
  EXPECT_FALSE(is_gamma_cycle(g, {0, 1, 0}));
  EXPECT_FALSE(is_gamma_cycle(g, {0, 1, 2, 1, 0}));
  EXPECT_FALSE(is_gamma_cycle(g, {0, 2, 3, 0}));
}

TEST(DefiningGraphProperty, EnumeratedCyclesAreCanonical) {
  testing::Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const DefiningGraph g = testing::random_gamma(rng, 6, 0.5, 2, 5);
    const auto cycles = enumerate_cycles(g, 8);
    std::set<GammaCycle> unique(cycles.begin(), cycles.end());
    EXPECT_EQ(unique.size(), cycles.size());
    for (const GammaCycle& c : cycles) {
      EXPECT_EQ(canonical_cycle(c), c);
      EXPECT_TRUE(is_gamma_cycle(g, c));
      EXPECT_LE(c.size(), 9u);
    }
  }
}

}  // namespace
}  // namespace artin
