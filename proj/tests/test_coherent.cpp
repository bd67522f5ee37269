#include <gtest/gtest.h>

#include <random>

#include "circwl/coherent.hpp"
#include "oracles.hpp"

using namespace circwl;

namespace {

CoherentConfiguration closure_of(int n, std::vector<int> s) {
  return wl_closure(Digraph::circulant(GroupSubset(n, std::move(s))));
}

}  // namespace

TEST(Digraph, RejectsLoopsAndTracksSymmetry) {
  Digraph g(3);
  EXPECT_THROW(g.add_arc(1, 1), Error);
  EXPECT_THROW(g.add_arc(0, 3), Error);
  g.add_arc(0, 1);
  EXPECT_FALSE(g.is_symmetric());
  g.add_arc(1, 0);
  EXPECT_TRUE(g.is_symmetric());
  EXPECT_THROW(Digraph::circulant(GroupSubset(5, {0, 1})), Error);
}

TEST(WlClosure, Examples) {
  EXPECT_EQ(closure_of(4, {1, 2, 3}).rank(), 2);
  EXPECT_EQ(closure_of(7, {1, 6}).rank(), 4);
  EXPECT_EQ(closure_of(13, {1, 3, 4, 9, 10, 12}).rank(), 3);
}

TEST(WlClosure, CyclesAreDistanceRegular) {
  for (int n = 3; n <= 40; ++n) EXPECT_EQ(closure_of(n, {1, n - 1}).rank(), n / 2 + 1) << n;
}

TEST(WlClosure, DirectedCycleIsDiscreteOverTheGroup) {
  const auto x = wl_closure(Digraph::circulant(GroupSubset(6, {1})));
  EXPECT_EQ(x.rank(), 6);
  EXPECT_FALSE(axiom_violation(x));
}

TEST(WlClosure, AxiomsAndArcUnionOnRandomCirculants) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> order(2, 30);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = order(rng);
    const auto s = oracle::random_symmetric(rng, n);
    const auto g = Digraph::circulant(s);
    const auto x = wl_closure(g);
    EXPECT_FALSE(axiom_violation(x)) << to_literal(s);
    EXPECT_TRUE(arcs_are_union_of_classes(g, x)) << to_literal(s);
    EXPECT_LE(x.rank(), n);
    EXPECT_TRUE(oracle::intersection_numbers_constant(x)) << to_literal(s);
  }
}

TEST(WlClosure, NonCirculantDigraph) {
  // Path 0-1-2-3 plus an arc 3->0: not vertex transitive.
  const auto g = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}});
  const auto x = wl_closure(g);
  EXPECT_FALSE(axiom_violation(x));
  EXPECT_TRUE(arcs_are_union_of_classes(g, x));
  EXPECT_GT(x.diagonal_colors().size(), 1U);
}

TEST(WlClosure, DeterministicGrid) {
  const auto a = closure_of(9, {1, 2, 7, 8});
  const auto b = closure_of(9, {1, 2, 7, 8});
  EXPECT_EQ(a.to_grid(), b.to_grid());
  EXPECT_EQ(a.to_grid().substr(0, 2), "0 ");
}

TEST(IntersectionNumbers, CompleteGraph) {
  const int v = 6;
  const auto x = closure_of(v, {1, 2, 3, 4, 5});
  const auto c = intersection_numbers(x);
  const int diag = x.color(0, 0);
  const int off = x.color(0, 1);
  EXPECT_EQ(c(off, off, diag), v - 1);
  EXPECT_EQ(c(off, off, off), v - 2);
}

TEST(IntersectionNumbers, PentagonAndPaley) {
  const auto c5 = closure_of(5, {1, 4});
  const auto t5 = intersection_numbers(c5);
  EXPECT_EQ(t5(c5.color(0, 1), c5.color(0, 1), c5.color(0, 2)), 1);
  const auto p13 = closure_of(13, {1, 3, 4, 9, 10, 12});
  const auto t13 = intersection_numbers(p13);
  const int edge = p13.color(0, 1);
  EXPECT_EQ(t13(edge, edge, edge), 2);
}

TEST(IntersectionNumbers, MatchDirectCounts) {
  const auto x = closure_of(12, {3, 4, 6, 8, 9});
  const auto t = intersection_numbers(x);
  for (int u = 0; u < 12; ++u)
    for (int w = 0; w < 12; ++w)
      for (int r = 0; r < x.rank(); ++r)
        for (int s = 0; s < x.rank(); ++s) {
          int count = 0;
          for (int z = 0; z < 12; ++z) count += x.color(u, z) == r && x.color(z, w) == s;
          ASSERT_EQ(t(r, s, x.color(u, w)), count);
        }
}

TEST(IntersectionNumbers, InconsistentColouringRejected) {
  // Colour a 4-cycle's edges with one class but split the non-edges unevenly.
  std::vector<int> colors(16, 1);
  for (int u = 0; u < 4; ++u) colors[u * 4 + u] = 0;
  colors[0 * 4 + 2] = 2;
  const CoherentConfiguration x(4, colors);
  EXPECT_TRUE(axiom_violation(x).has_value());
  EXPECT_THROW(intersection_numbers(x), InconsistencyError);
}

TEST(OnePointExtension, TriangleHasRankFive) {
  const auto x = closure_of(3, {1, 2});
  for (int alpha = 0; alpha < 3; ++alpha) {
    const auto y = one_point_extension(x, alpha);
    EXPECT_EQ(y.rank(), 5);
    EXPECT_TRUE(is_refinement_of(y, x));
  }
}

TEST(OnePointExtension, PentagonFibres) {
  const auto y = one_point_extension(closure_of(5, {1, 4}), 0);
  EXPECT_EQ(y.color(1, 1), y.color(4, 4));
  EXPECT_EQ(y.color(2, 2), y.color(3, 3));
  EXPECT_NE(y.color(1, 1), y.color(2, 2));
  EXPECT_NE(y.color(0, 0), y.color(1, 1));
  EXPECT_TRUE(is_partly_regular(y));
}

TEST(OnePointExtension, Idempotent) {
  const auto x = closure_of(12, {1, 5, 7, 11});
  const auto y = one_point_extension(x, 3);
  EXPECT_EQ(one_point_extension(y, 3), y);
  EXPECT_GE(y.rank(), x.rank());
}

TEST(PartlyRegular, Examples) {
  EXPECT_TRUE(is_partly_regular(wl_closure(Digraph::circulant(GroupSubset(5, {1})))));
  EXPECT_FALSE(is_partly_regular(closure_of(4, {1, 2, 3})));
  const auto cubes = closure_of(13, {1, 5, 8, 12});
  EXPECT_TRUE(is_partly_regular(one_point_extension(cubes, 0)));
}
