#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "stlab/poset.hpp"

using namespace stlab;

namespace {

// Reflexive-transitive closure of the Hasse edges, by depth-first search.
std::vector<std::vector<bool>> closure(const StasheffTamariPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      if (r[i][v]) continue;
      r[i][v] = true;
      for (auto w : p.hasse1[v]) stack.push_back(w);
    }
  }
  return r;
}

// Brute-force lattice test on an explicit relation: every pair has a least
// upper bound.
bool brute_lattice(const std::vector<std::vector<bool>>& le) {
  const std::size_t n = le.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<std::size_t> ub;
      for (std::size_t c = 0; c < n; ++c)
        if (le[a][c] && le[b][c]) ub.push_back(c);
      bool found = false;
      for (auto c : ub)
        if (std::all_of(ub.begin(), ub.end(), [&](std::size_t x) { return le[c][x]; })) found = true;
      if (!found) return false;
    }
  return true;
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate(6, 3).size(), 6u);
  EXPECT_EQ(enumerate(6, 4).size(), 2u);
  EXPECT_EQ(enumerate(7, 3).size(), 25u);
  EXPECT_EQ(enumerate(8, 4).size(), 40u);
  for (int delta = 1; delta <= 8; ++delta) EXPECT_EQ(enumerate(delta + 2, delta).size(), 2u) << delta;
  for (int delta = 1; delta <= 6; ++delta) EXPECT_EQ(enumerate(delta + 1, delta).size(), 1u) << delta;
}

TEST(Enumerate, PolygonsAreCatalan) {
  for (int m = 3; m <= 10; ++m) EXPECT_EQ(enumerate(m, 2).size(), oracle::catalan(m - 2)) << m;
}

TEST(Enumerate, CountsMatchGeometricFlipGraph) {
  for (auto [m, delta] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}, {8, 4}, {9, 4}, {8, 5}, {9, 5}, {9, 6}})
    EXPECT_EQ(enumerate(m, delta).size(), oracle::geometric_triangulations(m, delta).size()) << m << " " << delta;
}

TEST(Enumerate, ElementsSortedWithBottomAndTop) {
  auto p = enumerate(8, 3);
  for (std::size_t i = 1; i < p.size(); ++i) EXPECT_TRUE(lex_less(p.elements[i - 1], p.elements[i]));
  EXPECT_EQ(p.rel1[p.bottom].count(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_TRUE(p.rel1[i].test(p.top));
  EXPECT_TRUE(p.hasse1[p.top].empty());
}

TEST(Enumerate, ParallelMatchesSequential) {
  for (auto [m, delta] : std::vector<std::pair<int, int>>{{9, 3}, {9, 4}}) {
    auto a = enumerate(m, delta);
    EnumerateOptions o;
    o.threads = 4;
    auto b = enumerate(m, delta, o);
    EXPECT_EQ(a.elements, b.elements);
    EXPECT_EQ(a.hasse1, b.hasse1);
    EXPECT_EQ(a.rel1, b.rel1);
    EXPECT_EQ(a.rel2, b.rel2);
  }
}

TEST(Enumerate, ElementCapRaisesWithPartialCount) {
  EnumerateOptions o;
  o.max_elements = 10;
  try {
    enumerate(9, 4, o);
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceExceeded);
    EXPECT_GE(e.partial_count(), 10u);
  }
}

TEST(Enumerate, RejectsDegeneratePolytopes) {
  EXPECT_THROW(enumerate(3, 3), Error);
  EXPECT_THROW(enumerate(70, 3), Error);
}

TEST(FirstOrder, UpSetsAreHasseClosure) {
  for (auto [m, delta] : std::vector<std::pair<int, int>>{{8, 2}, {8, 3}, {8, 4}, {9, 5}}) {
    auto p = enumerate(m, delta);
    auto r = closure(p);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) EXPECT_EQ(p.rel1[i].test(j), r[i][j]);
    auto red = transitive_reduction(p.rel1);
    EXPECT_EQ(red.size(), p.hasse1_edge_count());
  }
}

TEST(SecondOrder, MatchesPairwiseDefinition) {
  auto even = enumerate(8, 4);
  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = 0; j < even.size(); ++j) EXPECT_EQ(even.rel2[i].test(j), leq2(even.even(i), even.even(j)));
  auto odd = enumerate(8, 3);
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j)
      EXPECT_EQ(odd.rel2[i].test(j), leq2_odd(odd.odd_element(i), odd.odd_element(j)));
}

TEST(CompareOrders, EqualCases) {
  EXPECT_TRUE(orders_equal(enumerate(6, 3)));
  EXPECT_TRUE(orders_equal(enumerate(9, 2)));
  EXPECT_TRUE(orders_equal(enumerate(9, 3)));
  EXPECT_TRUE(orders_equal(enumerate(9, 4)));
}

TEST(CompareOrders, FirstOrderAlwaysWithinSecond) {
  for (auto [m, delta] : std::vector<std::pair<int, int>>{{10, 5}, {10, 6}}) EXPECT_TRUE(compare_orders(enumerate(m, delta)).first_within_second);
}

TEST(Lattice, PolygonsAreTamariLattices) {
  for (int m = 4; m <= 9; ++m) EXPECT_TRUE(is_lattice(enumerate(m, 2), Order::First)) << m;
}

TEST(Lattice, AgreesWithBruteForce) {
  for (auto [m, delta] : std::vector<std::pair<int, int>>{{7, 2}, {7, 3}, {8, 3}, {8, 4}, {9, 4}, {9, 5}}) {
    auto p = enumerate(m, delta);
    EXPECT_EQ(is_lattice(p, Order::First), brute_lattice(closure(p))) << m << " " << delta;
  }
}

TEST(Lattice, NineVerticesInFourSpaceHasJoinlessPair) {
  auto p = enumerate(9, 4);
  auto check = check_lattice(p, Order::First);
  ASSERT_FALSE(check.is_lattice);
  ASSERT_TRUE(check.witness.has_value());
  auto [a, b] = *check.witness;
  std::vector<std::size_t> ub;
  for (std::size_t c = 0; c < p.size(); ++c)
    if (p.rel1[a].test(c) && p.rel1[b].test(c)) ub.push_back(c);
  for (auto c : ub) EXPECT_FALSE(std::all_of(ub.begin(), ub.end(), [&](std::size_t x) { return p.rel1[c].test(x); }));
}

TEST(Lattice, ThreadCountDoesNotChangeWitness) {
  auto p = enumerate(10, 5);
  auto a = check_lattice(p, Order::First, 1);
  auto b = check_lattice(p, Order::First, 4);
  EXPECT_EQ(a.is_lattice, b.is_lattice);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(SelfDuality, EvenPosets) {
  EXPECT_TRUE(self_duality_check(enumerate(8, 4)));
  EXPECT_TRUE(self_duality_check(enumerate(8, 2)));
  EXPECT_THROW(self_duality_check(enumerate(6, 3)), Error);
}

TEST(BooleanEmbedding, InjectiveAndOrderCompatible) {
  for (auto [m, delta] : std::vector<std::pair<int, int>>{{6, 4}, {8, 3}, {8, 4}, {9, 3}}) {
    auto p = enumerate(m, delta);
    auto check = check_boolean_embedding(p);
    EXPECT_TRUE(check.injective) << m << " " << delta;
    EXPECT_TRUE(check.order_compatible) << m << " " << delta;
    const int d = delta / 2;
    EXPECT_EQ(check.ground_size, delta % 2 ? binomial(m - d - 2, d + 1) : binomial(m - d - 1, d + 1));
  }
}
