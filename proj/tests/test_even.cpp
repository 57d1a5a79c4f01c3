#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "stlab/even.hpp"

using namespace stlab;

namespace {

std::vector<Tuple> ts(std::initializer_list<Tuple> l) { return std::vector<Tuple>(l); }

std::vector<std::uint64_t> masks(const std::vector<Tuple>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& t : v) out.push_back(t.mask());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EvenTriangulation> flip_closure(int m, int d) {
  std::vector<EvenTriangulation> queue{lower_even(m, d)};
  std::set<std::vector<std::uint64_t>> seen{masks(queue[0].e_set())};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto& f : increasing_flips(queue[h]))
      if (seen.insert(masks(f.result.e_set())).second) queue.push_back(f.result);
  return queue;
}

std::vector<std::uint64_t> e_of_cells(const oracle::Cells& cells, int d) {
  return oracle::faces(cells, d + 1, [](std::uint64_t f) { return oracle::separated(f); });
}

}  // namespace

TEST(EvenSpace, RejectsDegenerateParameters) {
  EXPECT_THROW(EvenSpace(4, 2), Error);
  EXPECT_THROW(EvenSpace(5, 0), Error);
  EXPECT_NO_THROW(EvenSpace(5, 2));
}

TEST(EvenTriangulation, LowerAndUpperOfSixPointsInFourSpace) {
  EXPECT_EQ(lower_even(6, 2).e_set(), ts({{1, 3, 5}, {1, 3, 6}, {1, 4, 6}}));
  EXPECT_EQ(upper_even(6, 2).e_set(), ts({{1, 3, 6}, {1, 4, 6}, {2, 4, 6}}));
}

TEST(EvenTriangulation, FromTuplesValidates) {
  EXPECT_NO_THROW(EvenTriangulation::from_tuples(6, 2, ts({{1, 3, 5}, {1, 3, 6}, {1, 4, 6}})));
  EXPECT_THROW(EvenTriangulation::from_tuples(6, 2, ts({{1, 3, 5}, {1, 3, 6}, {2, 4, 6}})), Error);
  EXPECT_THROW(EvenTriangulation::from_tuples(6, 2, ts({{1, 3, 5}, {1, 3, 6}})), Error);
  EXPECT_THROW(EvenTriangulation::from_tuples(6, 2, ts({{1, 2, 5}, {1, 3, 6}, {1, 4, 6}})), Error);
  EXPECT_THROW(EvenTriangulation::from_tuples(6, 2, ts({{1, 3}, {1, 3, 6}, {1, 4, 6}})), Error);
}

TEST(EvenTriangulation, SizeOfESetIsBinomial) {
  for (int d = 1; d <= 3; ++d)
    for (int m = 2 * d + 1; m <= 2 * d + 5; ++m) {
      EXPECT_EQ(lower_even(m, d).bits().count(), binomial(m - d - 1, d));
      EXPECT_EQ(upper_even(m, d).bits().count(), binomial(m - d - 1, d));
    }
}

TEST(Flips, UniqueFlipOfLowerTriangulation) {
  auto flips = increasing_flips(lower_even(6, 2));
  ASSERT_EQ(flips.size(), 1u);
  EXPECT_EQ(flips[0].removed, (Tuple{1, 3, 5}));
  EXPECT_EQ(flips[0].added, (Tuple{2, 4, 6}));
  EXPECT_EQ(flips[0].result, upper_even(6, 2));
  EXPECT_TRUE(increasing_flips(upper_even(6, 2)).empty());
}

TEST(Flips, ResultsAreValid) {
  for (const auto& t : flip_closure(8, 2))
    for (const auto& f : increasing_flips(t)) {
      EXPECT_NO_THROW(f.result.validate());
      EXPECT_TRUE(intertwines(f.removed, f.added));
    }
}

TEST(Flips, PolygonTriangulationsAreCatalan) {
  for (int m = 3; m <= 10; ++m) EXPECT_EQ(flip_closure(m, 1).size(), oracle::catalan(m - 2)) << m;
}

TEST(Flips, ClosureMatchesBruteForceCollections) {
  for (auto [m, d] : std::vector<std::pair<int, int>>{{6, 1}, {7, 1}, {8, 1}, {6, 2}, {7, 2}, {8, 2}, {8, 3}}) {
    std::set<std::vector<std::uint64_t>> mine;
    for (const auto& t : flip_closure(m, d)) mine.insert(masks(t.e_set()));
    std::set<std::vector<std::uint64_t>> brute;
    for (const auto& c : oracle::brute_even(m, d)) brute.insert(c);
    EXPECT_EQ(mine, brute) << m << " " << d;
  }
}

TEST(FullSimplices, RoundTripAgainstGeometricFlips) {
  for (auto [m, d] : std::vector<std::pair<int, int>>{{6, 1}, {8, 1}, {6, 2}, {7, 2}, {8, 2}, {8, 3}}) {
    auto geometric = oracle::geometric_triangulations(m, 2 * d);
    std::set<std::vector<std::uint64_t>> e_sets;
    for (const auto& cells : geometric) {
      auto e = e_of_cells(cells, d);
      e_sets.insert(e);
      std::vector<Tuple> tuples;
      for (auto x : e) tuples.push_back(Tuple::from_mask(x));
      auto t = EvenTriangulation::from_tuples(m, d, tuples);
      EXPECT_EQ(masks(full_from_e(t)), cells) << m << " " << d << " " << t.str();
    }
    EXPECT_EQ(e_sets.size(), geometric.size());
  }
}

TEST(SecondOrder, ExampleRelations) {
  auto lo = lower_even(6, 2);
  auto up = upper_even(6, 2);
  EXPECT_TRUE(leq2(lo, up));
  EXPECT_FALSE(leq2(up, lo));
  EXPECT_TRUE(leq2(lo, lo));
}

TEST(SecondOrder, SubmergedMaskCharacterisesOrder) {
  auto all = flip_closure(7, 2);
  for (const auto& a : all)
    for (const auto& b : all) EXPECT_EQ(leq2(a, b), a.bits().is_subset_of(submerged_mask(b)));
}

TEST(SecondOrder, RejectsDifferentPolytopes) { EXPECT_THROW(leq2(lower_even(6, 2), lower_even(7, 2)), Error); }

TEST(Submersion, SixPointsInFourSpace) {
  EXPECT_EQ(submersion_set(lower_even(6, 2)), ts({{1, 3, 5}}));
  EXPECT_EQ(submersion_set(upper_even(6, 2)), ts({{1, 3, 5}, {2, 4, 6}}));
}

TEST(BooleanEmbedding, SixPointsInFourSpace) {
  EXPECT_EQ(embedding_ground_even(6, 2), ts({{2, 4, 6}}));
  EXPECT_TRUE(boolean_embedding_even(lower_even(6, 2)).empty());
  EXPECT_EQ(boolean_embedding_even(upper_even(6, 2)), ts({{2, 4, 6}}));
}

TEST(BooleanEmbedding, GroundSizeIsBinomial) {
  for (int d = 1; d <= 3; ++d)
    for (int m = 2 * d + 1; m <= 2 * d + 6; ++m) EXPECT_EQ(embedding_ground_even(m, d).size(), binomial(m - d - 1, d + 1));
}

TEST(Reverse, IsAnInvolutionOnValidTriangulations) {
  for (const auto& t : flip_closure(8, 2)) {
    auto r = reverse(t);
    EXPECT_NO_THROW(r.validate());
    EXPECT_EQ(reverse(r), t);
  }
}
