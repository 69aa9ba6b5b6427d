// Copyright 2026 The onetour Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "onetour/best.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace onetour {
namespace {

using testing::all_pairs;
using testing::brute_force_in_trees;
using testing::from_mask;
namespace fx = testing::fixtures;

TEST(BareissTest, SmallDeterminants) {
  IntMatrix m(3);
  // [[2,-1,0],[-1,2,-1],[0,-1,2]] has determinant 4.
  m(0, 0) = 2; m(0, 1) = -1;
  m(1, 0) = -1; m(1, 1) = 2; m(1, 2) = -1;
  m(2, 1) = -1; m(2, 2) = 2;
  EXPECT_EQ(bareiss_determinant(m), 4);

  IntMatrix p(2);  // needs a row swap: [[0,1],[1,0]] -> -1
  p(0, 1) = 1;
  p(1, 0) = 1;
  EXPECT_EQ(bareiss_determinant(p), -1);

  EXPECT_EQ(bareiss_determinant(IntMatrix(0)), 1);

  IntMatrix singular(2);
  singular(0, 0) = 1; singular(0, 1) = 2;
  singular(1, 0) = 2; singular(1, 1) = 4;
  EXPECT_EQ(bareiss_determinant(singular), 0);
}

TEST(BareissTest, OverflowFailsLoudly) {
  IntMatrix m(2);
  m(0, 0) = INT64_MAX / 2;
  m(0, 1) = -(INT64_MAX / 2);
  m(1, 0) = INT64_MAX / 2;
  m(1, 1) = INT64_MAX / 2;
  EXPECT_THROW(bareiss_determinant(m), std::overflow_error);
}

TEST(LaplacianTest, LoopsLeaveNoTrace) {
  const IntMatrix with = laplacian(fx::b3_example());
  const IntMatrix without = laplacian(DiGraph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}}));
  for (std::size_t r = 0; r < 3; ++r) {
    std::int64_t row = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_EQ(with(r, c), without(r, c));
      row += with(r, c);
    }
    EXPECT_EQ(row, 0);
  }
}

TEST(CountInTreesTest, Examples) {
  EXPECT_EQ(count_in_trees(DiGraph(2, {{1, 2}, {2, 1}}), 1), 1u);
  for (const DiGraph& d : fx::a3()) {
    for (Vertex v = 1; v <= 3; ++v) EXPECT_EQ(count_in_trees(d, v), 1u) << describe(d);
  }
  EXPECT_EQ(brute_force_in_trees(fx::complete3(), 1), 3u);
  EXPECT_EQ(count_in_trees(fx::complete3(), 1), 3u);
  EXPECT_EQ(count_in_trees(DiGraph(3, {{1, 2}, {2, 1}}), 1), 0u);
  EXPECT_THROW(count_in_trees(fx::three_cycle(), 4), PreconditionError);
}

TEST(CountInTreesTest, MatchesBruteForceOnAllSmallDigraphs) {
  for (int n = 1; n <= 4; ++n) {
    const auto pairs = all_pairs(n, false);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      const DiGraph d = from_mask(n, pairs, mask);
      for (Vertex v = 1; v <= n; ++v) {
        ASSERT_EQ(count_in_trees(d, v), brute_force_in_trees(d, v)) << describe(d) << " root " << v;
      }
    }
  }
}

TEST(CountInTreesTest, MatchesBruteForceOnRandomDigraphs) {
  std::mt19937_64 rng(20240519);
  for (int n : {5, 6}) {
    const auto pairs = all_pairs(n, true);
    std::uniform_int_distribution<std::uint64_t> masks(0, (std::uint64_t{1} << pairs.size()) - 1);
    for (int trial = 0; trial < 120; ++trial) {
      const DiGraph d = from_mask(n, pairs, masks(rng));
      for (Vertex v = 1; v <= n; ++v) {
        ASSERT_EQ(count_in_trees(d, v), brute_force_in_trees(d, v)) << describe(d);
      }
    }
  }
}

TEST(BestCountTest, Examples) {
  EXPECT_EQ(best_count(fx::three_cycle(), {1, 2}), 1u);
  EXPECT_EQ(best_count(fx::bowtie(), {1, 2}), 1u);
  EXPECT_EQ(best_count(fx::complete3(), {1, 2}), 3u);
  EXPECT_EQ(best_count(fx::b3_example(), {2, 1}), 1u);
  EXPECT_EQ(best_count(DiGraph(1, {{1, 1}}), {1, 1}), 1u);
}

TEST(BestCountTest, RejectsPreconditionViolations) {
  EXPECT_THROW(best_count(DiGraph(3, {{1, 2}, {2, 3}}), {1, 2}), PreconditionError);
  EXPECT_THROW(best_count(DiGraph(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}}), {1, 2}), PreconditionError);
  EXPECT_THROW(best_count(DiGraph(3, {{1, 2}, {2, 1}}), {1, 2}), PreconditionError);
  EXPECT_THROW(best_count(fx::three_cycle(), {2, 1}), PreconditionError);
}

TEST(BestCountTest, EqualsTourEnumerationOnSmallBalancedDigraphs) {
  for (int n = 1; n <= 3; ++n) {
    const auto pairs = all_pairs(n, true);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      const DiGraph d = from_mask(n, pairs, mask);
      if (!testing::balanced(d) || !testing::strongly_connected_closure(d)) continue;
      for (const Edge& e : d.edges()) {
        ASSERT_EQ(best_count(d, e), eulerian_tours_from_edge(d, e).size()) << describe(d);
      }
    }
  }
}

TEST(ArborescenceCriterionTest, Examples) {
  for (const DiGraph& d : fx::a3()) EXPECT_TRUE(satisfies_arborescence_criterion(d));
  EXPECT_FALSE(satisfies_arborescence_criterion(fx::complete3()));
  EXPECT_TRUE(satisfies_arborescence_criterion(DiGraph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})));
  EXPECT_THROW(satisfies_arborescence_criterion(fx::b3_example()), PreconditionError);

  const auto why = arborescence_criterion_violation(
      DiGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {3, 1}, {4, 1}}));
  ASSERT_TRUE(why.has_value());
  EXPECT_EQ(*why, "vertex 1 has outdegree 3; outdegree must be 1 or 2");
}

}  // namespace
}  // namespace onetour
