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

#include "onetour/enumeration.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace onetour {
namespace {

namespace fx = testing::fixtures;

// C_n = binom(2n, n) / (n + 1) via Pascal's triangle.
Count catalan_by_binomial(int n) {
  std::vector<std::vector<Count>> pascal(static_cast<std::size_t>(2 * n) + 1);
  for (std::size_t r = 0; r < pascal.size(); ++r) {
    pascal[r].assign(r + 1, 1);
    for (std::size_t c = 1; c < r; ++c) pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
  }
  return pascal[static_cast<std::size_t>(2 * n)][static_cast<std::size_t>(n)] / static_cast<Count>(n + 1);
}

TEST(CatalanTest, Values) {
  EXPECT_EQ(catalan(0), 1u);
  EXPECT_EQ(catalan(3), 5u);
  EXPECT_EQ(catalan(6), 132u);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(catalan(n), catalan_by_binomial(n)) << n;
  EXPECT_THROW(catalan(-1), PreconditionError);
  EXPECT_THROW(catalan(40), std::overflow_error);
}

TEST(ExpectedCountTest, MatchesOeisA102693) {
  const std::vector<Count> oeis{1, 5, 42, 504, 7920};
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(expected_A_count(n), oeis[static_cast<std::size_t>(n - 2)]);
  EXPECT_EQ(expected_A_count(7), 154440u);
  EXPECT_THROW(expected_A_count(1), PreconditionError);
}

TEST(BruteForceTest, SmallCases) {
  EXPECT_EQ(brute_force_A(2), (std::vector<DiGraph>{DiGraph(2, {{1, 2}, {2, 1}})}));
  EXPECT_EQ(brute_force_A(3), fx::a3());
  EXPECT_EQ(brute_force_A(4).size(), 42u);
  EXPECT_THROW(brute_force_A(1), PreconditionError);
  EXPECT_THROW(brute_force_A(6), PreconditionError);
}

TEST(BruteForceTest, WorkerSplitDoesNotChangeResult) {
  const auto one = brute_force_A(4, 1);
  EXPECT_EQ(brute_force_A(4, 3), one);
  EXPECT_EQ(brute_force_A(4, 7), one);
}

TEST(ViaTreesTest, MatchesBruteForce) {
  for (int n = 2; n <= 4; ++n) {
    auto via_g = enumerate_A_via_g(n);
    std::sort(via_g.begin(), via_g.end());
    EXPECT_EQ(via_g, brute_force_A(n)) << "n=" << n;
  }
  EXPECT_EQ(enumerate_A_via_g(2), (std::vector<DiGraph>{DiGraph(2, {{1, 2}, {2, 1}})}));
}

TEST(CountReportTest, ThreeLegs) {
  const CountReport two = verify_theorem1(2);
  EXPECT_EQ(two.expected, 1u);
  EXPECT_EQ(two.via_bruteforce, 1u);
  EXPECT_EQ(two.via_tree_bijection, 1u);
  EXPECT_EQ(two.via_parens, 1u);
  EXPECT_TRUE(two.agree);

  const CountReport three = verify_theorem1(3);
  EXPECT_EQ(three.expected, 5u);
  EXPECT_EQ(three.via_bruteforce, 5u);
  EXPECT_EQ(three.via_tree_bijection, 5u);
  EXPECT_EQ(three.via_parens, 5u);
  EXPECT_TRUE(three.agree);

  const CountReport four = verify_theorem1(4);
  EXPECT_EQ(four.expected, 42u);
  EXPECT_EQ(four.via_bruteforce, 42u);
  EXPECT_EQ(four.via_parens, 42u);
  EXPECT_TRUE(four.agree);

  const CountReport six = verify_theorem1(6);
  EXPECT_EQ(six.expected, 7920u);
  EXPECT_FALSE(six.via_bruteforce.has_value());
  EXPECT_FALSE(six.via_parens.has_value());
  EXPECT_EQ(six.via_tree_bijection, 7920u);
  EXPECT_TRUE(six.agree);
}

}  // namespace
}  // namespace onetour
