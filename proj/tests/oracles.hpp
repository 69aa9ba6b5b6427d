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

// Test-only oracles and fixtures. Nothing here calls into the code paths it
// is used to check.

#ifndef ONETOUR_TESTS_ORACLES_HPP
#define ONETOUR_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "onetour/digraph.hpp"
#include "onetour/parens.hpp"
#include "onetour/plane_tree.hpp"

namespace onetour {

// Readable gtest failure messages.
inline void PrintTo(const DiGraph& d, std::ostream* os) { *os << describe(d); }

}  // namespace onetour

namespace onetour::testing {

// Spanning in-arborescences rooted at `root`, by trying every (n-1)-subset of
// the non-loop edges: each non-root vertex keeps exactly one outgoing edge and
// walking those edges from any vertex must reach the root.
inline std::uint64_t brute_force_in_trees(const DiGraph& d, Vertex root) {
  std::vector<Edge> edges;
  for (const Edge& e : d.edges()) {
    if (!e.is_loop()) edges.push_back(e);
  }
  const int n = d.n();
  const std::size_t need = static_cast<std::size_t>(n - 1);
  if (edges.size() < need) return 0;
  std::uint64_t count = 0;
  std::vector<char> pick(edges.size(), 0);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(need), pick.end(), 1);
  do {
    std::vector<Vertex> next(static_cast<std::size_t>(n) + 1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!pick[i]) continue;
      const Edge& e = edges[i];
      if (e.init == root || next[static_cast<std::size_t>(e.init)] != 0) ok = false;
      next[static_cast<std::size_t>(e.init)] = e.fin;
    }
    for (Vertex v = 1; v <= n && ok; ++v) {
      Vertex at = v;
      for (int steps = 0; steps < n && at != root; ++steps) at = next[static_cast<std::size_t>(at)];
      ok = at == root;
    }
    if (ok) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

// All digraphs on [n] whose edge set is a subset of `pairs`, as a bitmask scan.
inline DiGraph from_mask(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1U) edges.push_back(pairs[i]);
  }
  return DiGraph(n, std::move(edges));
}

inline std::vector<Edge> all_pairs(int n, bool with_loops) {
  std::vector<Edge> pairs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v || with_loops) pairs.push_back({u, v});
    }
  }
  return pairs;
}

inline bool balanced(const DiGraph& d) {
  std::vector<int> diff(static_cast<std::size_t>(d.n()) + 1, 0);
  for (const Edge& e : d.edges()) {
    ++diff[static_cast<std::size_t>(e.init)];
    --diff[static_cast<std::size_t>(e.fin)];
  }
  return std::all_of(diff.begin(), diff.end(), [](int x) { return x == 0; });
}

// Strong connectivity by Floyd-Warshall style transitive closure.
inline bool strongly_connected_closure(const DiGraph& d) {
  const auto n = static_cast<std::size_t>(d.n());
  std::vector<std::vector<char>> r(n + 1, std::vector<char>(n + 1, 0));
  for (std::size_t v = 1; v <= n; ++v) r[v][v] = 1;
  for (const Edge& e : d.edges()) r[static_cast<std::size_t>(e.init)][static_cast<std::size_t>(e.fin)] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (!r[i][j]) return false;
  return true;
}

// Random balanced strongly connected digraph with outdegree <= max_out.
inline DiGraph random_balanced_connected(std::mt19937_64& rng, int n, bool with_loops, int max_out = 3) {
  const std::vector<Edge> pairs = all_pairs(n, with_loops);
  std::bernoulli_distribution coin(0.4);
  for (;;) {
    std::vector<Edge> edges;
    std::vector<int> out(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : pairs) {
      if (coin(rng)) {
        edges.push_back(e);
        ++out[static_cast<std::size_t>(e.init)];
      }
    }
    if (std::any_of(out.begin(), out.end(), [&](int k) { return k > max_out; })) continue;
    DiGraph d(n, std::move(edges));
    if (d.size() > 0 && balanced(d) && strongly_connected_closure(d)) return d;
  }
}

// Random valid arrangement: a balanced word by rejection, opens labeled by a
// random permutation.
inline ParenArrangement random_valid_arrangement(std::mt19937_64& rng, int n) {
  std::vector<bool> word(static_cast<std::size_t>(2 * n), false);
  std::fill(word.begin(), word.begin() + n, true);
  for (;;) {
    std::shuffle(word.begin(), word.end(), rng);
    int depth = 0;
    bool ok = true;
    for (bool open : word) {
      depth += open ? 1 : -1;
      if (depth < 0) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<Token> tokens;
  std::vector<int> stack;
  std::size_t next = 0;
  for (bool open : word) {
    if (open) {
      stack.push_back(labels[next++]);
      tokens.push_back({TokenKind::open, stack.back()});
    } else {
      tokens.push_back({TokenKind::close, stack.back()});
      stack.pop_back();
    }
  }
  return ParenArrangement(std::move(tokens));
}

// Worked examples.
namespace fixtures {

inline DiGraph three_cycle() { return DiGraph(3, {{1, 2}, {2, 3}, {3, 1}}); }
inline DiGraph bowtie() { return DiGraph(3, {{1, 2}, {2, 1}, {1, 3}, {3, 1}}); }
inline DiGraph complete3() { return DiGraph(3, all_pairs(3, false)); }

// The B_3* example with marked edge 2 -> 1.
inline DiGraph b3_example() { return DiGraph(3, {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 3}}); }

inline RootedPlaneTree g_tree() {
  return RootedPlaneTree(9, {{1, 4, 5}, {2, 7, 3}, {}, {}, {}, {6}, {}, {9, 8}});
}
inline DiGraph g_digraph() {
  return DiGraph(9, {{1, 2}, {2, 7}, {7, 3}, {3, 1}, {7, 9}, {9, 8}, {8, 7}, {1, 4}, {4, 5}, {5, 1}, {5, 6}, {6, 5}});
}

inline RootedPlaneTree inverse_tree() { return RootedPlaneTree(6, {{1, 4, 6, 3}, {5, 2}}); }
inline DiGraph inverse_digraph() {
  return DiGraph(6, {{1, 5}, {5, 2}, {2, 1}, {1, 4}, {4, 6}, {6, 3}, {3, 1}});
}

inline RootedPlaneTree f_tree() { return RootedPlaneTree(6, {{1, 4, 5}, {2, 3}, {}, {}, {}, {6}}); }
inline RootedPlaneTree f_image() { return RootedPlaneTree(6, {{1, 2, 3}, {4, 5}, {}, {}, {}, {6}}); }

// The five members of A_3.
inline std::vector<DiGraph> a3() {
  std::vector<DiGraph> out{
      DiGraph(3, {{1, 2}, {2, 3}, {3, 1}}),
      DiGraph(3, {{1, 3}, {3, 2}, {2, 1}}),
      DiGraph(3, {{1, 3}, {3, 1}, {1, 2}, {2, 1}}),  // centered at 1
      DiGraph(3, {{2, 1}, {1, 2}, {2, 3}, {3, 2}}),  // centered at 2
      DiGraph(3, {{3, 1}, {1, 3}, {3, 2}, {2, 3}}),  // centered at 3
  };
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
}  // namespace onetour::testing

#endif  // ONETOUR_TESTS_ORACLES_HPP
