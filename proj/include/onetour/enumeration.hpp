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

/// \file enumeration.hpp
///
/// Counting |A_n| three ways: an edge-subset scan, the image of the tree
/// bijection, and the parentheses count n! C_n / 2n. All three must equal
/// (n-1)! C_n / 2 (OEIS A102693: 1, 5, 42, 504, 7920, ...).

#ifndef ONETOUR_ENUMERATION_HPP
#define ONETOUR_ENUMERATION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "onetour/checked.hpp"
#include "onetour/digraph.hpp"
#include "onetour/parens.hpp"
#include "onetour/plane_tree.hpp"

namespace onetour {

inline Count catalan(int n) {
  if (n < 0) throw PreconditionError("catalan needs n >= 0");
  Count c = 1;
  for (int k = 0; k < n; ++k) {
    // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step.
    const unsigned __int128 next =
        static_cast<unsigned __int128>(c) * static_cast<unsigned>(2 * (2 * k + 1)) /
        static_cast<unsigned>(k + 2);
    if (next > UINT64_MAX) throw std::overflow_error("catalan number exceeds 64 bits");
    c = static_cast<Count>(next);
  }
  return c;
}

/// (n-1)! C_n / 2.
inline Count expected_A_count(int n) {
  if (n < 2) throw PreconditionError("the count (n-1)! C_n / 2 is an integer only for n >= 2");
  return detail::checked_mul(detail::factorial(static_cast<unsigned>(n - 1)), catalan(n)) / 2;
}

inline constexpr int kBruteForceMaxN = 5;
inline constexpr int kParensLegMaxN = 4;

namespace detail {

// Ordered non-loop pairs of [1..n], bit i of a subset mask selects pairs[i].
inline std::vector<Edge> candidate_pairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v) pairs.push_back({u, v});
    }
  }
  return pairs;
}

inline void scan_subsets(int n, const std::vector<Edge>& pairs, std::uint64_t begin,
                         std::uint64_t end, std::vector<DiGraph>& out) {
  std::vector<int> in(static_cast<std::size_t>(n) + 1), outd(static_cast<std::size_t>(n) + 1);
  std::vector<Edge> edges;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::fill(in.begin(), in.end(), 0);
    std::fill(outd.begin(), outd.end(), 0);
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1U) {
        ++outd[static_cast<std::size_t>(pairs[i].init)];
        ++in[static_cast<std::size_t>(pairs[i].fin)];
        edges.push_back(pairs[i]);
      }
    }
    // A tour needs balance and a non-isolated vertex set; skip the rest early.
    bool ok = true;
    for (std::size_t v = 1; v <= static_cast<std::size_t>(n) && ok; ++v) {
      ok = in[v] == outd[v] && in[v] > 0;
    }
    if (!ok) continue;
    DiGraph d(n, edges);
    if (is_single_tour_digraph(d)) out.push_back(std::move(d));
  }
}

}  // namespace detail

/// Every loopless digraph on [n] without isolated vertices and with exactly
/// one Eulerian tour, found by scanning all 2^(n(n-1)) edge subsets. The scan
/// is split into index ranges across `workers` threads; the result is sorted.
inline std::vector<DiGraph> brute_force_A(int n, unsigned workers = 0) {
  if (n < 2 || n > kBruteForceMaxN) {
    throw PreconditionError("brute force scan supports 2 <= n <= " + std::to_string(kBruteForceMaxN));
  }
  const std::vector<Edge> pairs = detail::candidate_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<std::vector<DiGraph>> parts(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, w, begin, end] { detail::scan_subsets(n, pairs, begin, end, parts[w]); });
    }
  }
  std::vector<DiGraph> all;
  for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(all.begin(), all.end());
  return all;
}

/// Image of L'_n under the tree bijection, in tree enumeration order.
inline std::vector<DiGraph> enumerate_A_via_g(int n) {
  if (n < 2) throw PreconditionError("need n >= 2");
  std::vector<DiGraph> out;
  for_each_Lprime(n, [&](const RootedPlaneTree& t) { out.push_back(tree_to_digraph(t)); });
  return out;
}

struct CountReport {
  int n = 0;
  Count expected = 0;
  std::optional<Count> via_bruteforce;  // only for n <= kBruteForceMaxN
  Count via_tree_bijection = 0;         // distinct digraphs in the image of g
  std::optional<Count> via_parens;      // only for n <= kParensLegMaxN
  bool agree = false;
};

inline CountReport verify_theorem1(int n) {
  CountReport r;
  r.n = n;
  r.expected = expected_A_count(n);
  if (n <= kBruteForceMaxN) r.via_bruteforce = brute_force_A(n).size();

  std::vector<DiGraph> image = enumerate_A_via_g(n);
  std::sort(image.begin(), image.end());
  r.via_tree_bijection = static_cast<Count>(std::unique(image.begin(), image.end()) - image.begin());

  bool parens_exact = true;
  if (n <= kParensLegMaxN) {
    Count arrangements = 0;
    for_each_valid_arrangement(n, [&](const ParenArrangement&) { ++arrangements; });
    const auto marked_per_graph = static_cast<Count>(2 * n);
    parens_exact = arrangements % marked_per_graph == 0;
    r.via_parens = arrangements / marked_per_graph;
  }

  r.agree = r.via_tree_bijection == r.expected && parens_exact &&
            (!r.via_bruteforce || *r.via_bruteforce == r.expected) &&
            (!r.via_parens || *r.via_parens == r.expected);
  return r;
}

}  // namespace onetour

#endif  // ONETOUR_ENUMERATION_HPP
