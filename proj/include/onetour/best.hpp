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

/// \file best.hpp
///
/// Eulerian tour counting through the BEST theorem:
///
///   eps(D, e) = tau(D, v) * prod_u (outdeg(u) - 1)!,   v = init(e),
///
/// where tau(D, v) is the number of spanning in-arborescences rooted at v,
/// obtained exactly as a principal minor of the out-degree Laplacian.

#ifndef ONETOUR_BEST_HPP
#define ONETOUR_BEST_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onetour/checked.hpp"
#include "onetour/digraph.hpp"

namespace onetour {

/// Square matrix of exact 64-bit integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t order) : order_(order), data_(order * order, 0) {}

  std::size_t order() const noexcept { return order_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * order_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * order_ + c]; }

  /// Copy with row and column k removed.
  IntMatrix without(std::size_t k) const {
    IntMatrix m(order_ - 1);
    for (std::size_t r = 0, rr = 0; r < order_; ++r) {
      if (r == k) continue;
      for (std::size_t c = 0, cc = 0; c < order_; ++c) {
        if (c == k) continue;
        m(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return m;
  }

 private:
  std::size_t order_;
  std::vector<std::int64_t> data_;
};

/// Out-degree Laplacian: diagonal holds the loop-free outdegree, entry (u, v)
/// is minus the number of edges u -> v. Row r corresponds to vertex r + 1.
/// Loops cancel out and leave no trace.
inline IntMatrix laplacian(const DiGraph& d) {
  IntMatrix m(static_cast<std::size_t>(d.n()));
  for (const Edge& e : d.edges()) {
    if (e.is_loop()) continue;
    const auto u = static_cast<std::size_t>(e.init - 1);
    const auto v = static_cast<std::size_t>(e.fin - 1);
    m(u, u) += 1;
    m(u, v) -= 1;
  }
  return m;
}

/// Fraction-free (Bareiss) determinant. Every division is exact; products are
/// formed in 128 bits and narrowed with an overflow check.
inline std::int64_t bareiss_determinant(IntMatrix m) {
  const std::size_t k = m.order();
  if (k == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (m(i, i) == 0) {
      std::size_t r = i + 1;
      while (r < k && m(r, i) == 0) ++r;
      if (r == k) return 0;
      for (std::size_t c = 0; c < k; ++c) std::swap(m(i, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) {
        const __int128 num = static_cast<__int128>(m(r, c)) * m(i, i) -
                             static_cast<__int128>(m(r, i)) * m(i, c);
        m(r, c) = detail::narrow_i128(num / prev);
      }
      m(r, i) = 0;
    }
    prev = m(i, i);
  }
  return sign * m(k - 1, k - 1);
}

/// tau(D, v): the number of spanning trees with every edge directed toward v.
inline Count count_in_trees(const DiGraph& d, Vertex v) {
  if (v < 1 || v > d.n()) {
    throw PreconditionError("root " + std::to_string(v) + " is not a vertex of the digraph");
  }
  const std::int64_t det = bareiss_determinant(laplacian(d).without(static_cast<std::size_t>(v - 1)));
  if (det < 0) throw std::logic_error("negative arborescence count");
  return static_cast<Count>(det);
}

/// prod over all vertices of (outdeg(u) - 1)!, loops included in outdeg.
inline Count outdegree_factorial_product(const DiGraph& d) {
  const DegreeTable deg = degrees(d);
  Count prod = 1;
  for (Vertex u = 1; u <= d.n(); ++u) {
    const int out = deg[u].out;
    if (out == 0) throw PreconditionError("vertex " + std::to_string(u) + " has outdegree 0");
    prod = detail::checked_mul(prod, detail::factorial(static_cast<unsigned>(out - 1)));
  }
  return prod;
}

/// Number of Eulerian tours starting with edge e, by the BEST formula.
/// D must be connected and balanced.
inline Count best_count(const DiGraph& d, const Edge& e) {
  if (!d.has_edge(e)) {
    throw PreconditionError("edge " + to_string(e) + " is not an edge of the digraph");
  }
  if (!degrees(d).balanced()) throw PreconditionError("digraph is not balanced");
  if (!is_strongly_connected(d)) throw PreconditionError("digraph is not connected");
  return detail::checked_mul(count_in_trees(d, e.init), outdegree_factorial_product(d));
}

/// Why a loopless digraph without isolated vertices fails the arborescence
/// criterion (exactly one in-arborescence per root, every outdegree 1 or 2),
/// or nullopt if it satisfies it.
inline std::optional<std::string> arborescence_criterion_violation(const DiGraph& d) {
  detail::require_loopless_without_isolated(d);
  const DegreeTable deg = degrees(d);
  for (Vertex v = 1; v <= d.n(); ++v) {
    if (deg[v].out != 1 && deg[v].out != 2) {
      return "vertex " + std::to_string(v) + " has outdegree " + std::to_string(deg[v].out) +
             "; outdegree must be 1 or 2";
    }
  }
  for (Vertex v = 1; v <= d.n(); ++v) {
    const Count tau = count_in_trees(d, v);
    if (tau != 1) {
      return "vertex " + std::to_string(v) + " is the root of " + std::to_string(tau) +
             " spanning in-arborescences; exactly one is required";
    }
  }
  return std::nullopt;
}

inline bool satisfies_arborescence_criterion(const DiGraph& d) {
  return !arborescence_criterion_violation(d).has_value();
}

}  // namespace onetour

#endif  // ONETOUR_BEST_HPP
