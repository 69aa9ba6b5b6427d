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

/// \file digraph.hpp
///
/// Simple digraphs on the vertex set {1..n}, their structural predicates, and
/// exhaustive Eulerian tour search.
///
/// A digraph here has at most one edge per ordered pair (init, fin); a loop
/// (v, v) is allowed at most once per vertex. Edges are kept in lexicographic
/// order, so two DiGraph values are equal exactly when they describe the same
/// graph.
///
/// "Single-tour digraph" means a loopless digraph without isolated vertices
/// that has exactly one Eulerian tour up to cyclic shift. The set of such
/// digraphs on {1..n} is written A_n in the README.

#ifndef ONETOUR_DIGRAPH_HPP
#define ONETOUR_DIGRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "onetour/checked.hpp"

namespace onetour {

using Vertex = int;

struct Edge {
  Vertex init = 0;
  Vertex fin = 0;

  bool is_loop() const noexcept { return init == fin; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.init) + "," + std::to_string(e.fin) + ")";
}

class DiGraph {
 public:
  DiGraph() = default;

  /// Builds a digraph on {1..n}. The edge list may be given in any order; it
  /// is sorted. Throws PreconditionError on out-of-range endpoints or a
  /// repeated (init, fin) pair.
  DiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) {
      throw PreconditionError("digraph must have at least one vertex, got n=" +
                              std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.init < 1 || e.init > n_ || e.fin < 1 || e.fin > n_) {
        throw PreconditionError("edge " + to_string(e) + " has an endpoint outside [1.." +
                                std::to_string(n_) + "]");
      }
      if (i > 0 && edges_[i - 1] == e) {
        throw PreconditionError("edge " + to_string(e) + " appears more than once");
      }
    }
    out_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      out_[static_cast<std::size_t>(edges_[i].init)].push_back(i);
    }
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  /// Indices into edges() of the edges leaving v, in increasing fin order.
  std::span<const std::size_t> out_edge_indices(Vertex v) const {
    return out_.at(static_cast<std::size_t>(v));
  }

  std::optional<std::size_t> index_of(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool has_edge(const Edge& e) const { return index_of(e).has_value(); }

  bool has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
  }

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend std::strong_ordering operator<=>(const DiGraph& a, const DiGraph& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(),
                                                  b.edges_.begin(), b.edges_.end());
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

struct Degree {
  int in = 0;
  int out = 0;
  friend bool operator==(const Degree&, const Degree&) = default;
};

/// In/out degrees indexed by vertex id. Loops count once toward each.
class DegreeTable {
 public:
  explicit DegreeTable(const DiGraph& d) : table_(static_cast<std::size_t>(d.n()) + 1) {
    for (const Edge& e : d.edges()) {
      ++table_[static_cast<std::size_t>(e.init)].out;
      ++table_[static_cast<std::size_t>(e.fin)].in;
    }
  }

  const Degree& operator[](Vertex v) const { return table_.at(static_cast<std::size_t>(v)); }
  int n() const noexcept { return static_cast<int>(table_.size()) - 1; }

  bool balanced() const {
    return std::all_of(table_.begin() + 1, table_.end(),
                       [](const Degree& d) { return d.in == d.out; });
  }

  std::optional<Vertex> first_isolated() const {
    for (Vertex v = 1; v <= n(); ++v) {
      if (table_[static_cast<std::size_t>(v)].in + table_[static_cast<std::size_t>(v)].out == 0) {
        return v;
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<Degree> table_;
};

inline DegreeTable degrees(const DiGraph& d) { return DegreeTable(d); }

inline bool has_isolated_vertex(const DiGraph& d) {
  return degrees(d).first_isolated().has_value();
}

inline bool is_strongly_connected(const DiGraph& d) {
  const auto n = static_cast<std::size_t>(d.n());
  std::vector<std::vector<Vertex>> fwd(n + 1), rev(n + 1);
  for (const Edge& e : d.edges()) {
    fwd[static_cast<std::size_t>(e.init)].push_back(e.fin);
    rev[static_cast<std::size_t>(e.fin)].push_back(e.init);
  }
  auto reaches_all = [n](const std::vector<std::vector<Vertex>>& adj) {
    std::vector<char> seen(n + 1, 0);
    std::vector<Vertex> stack{1};
    seen[1] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(fwd) && reaches_all(rev);
}

/// A closed walk using every edge once, stored as its edge sequence.
struct EulerianTour {
  std::vector<Edge> edges;

  /// The rotation that starts with the lexicographically smallest edge.
  EulerianTour canonical() const {
    if (edges.empty()) return *this;
    auto first = std::min_element(edges.begin(), edges.end());
    EulerianTour out;
    out.edges.reserve(edges.size());
    out.edges.insert(out.edges.end(), first, edges.end());
    out.edges.insert(out.edges.end(), edges.begin(), first);
    return out;
  }

  /// The vertex sequence a1 a2 ... ak with (ak, a1) closing the tour.
  std::vector<Vertex> vertex_sequence() const {
    std::vector<Vertex> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.push_back(e.init);
    return out;
  }

  bool is_tour_of(const DiGraph& d) const {
    if (edges.size() != d.size()) return false;
    std::vector<char> used(d.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto idx = d.index_of(edges[i]);
      if (!idx || used[*idx]) return false;
      used[*idx] = 1;
      if (edges[i].fin != edges[(i + 1) % edges.size()].init) return false;
    }
    return true;
  }

  friend bool operator==(const EulerianTour&, const EulerianTour&) = default;
};

/// A simple oriented cycle, smallest vertex first. A loop is a cycle of length 1.
struct SimpleCycle {
  std::vector<Vertex> vertices;

  bool contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      out.push_back({vertices[i], vertices[(i + 1) % vertices.size()]});
    }
    return out;
  }

  bool contains_edge(const Edge& e) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == e.init && vertices[(i + 1) % vertices.size()] == e.fin) return true;
    }
    return false;
  }

  /// Successor of v along the cycle. v must lie on the cycle.
  Vertex successor(Vertex v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) {
      throw PreconditionError("vertex " + std::to_string(v) + " is not on the cycle");
    }
    ++it;
    return it == vertices.end() ? vertices.front() : *it;
  }

  friend auto operator<=>(const SimpleCycle&, const SimpleCycle&) = default;
  friend bool operator==(const SimpleCycle&, const SimpleCycle&) = default;
};

namespace detail {

inline std::vector<std::vector<Vertex>> successor_lists(const DiGraph& d) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(d.n()) + 1);
  for (const Edge& e : d.edges()) adj[static_cast<std::size_t>(e.init)].push_back(e.fin);
  return adj;
}

class TourSearch {
 public:
  TourSearch(const DiGraph& d, Count limit, std::vector<EulerianTour>* sink)
      : d_(d), used_(d.size(), 0), limit_(limit), sink_(sink) {}

  Count run(std::size_t first) {
    used_[first] = 1;
    path_.push_back(first);
    extend(d_.edge(first).fin);
    return found_;
  }

 private:
  void extend(Vertex at) {
    if (path_.size() == d_.size()) {
      // Closing condition: the last edge must lead back to the first edge's tail.
      if (at == d_.edge(path_.front()).init) {
        ++found_;
        if (sink_) {
          EulerianTour t;
          t.edges.reserve(path_.size());
          for (std::size_t i : path_) t.edges.push_back(d_.edge(i));
          sink_->push_back(std::move(t));
        }
      }
      return;
    }
    for (std::size_t i : d_.out_edge_indices(at)) {
      if (found_ >= limit_) return;
      if (used_[i]) continue;
      used_[i] = 1;
      path_.push_back(i);
      extend(d_.edge(i).fin);
      path_.pop_back();
      used_[i] = 0;
    }
  }

  const DiGraph& d_;
  std::vector<char> used_;
  std::vector<std::size_t> path_;
  Count found_ = 0;
  Count limit_;
  std::vector<EulerianTour>* sink_;
};

inline std::size_t require_edge(const DiGraph& d, const Edge& e) {
  auto idx = d.index_of(e);
  if (!idx) throw PreconditionError("edge " + to_string(e) + " is not an edge of the digraph");
  return *idx;
}

}  // namespace detail

/// All simple oriented cycles, each rotated to start at its smallest vertex,
/// in lexicographic order.
inline std::vector<SimpleCycle> simple_cycles(const DiGraph& d) {
  const auto adj = detail::successor_lists(d);
  std::vector<SimpleCycle> cycles;
  std::vector<char> on_path(static_cast<std::size_t>(d.n()) + 1, 0);
  std::vector<Vertex> path;

  // Cycles are discovered from their smallest vertex only.
  auto dfs = [&](auto&& self, Vertex start, Vertex at) -> void {
    for (Vertex w : adj[static_cast<std::size_t>(at)]) {
      if (w == start) {
        cycles.push_back({path});
      } else if (w > start && !on_path[static_cast<std::size_t>(w)]) {
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
      }
    }
  };
  for (Vertex s = 1; s <= d.n(); ++s) {
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = 1;
    dfs(dfs, s, s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

/// Number of simple oriented paths from u to v (u != v), stopping once
/// `limit` paths have been seen.
inline Count count_simple_paths(const DiGraph& d, Vertex u, Vertex v,
                                Count limit = std::numeric_limits<Count>::max()) {
  if (u == v || u < 1 || v < 1 || u > d.n() || v > d.n()) {
    throw PreconditionError("simple path endpoints must be distinct vertices of the digraph");
  }
  const auto adj = detail::successor_lists(d);
  std::vector<char> on_path(static_cast<std::size_t>(d.n()) + 1, 0);
  Count found = 0;
  auto dfs = [&](auto&& self, Vertex at) -> void {
    if (at == v) {
      ++found;
      return;
    }
    on_path[static_cast<std::size_t>(at)] = 1;
    for (Vertex w : adj[static_cast<std::size_t>(at)]) {
      if (found >= limit) break;
      if (!on_path[static_cast<std::size_t>(w)]) self(self, w);
    }
    on_path[static_cast<std::size_t>(at)] = 0;
  };
  dfs(dfs, u);
  return found;
}

/// The simple oriented path from u to v, if it exists and is the only one.
inline std::optional<std::vector<Vertex>> unique_simple_path(const DiGraph& d, Vertex u, Vertex v) {
  if (count_simple_paths(d, u, v, 2) != 1) return std::nullopt;
  const auto adj = detail::successor_lists(d);
  std::vector<char> on_path(static_cast<std::size_t>(d.n()) + 1, 0);
  std::vector<Vertex> path;
  auto dfs = [&](auto&& self, Vertex at) -> bool {
    path.push_back(at);
    if (at == v) return true;
    on_path[static_cast<std::size_t>(at)] = 1;
    for (Vertex w : adj[static_cast<std::size_t>(at)]) {
      if (!on_path[static_cast<std::size_t>(w)] && self(self, w)) return true;
    }
    on_path[static_cast<std::size_t>(at)] = 0;
    path.pop_back();
    return false;
  };
  dfs(dfs, u);
  return path;
}

/// Every Eulerian tour whose first edge is `first`, by exhaustive backtracking.
inline std::vector<EulerianTour> eulerian_tours_from_edge(const DiGraph& d, const Edge& first) {
  const std::size_t idx = detail::require_edge(d, first);
  std::vector<EulerianTour> tours;
  detail::TourSearch(d, std::numeric_limits<Count>::max(), &tours).run(idx);
  return tours;
}

/// Counting variant of eulerian_tours_from_edge; stops at `limit`.
inline Count count_tours_from_edge(const DiGraph& d, const Edge& first,
                                   Count limit = std::numeric_limits<Count>::max()) {
  const std::size_t idx = detail::require_edge(d, first);
  if (!degrees(d).balanced()) return 0;
  return detail::TourSearch(d, limit, nullptr).run(idx);
}

/// Number of Eulerian tours up to cyclic shift. Each shift class has exactly
/// one member starting with a fixed edge, so this counts tours from edges()[0].
inline Count count_tours_up_to_shift(const DiGraph& d,
                                     Count limit = std::numeric_limits<Count>::max()) {
  if (d.size() == 0) throw PreconditionError("digraph has no edges");
  return count_tours_from_edge(d, d.edge(0), limit);
}

/// Loopless, no isolated vertex, and exactly one Eulerian tour up to shift.
inline bool is_single_tour_digraph(const DiGraph& d) {
  if (d.has_loops() || has_isolated_vertex(d)) return false;
  if (!degrees(d).balanced() || !is_strongly_connected(d)) return false;
  return count_tours_up_to_shift(d, 2) == 1;
}

namespace detail {

inline void require_loopless_without_isolated(const DiGraph& d) {
  for (const Edge& e : d.edges()) {
    if (e.is_loop()) throw PreconditionError("digraph has a loop at vertex " + std::to_string(e.init));
  }
  if (auto v = degrees(d).first_isolated()) {
    throw PreconditionError("vertex " + std::to_string(*v) + " is isolated");
  }
}

}  // namespace detail

/// Why a loopless digraph without isolated vertices fails the path/cycle
/// criterion (a unique simple path between every ordered pair of distinct
/// vertices, every vertex on one or two simple cycles), or nullopt.
inline std::optional<std::string> path_cycle_criterion_violation(const DiGraph& d) {
  detail::require_loopless_without_isolated(d);
  for (Vertex u = 1; u <= d.n(); ++u) {
    for (Vertex v = 1; v <= d.n(); ++v) {
      if (u == v) continue;
      const Count paths = count_simple_paths(d, u, v, 2);
      if (paths != 1) {
        return "there " + std::string(paths == 0 ? "is no" : "is more than one") +
               " simple path from " + std::to_string(u) + " to " + std::to_string(v);
      }
    }
  }
  std::vector<int> on_cycles(static_cast<std::size_t>(d.n()) + 1, 0);
  for (const SimpleCycle& c : simple_cycles(d)) {
    for (Vertex v : c.vertices) ++on_cycles[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 1; v <= d.n(); ++v) {
    const int k = on_cycles[static_cast<std::size_t>(v)];
    if (k != 1 && k != 2) {
      return "vertex " + std::to_string(v) + " lies on " + std::to_string(k) +
             " simple cycles; it must lie on one or two";
    }
  }
  return std::nullopt;
}

inline bool satisfies_path_cycle_criterion(const DiGraph& d) {
  return !path_cycle_criterion_violation(d).has_value();
}

/// No edge lies on two distinct simple cycles.
inline bool cycles_edge_disjoint(const DiGraph& d) {
  std::vector<int> hits(d.size(), 0);
  for (const SimpleCycle& c : simple_cycles(d)) {
    for (const Edge& e : c.edges()) {
      if (++hits[*d.index_of(e)] > 1) return false;
    }
  }
  return true;
}

/// Cycles through v, in the order returned by simple_cycles.
inline std::vector<SimpleCycle> cycles_through(const std::vector<SimpleCycle>& cycles, Vertex v) {
  std::vector<SimpleCycle> out;
  for (const SimpleCycle& c : cycles) {
    if (c.contains(v)) out.push_back(c);
  }
  return out;
}

inline std::string describe(const DiGraph& d) {
  std::ostringstream os;
  os << "n=" << d.n() << " {";
  bool first = true;
  for (const Edge& e : d.edges()) {
    os << (first ? "" : ",") << to_string(e);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace onetour

#endif  // ONETOUR_DIGRAPH_HPP
