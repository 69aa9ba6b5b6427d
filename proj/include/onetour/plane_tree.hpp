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

/// \file plane_tree.hpp
///
/// Labeled rooted plane trees on {0..n} and the tree bijection.
///
///   L_n   trees with root 0 whose leftmost root child is 1; |L_n| = (n-1)! C_n
///   L'_n  the members of L_n with 2 inside the subtree of 1; |L'_n| = |L_n| / 2
///
/// swap_root_subtrees() is an involution of L_n exchanging L'_n with its
/// complement. tree_to_digraph() maps L'_n bijectively onto the single-tour
/// digraphs on {1..n}; digraph_to_tree() inverts it.

#ifndef ONETOUR_PLANE_TREE_HPP
#define ONETOUR_PLANE_TREE_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "onetour/checked.hpp"
#include "onetour/digraph.hpp"
#include "onetour/dyck.hpp"

namespace onetour {

class RootedPlaneTree {
 public:
  using ChildLists = std::vector<std::vector<Vertex>>;

  RootedPlaneTree() = default;

  /// children[x] is the ordered child list of node x; missing trailing entries
  /// are leaves. Throws PreconditionError unless this is a tree on {0..n}
  /// rooted at 0.
  RootedPlaneTree(int n, ChildLists children) : n_(n), children_(std::move(children)) {
    if (n_ < 1) throw PreconditionError("tree must have n >= 1");
    const auto nodes = static_cast<std::size_t>(n_) + 1;
    if (children_.size() > nodes) {
      throw PreconditionError("child lists given for nodes beyond n=" + std::to_string(n_));
    }
    children_.resize(nodes);
    std::vector<int> parents(nodes, 0);
    for (const auto& list : children_) {
      for (Vertex c : list) {
        if (c < 0 || c > n_) {
          throw PreconditionError("child label " + std::to_string(c) + " outside [0.." +
                                  std::to_string(n_) + "]");
        }
        if (c == 0) throw PreconditionError("the root 0 cannot be a child");
        if (++parents[static_cast<std::size_t>(c)] > 1) {
          throw PreconditionError("node " + std::to_string(c) + " has more than one parent");
        }
      }
    }
    for (std::size_t v = 1; v < nodes; ++v) {
      if (parents[v] == 0) {
        throw PreconditionError("node " + std::to_string(v) + " has no parent");
      }
    }
    // n parent links and n non-root nodes: a tree iff everything hangs off 0.
    if (subtree_size(0) != nodes) throw PreconditionError("child lists contain a cycle");
  }

  int n() const noexcept { return n_; }
  const ChildLists& child_lists() const noexcept { return children_; }

  std::span<const Vertex> children(Vertex x) const {
    return children_.at(static_cast<std::size_t>(x));
  }

  /// j-th child of x, counted from 1 at the left.
  Vertex child(Vertex x, std::size_t j) const {
    const auto kids = children(x);
    if (j < 1 || j > kids.size()) {
      throw std::out_of_range("node " + std::to_string(x) + " has no child " + std::to_string(j));
    }
    return kids[j - 1];
  }

  bool in_subtree(Vertex root, Vertex v) const {
    if (root == v) return true;
    for (Vertex c : children(root)) {
      if (in_subtree(c, v)) return true;
    }
    return false;
  }

  friend bool operator==(const RootedPlaneTree&, const RootedPlaneTree&) = default;
  friend auto operator<=>(const RootedPlaneTree&, const RootedPlaneTree&) = default;

 private:
  std::size_t subtree_size(Vertex x) const {
    std::size_t total = 1;
    std::vector<Vertex> stack{x};
    std::vector<char> seen(children_.size(), 0);
    seen[static_cast<std::size_t>(x)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex c : children_[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(c)]) return 0;
        seen[static_cast<std::size_t>(c)] = 1;
        ++total;
        stack.push_back(c);
      }
    }
    return total;
  }

  int n_ = 0;
  ChildLists children_;
};

inline bool is_in_L(const RootedPlaneTree& t) {
  return !t.children(0).empty() && t.child(0, 1) == 1;
}

inline bool is_in_Lprime(const RootedPlaneTree& t) {
  return t.n() >= 2 && is_in_L(t) && t.in_subtree(1, 2);
}

/// Exchanges the children of 1 with the root's children other than 1:
/// T(0, j+1) becomes f(T)(1, j) and T(1, j) becomes f(T)(0, j+1).
inline RootedPlaneTree swap_root_subtrees(const RootedPlaneTree& t) {
  if (!is_in_L(t)) throw PreconditionError("tree is not in L_n: leftmost child of 0 must be 1");
  auto lists = t.child_lists();
  std::vector<Vertex> root{1};
  root.insert(root.end(), lists[1].begin(), lists[1].end());
  lists[1].assign(lists[0].begin() + 1, lists[0].end());
  lists[0] = std::move(root);
  return RootedPlaneTree(t.n(), std::move(lists));
}

/// The map g. Siblings x_1..x_r of a non-root node x close the cycle
/// x -> x_1 -> ... -> x_r -> x; the root's children form x_1 -> ... -> x_r -> x_1.
inline DiGraph tree_to_digraph(const RootedPlaneTree& t) {
  if (!is_in_Lprime(t)) {
    throw PreconditionError("tree is not in L'_n: node 2 must lie in the subtree of 1");
  }
  std::vector<Edge> edges;
  for (Vertex x = 0; x <= t.n(); ++x) {
    const auto kids = t.children(x);
    const std::size_t r = kids.size();
    if (r == 0) continue;
    for (std::size_t i = 0; i + 1 < r; ++i) edges.push_back({kids[i], kids[i + 1]});
    if (x == 0) {
      // A lone root child closes no cycle; (1, 1) would be a loop.
      if (r >= 2) edges.push_back({kids[r - 1], kids[0]});
    } else {
      edges.push_back({kids[r - 1], x});
      edges.push_back({x, kids[0]});
    }
  }
  return DiGraph(t.n(), std::move(edges));
}

/// The unique T in L'_n with tree_to_digraph(T) == d.
inline RootedPlaneTree digraph_to_tree(const DiGraph& d) {
  if (d.n() < 2) throw PreconditionError("need n >= 2");
  if (!is_single_tour_digraph(d)) {
    throw PreconditionError("digraph is not a loopless single-tour digraph without isolated vertices");
  }
  const std::vector<SimpleCycle> cycles = simple_cycles(d);
  RootedPlaneTree::ChildLists children(static_cast<std::size_t>(d.n()) + 1);
  std::set<SimpleCycle> expanded;

  // Children of r are C's vertices in cycle order from `start`, skipping r.
  auto build = [&](auto&& self, Vertex r, const SimpleCycle& c, Vertex start) -> void {
    if (!expanded.insert(c).second) throw std::logic_error("cycle visited twice");
    Vertex v = start;
    for (std::size_t k = 0; k < c.vertices.size(); ++k, v = c.successor(v)) {
      if (v == r) continue;
      children[static_cast<std::size_t>(r)].push_back(v);
      for (const SimpleCycle& other : cycles_through(cycles, v)) {
        if (other != c) self(self, v, other, other.successor(v));
      }
    }
  };

  const std::vector<SimpleCycle> at_one = cycles_through(cycles, 1);
  if (at_one.size() == 1) {
    build(build, 1, at_one[0], at_one[0].successor(1));
    children[0] = {1};
  } else if (at_one.size() == 2) {
    const auto path = unique_simple_path(d, 1, 2);
    if (!path) throw std::logic_error("no unique path from 1 to 2");
    auto shares_path_edge = [&](const SimpleCycle& c) {
      for (std::size_t i = 0; i + 1 < path->size(); ++i) {
        if (c.contains_edge({(*path)[i], (*path)[i + 1]})) return true;
      }
      return false;
    };
    const SimpleCycle& root_cycle = shares_path_edge(at_one[0]) ? at_one[1] : at_one[0];
    build(build, 0, root_cycle, 1);
  } else {
    throw std::logic_error("vertex 1 lies on " + std::to_string(at_one.size()) + " cycles");
  }

  RootedPlaneTree t(d.n(), std::move(children));
  if (tree_to_digraph(t) != d) throw std::logic_error("reconstructed tree does not map back");
  return t;
}

/// Unlabeled plane trees with n+1 nodes (|U_n| = C_n), each labeled in
/// preorder, in the order of their balanced words.
inline std::vector<RootedPlaneTree> enumerate_unlabeled(int n) {
  if (n < 1) throw PreconditionError("need n >= 1");
  std::vector<RootedPlaneTree> shapes;
  for_each_dyck_word(n, [&](const DyckWord& w) {
    RootedPlaneTree::ChildLists kids(static_cast<std::size_t>(n) + 1);
    std::vector<Vertex> stack{0};
    Vertex next = 1;
    for (bool open : w) {
      if (open) {
        kids[static_cast<std::size_t>(stack.back())].push_back(next);
        stack.push_back(next++);
      } else {
        stack.pop_back();
      }
    }
    shapes.emplace_back(n, std::move(kids));
  });
  return shapes;
}

/// Calls fn(tree) for each member of L_n. Preorder node 1 is always the
/// leftmost root child, so it takes label 1 and nodes 2..n range over all
/// permutations of {2..n}.
template <typename Fn>
void for_each_L(int n, Fn&& fn) {
  for (const RootedPlaneTree& shape : enumerate_unlabeled(n)) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      RootedPlaneTree::ChildLists kids(static_cast<std::size_t>(n) + 1);
      for (Vertex x = 0; x <= n; ++x) {
        auto& dst = kids[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])];
        for (Vertex c : shape.children(x)) dst.push_back(perm[static_cast<std::size_t>(c)]);
      }
      fn(RootedPlaneTree(n, std::move(kids)));
    } while (std::next_permutation(perm.begin() + 2, perm.end()));
  }
}

template <typename Fn>
void for_each_Lprime(int n, Fn&& fn) {
  for_each_L(n, [&](RootedPlaneTree&& t) {
    if (is_in_Lprime(t)) fn(std::move(t));
  });
}

inline std::vector<RootedPlaneTree> enumerate_L(int n) {
  std::vector<RootedPlaneTree> out;
  for_each_L(n, [&](RootedPlaneTree&& t) { out.push_back(std::move(t)); });
  return out;
}

inline std::vector<RootedPlaneTree> enumerate_Lprime(int n) {
  if (n < 2) throw PreconditionError("L'_n needs n >= 2");
  std::vector<RootedPlaneTree> out;
  for_each_Lprime(n, [&](RootedPlaneTree&& t) { out.push_back(std::move(t)); });
  return out;
}

}  // namespace onetour

#endif  // ONETOUR_PLANE_TREE_HPP
