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

/// \file parens.hpp
///
/// Labeled parentheses arrangements and the second bijection.
///
/// B_n is the set of digraphs on {1..n}, loops allowed, where every vertex has
/// indegree and outdegree 2 and there is exactly one Eulerian tour. Adding a
/// loop at every outdegree-1 vertex maps A_n onto B_n. A B_n digraph with a
/// marked edge is read off as an arrangement by walking its tour from the
/// marked edge: the first arrival at i opens pair i, the second closes it.

#ifndef ONETOUR_PARENS_HPP
#define ONETOUR_PARENS_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "onetour/checked.hpp"
#include "onetour/digraph.hpp"
#include "onetour/dyck.hpp"

namespace onetour {

enum class TokenKind { open, close };

struct Token {
  TokenKind kind = TokenKind::open;
  int label = 0;

  friend auto operator<=>(const Token&, const Token&) = default;
  friend bool operator==(const Token&, const Token&) = default;
};

inline std::string to_string(const Token& t) {
  return (t.kind == TokenKind::open ? "(" : ")") + std::to_string(t.label);
}

/// 2n tokens where each label in [1..n] opens once and later closes once.
/// Interlacing is allowed here; see is_valid().
class ParenArrangement {
 public:
  ParenArrangement() = default;

  explicit ParenArrangement(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty() || tokens_.size() % 2 != 0) {
      throw PreconditionError("arrangement must have a positive even number of tokens");
    }
    n_ = static_cast<int>(tokens_.size() / 2);
    std::vector<int> state(static_cast<std::size_t>(n_) + 1, 0);  // 0 unseen, 1 open, 2 closed
    for (const Token& t : tokens_) {
      if (t.label < 1 || t.label > n_) {
        throw PreconditionError("token " + to_string(t) + " has a label outside [1.." +
                                std::to_string(n_) + "]");
      }
      int& s = state[static_cast<std::size_t>(t.label)];
      if (t.kind == TokenKind::open) {
        if (s != 0) throw PreconditionError("label " + std::to_string(t.label) + " opens twice");
        s = 1;
      } else {
        if (s == 0) {
          throw PreconditionError("label " + std::to_string(t.label) + " closes before it opens");
        }
        if (s == 2) throw PreconditionError("label " + std::to_string(t.label) + " closes twice");
        s = 2;
      }
    }
  }

  int n() const noexcept { return n_; }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(tokens_.size());
    for (const Token& t : tokens_) out.push_back(t.label);
    return out;
  }

  friend bool operator==(const ParenArrangement&, const ParenArrangement&) = default;
  friend auto operator<=>(const ParenArrangement&, const ParenArrangement&) = default;

 private:
  int n_ = 0;
  std::vector<Token> tokens_;
};

/// Text form: "(1 )1 (2 (3 )3 )2".
inline std::string to_text(const ParenArrangement& w) {
  std::string out;
  for (const Token& t : w.tokens()) {
    if (!out.empty()) out += ' ';
    out += to_string(t);
  }
  return out;
}

inline ParenArrangement parse_arrangement(const std::string& text) {
  std::istringstream in(text);
  std::vector<Token> tokens;
  std::string word;
  while (in >> word) {
    if (word.size() < 2 || (word[0] != '(' && word[0] != ')')) {
      throw PreconditionError("malformed token '" + word + "'");
    }
    const std::string digits = word.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 9) {
      throw PreconditionError("malformed token '" + word + "'");
    }
    tokens.push_back({word[0] == '(' ? TokenKind::open : TokenKind::close, std::stoi(digits)});
  }
  return ParenArrangement(std::move(tokens));
}

/// No two pairs interlace: each close matches the innermost open pair.
inline bool is_valid(const ParenArrangement& w) {
  std::vector<int> stack;
  for (const Token& t : w.tokens()) {
    if (t.kind == TokenKind::open) {
      stack.push_back(t.label);
    } else {
      if (stack.empty() || stack.back() != t.label) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

/// Membership in B_n: all degrees (2, 2) and exactly one Eulerian tour.
inline bool is_in_B(const DiGraph& d) {
  const DegreeTable deg = degrees(d);
  for (Vertex v = 1; v <= d.n(); ++v) {
    if (deg[v].in != 2 || deg[v].out != 2) return false;
  }
  return count_tours_up_to_shift(d, 2) == 1;
}

/// A B_n digraph with one identified edge (an element of B_n*).
class MarkedDigraph {
 public:
  MarkedDigraph(DiGraph graph, Edge marked) : graph_(std::move(graph)), marked_(marked) {
    if (graph_.n() < 2) throw PreconditionError("marked digraphs need n >= 2");
    if (!graph_.has_edge(marked_)) {
      throw PreconditionError("marked edge " + to_string(marked_) + " is not an edge of the digraph");
    }
    if (!is_in_B(graph_)) {
      throw PreconditionError(
          "digraph is not in B_n: every vertex needs indegree = outdegree = 2 and the Eulerian "
          "tour must be unique");
    }
  }

  const DiGraph& graph() const noexcept { return graph_; }
  const Edge& marked_edge() const noexcept { return marked_; }

  friend bool operator==(const MarkedDigraph&, const MarkedDigraph&) = default;

 private:
  DiGraph graph_;
  Edge marked_;
};

/// A_n -> B_n: a loop at every vertex of outdegree 1.
inline DiGraph add_loops(const DiGraph& d) {
  if (!is_single_tour_digraph(d)) {
    throw PreconditionError("digraph is not a loopless single-tour digraph without isolated vertices");
  }
  const DegreeTable deg = degrees(d);
  std::vector<Edge> edges(d.edges().begin(), d.edges().end());
  for (Vertex v = 1; v <= d.n(); ++v) {
    if (deg[v].out == 1) edges.push_back({v, v});
  }
  return DiGraph(d.n(), std::move(edges));
}

/// B_n -> A_n: delete all loops.
inline DiGraph remove_loops(const DiGraph& d) {
  if (d.n() < 2) throw PreconditionError("need n >= 2");
  if (!is_in_B(d)) throw PreconditionError("digraph is not in B_n");
  std::vector<Edge> edges;
  for (const Edge& e : d.edges()) {
    if (!e.is_loop()) edges.push_back(e);
  }
  return DiGraph(d.n(), std::move(edges));
}

/// The map h: arrivals along the unique tour that starts with the marked edge.
inline ParenArrangement marked_digraph_to_parens(const MarkedDigraph& m) {
  const auto tours = eulerian_tours_from_edge(m.graph(), m.marked_edge());
  if (tours.size() != 1) {
    throw PreconditionError("expected exactly one Eulerian tour, found " +
                            std::to_string(tours.size()));
  }
  std::vector<char> seen(static_cast<std::size_t>(m.graph().n()) + 1, 0);
  std::vector<Token> tokens;
  tokens.reserve(tours.front().edges.size());
  for (const Edge& e : tours.front().edges) {
    char& s = seen[static_cast<std::size_t>(e.fin)];
    tokens.push_back({s == 0 ? TokenKind::open : TokenKind::close, e.fin});
    ++s;
  }
  return ParenArrangement(std::move(tokens));
}

/// The inverse of h: consecutive labels give edges, the last label points back
/// to the first, and that wrap-around edge is the marked one.
inline MarkedDigraph parens_to_marked_digraph(const ParenArrangement& w) {
  if (w.n() < 2) throw PreconditionError("arrangements need n >= 2");
  if (!is_valid(w)) throw PreconditionError("arrangement has interlaced pairs");
  const std::vector<int> seq = w.labels();
  std::vector<Edge> edges;
  edges.reserve(seq.size());
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) edges.push_back({seq[i], seq[i + 1]});
  const Edge marked{seq.back(), seq.front()};
  edges.push_back(marked);
  return MarkedDigraph(DiGraph(w.n(), std::move(edges)), marked);
}

/// Calls fn(w) for each valid arrangement of n labeled pairs (n! C_n of them):
/// every balanced word, with opens labeled by every permutation of [1..n].
template <typename Fn>
void for_each_valid_arrangement(int n, Fn&& fn) {
  if (n < 1) throw PreconditionError("need n >= 1");
  for_each_dyck_word(n, [&](const DyckWord& word) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<Token> tokens;
      tokens.reserve(word.size());
      std::vector<int> stack;
      std::size_t next = 0;
      for (bool open : word) {
        if (open) {
          stack.push_back(perm[next++]);
          tokens.push_back({TokenKind::open, stack.back()});
        } else {
          tokens.push_back({TokenKind::close, stack.back()});
          stack.pop_back();
        }
      }
      fn(ParenArrangement(std::move(tokens)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
}

inline std::vector<ParenArrangement> enumerate_valid(int n) {
  std::vector<ParenArrangement> out;
  for_each_valid_arrangement(n, [&](ParenArrangement&& w) { out.push_back(std::move(w)); });
  return out;
}

}  // namespace onetour

#endif  // ONETOUR_PARENS_HPP
