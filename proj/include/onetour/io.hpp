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

/// \file io.hpp
///
/// Canonical JSON and DOT forms.
///
///   digraph      {"edges": [[1,2],[2,1]], "n": 2}
///   marked       {"edges": [...], "marked": [2,1], "n": 3}
///   tree         {"children": {"0": [1], "1": [2]}, "n": 2}   (leaves omitted)
///   arrangement  {"n": 2, "tokens": [["open",1],["close",1],...]}
///
/// Objects are emitted with sorted keys on a single line, edges in
/// lexicographic order, so equal values serialize to identical bytes.

#ifndef ONETOUR_IO_HPP
#define ONETOUR_IO_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "onetour/digraph.hpp"
#include "onetour/enumeration.hpp"
#include "onetour/parens.hpp"
#include "onetour/plane_tree.hpp"

namespace onetour::io {

using json = nlohmann::json;

/// Raised for input that is not of the documented shape.
class FormatError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

inline std::string dump(const json& j) { return j.dump() + "\n"; }

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

namespace detail {

inline int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) throw FormatError(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key \"") + key + "\"");
  return *it;
}

inline Edge as_edge(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("an edge must be a two-element array");
  return {as_int(j[0], "edge endpoint"), as_int(j[1], "edge endpoint")};
}

inline json edge_json(const Edge& e) { return json::array({e.init, e.fin}); }

}  // namespace detail

inline json to_json(const DiGraph& d) {
  json edges = json::array();
  for (const Edge& e : d.edges()) edges.push_back(detail::edge_json(e));
  return {{"edges", std::move(edges)}, {"n", d.n()}};
}

inline DiGraph digraph_from_json(const json& j) {
  const int n = detail::as_int(detail::field(j, "n"), "n");
  const json& list = detail::field(j, "edges");
  if (!list.is_array()) throw FormatError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const json& e : list) edges.push_back(detail::as_edge(e));
  return DiGraph(n, std::move(edges));
}

inline json to_json(const MarkedDigraph& m) {
  json j = to_json(m.graph());
  j["marked"] = detail::edge_json(m.marked_edge());
  return j;
}

inline MarkedDigraph marked_from_json(const json& j) {
  return MarkedDigraph(digraph_from_json(j), detail::as_edge(detail::field(j, "marked")));
}

inline json to_json(const RootedPlaneTree& t) {
  json children = json::object();
  for (Vertex x = 0; x <= t.n(); ++x) {
    const auto kids = t.children(x);
    if (!kids.empty()) children[std::to_string(x)] = std::vector<int>(kids.begin(), kids.end());
  }
  return {{"children", std::move(children)}, {"n", t.n()}};
}

inline RootedPlaneTree tree_from_json(const json& j) {
  const int n = detail::as_int(detail::field(j, "n"), "n");
  if (n < 1) throw FormatError("n must be positive");
  const json& children = detail::field(j, "children");
  if (!children.is_object()) throw FormatError("\"children\" must be an object");
  RootedPlaneTree::ChildLists lists(static_cast<std::size_t>(n) + 1);
  for (const auto& [key, value] : children.items()) {
    int node = -1;
    try {
      std::size_t used = 0;
      node = std::stoi(key, &used);
      if (used != key.size()) node = -1;
    } catch (const std::exception&) {
      node = -1;
    }
    if (node < 0 || node > n) throw FormatError("children key \"" + key + "\" is not a node label");
    if (!value.is_array()) throw FormatError("children of \"" + key + "\" must be an array");
    for (const json& c : value) lists[static_cast<std::size_t>(node)].push_back(detail::as_int(c, "child label"));
  }
  return RootedPlaneTree(n, std::move(lists));
}

inline json to_json(const ParenArrangement& w) {
  json tokens = json::array();
  for (const Token& t : w.tokens()) {
    tokens.push_back(json::array({t.kind == TokenKind::open ? "open" : "close", t.label}));
  }
  return {{"n", w.n()}, {"tokens", std::move(tokens)}};
}

inline ParenArrangement arrangement_from_json(const json& j) {
  const int n = detail::as_int(detail::field(j, "n"), "n");
  const json& list = detail::field(j, "tokens");
  if (!list.is_array()) throw FormatError("\"tokens\" must be an array");
  std::vector<Token> tokens;
  for (const json& t : list) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string()) {
      throw FormatError("a token must be [\"open\"|\"close\", label]");
    }
    const auto kind = t[0].get<std::string>();
    if (kind != "open" && kind != "close") throw FormatError("unknown token kind \"" + kind + "\"");
    tokens.push_back({kind == "open" ? TokenKind::open : TokenKind::close, detail::as_int(t[1], "label")});
  }
  ParenArrangement w(std::move(tokens));
  if (w.n() != n) throw FormatError("\"n\" does not match the number of tokens");
  return w;
}

/// Accepts either the text form "(1 )1 ..." or the JSON form.
inline ParenArrangement read_arrangement(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return arrangement_from_json(parse(text));
  return parse_arrangement(text);
}

inline json to_json(const CountReport& r) {
  auto opt = [](const std::optional<Count>& v) { return v ? json(*v) : json(nullptr); };
  return {{"agree", r.agree},
          {"expected", r.expected},
          {"n", r.n},
          {"via_bruteforce", opt(r.via_bruteforce)},
          {"via_parens", opt(r.via_parens)},
          {"via_tree_bijection", r.via_tree_bijection}};
}

/// Graphviz digraph; a marked edge is drawn bold.
inline std::string to_dot(const DiGraph& d, std::optional<Edge> marked = std::nullopt) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (Vertex v = 1; v <= d.n(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : d.edges()) {
    os << "  " << e.init << " -> " << e.fin;
    if (marked && *marked == e) os << " [style=bold]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

/// Plane tree as a graphviz digraph; `ordering=out` keeps child order.
inline std::string to_dot(const RootedPlaneTree& t) {
  std::ostringstream os;
  os << "digraph T {\n  ordering=out;\n";
  for (Vertex v = 0; v <= t.n(); ++v) os << "  " << v << ";\n";
  for (Vertex x = 0; x <= t.n(); ++x) {
    for (Vertex c : t.children(x)) os << "  " << x << " -> " << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace onetour::io

#endif  // ONETOUR_IO_HPP
