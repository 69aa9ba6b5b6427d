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

/// \file cli.hpp
///
/// Command dispatch for the `onetour` tool. Kept in the library so tests can
/// drive it in-process with string streams.
///
/// Exit status: 0 on success, 1 on malformed input or a failed precondition,
/// 2 on usage errors.

#ifndef ONETOUR_CLI_HPP
#define ONETOUR_CLI_HPP

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "onetour/best.hpp"
#include "onetour/digraph.hpp"
#include "onetour/enumeration.hpp"
#include "onetour/io.hpp"
#include "onetour/parens.hpp"
#include "onetour/plane_tree.hpp"

namespace onetour::cli {

namespace detail {

inline std::string read_all(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw PreconditionError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline Edge parse_mark(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw PreconditionError("--mark expects u,v");
  try {
    std::size_t a = 0, b = 0;
    const int u = std::stoi(text.substr(0, comma), &a);
    const int v = std::stoi(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw PreconditionError("");
    return {u, v};
  } catch (const std::exception&) {
    throw PreconditionError("--mark expects u,v with integer vertices, got '" + text + "'");
  }
}

inline void print_count_table(const std::vector<CountReport>& reports, std::ostream& out) {
  auto cell = [](const std::optional<Count>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << std::left << std::setw(4) << "n" << std::setw(12) << "expected" << std::setw(12)
      << "bruteforce" << std::setw(12) << "tree" << std::setw(12) << "parens"
      << "agree\n";
  for (const CountReport& r : reports) {
    out << std::setw(4) << r.n << std::setw(12) << r.expected << std::setw(12)
        << cell(r.via_bruteforce) << std::setw(12) << r.via_tree_bijection << std::setw(12)
        << cell(r.via_parens) << (r.agree ? "yes" : "no") << "\n";
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Digraphs with exactly one Eulerian tour: bijections and counts", "onetour"};
  app.require_subcommand(1);

  std::string input;
  std::string format;

  std::vector<int> count_ns;
  auto* count = app.add_subcommand("count", "Count A_n three ways and compare with (n-1)! C_n / 2");
  count->add_option("--n", count_ns, "one or more n >= 2")->required()->check(CLI::Range(2, 12));
  count->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  int enum_n = 0;
  std::string kind = "A";
  auto* enumerate = app.add_subcommand("enumerate", "List objects of size n, one per line");
  enumerate->add_option("--n", enum_n, "size")->required()->check(CLI::Range(1, 9));
  enumerate->add_option("--kind", kind, "A, A-bruteforce, L, Lprime, unlabeled, or parens")
      ->check(CLI::IsMember({"A", "A-bruteforce", "L", "Lprime", "unlabeled", "parens"}));

  auto* tree2digraph = app.add_subcommand("tree2digraph", "Tree JSON (L'_n) to digraph JSON");
  tree2digraph->add_option("input", input, "input file, default stdin");

  auto* involution = app.add_subcommand("involution", "Tree JSON (L_n) to tree JSON under f");
  involution->add_option("input", input, "input file, default stdin");

  auto* digraph2tree = app.add_subcommand("digraph2tree", "Digraph JSON (A_n) to tree JSON");
  digraph2tree->add_option("input", input, "input file, default stdin");

  std::string mark;
  auto* digraph2parens =
      app.add_subcommand("digraph2parens", "Digraph JSON to arrangement via the marked edge");
  digraph2parens->add_option("input", input, "input file, default stdin");
  digraph2parens->add_option("--mark", mark, "marked edge u,v")->required();
  digraph2parens->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  bool strip_loops = false;
  auto* parens2digraph =
      app.add_subcommand("parens2digraph", "Arrangement (text or JSON) to marked digraph JSON");
  parens2digraph->add_option("input", input, "input file, default stdin");
  parens2digraph->add_flag("--strip-loops", strip_loops, "delete loops and emit plain digraph JSON");

  auto* verify = app.add_subcommand("verify", "Check the three characterizations of A_n agree");
  verify->add_option("input", input, "input file, default stdin");

  auto* dot = app.add_subcommand("dot", "Digraph, marked digraph, or tree JSON to DOT");
  dot->add_option("input", input, "input file, default stdin");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  try {
    if (*count) {
      std::vector<CountReport> reports;
      for (int n : count_ns) reports.push_back(verify_theorem1(n));
      if (format == "json") {
        for (const CountReport& r : reports) out << io::dump(io::to_json(r));
      } else {
        detail::print_count_table(reports, out);
      }
      bool all = true;
      for (const CountReport& r : reports) all = all && r.agree;
      return all ? 0 : 1;
    }
    if (*enumerate) {
      if (kind == "A") {
        std::vector<DiGraph> gs = enumerate_A_via_g(enum_n);
        std::sort(gs.begin(), gs.end());
        for (const DiGraph& g : gs) out << io::dump(io::to_json(g));
      } else if (kind == "A-bruteforce") {
        for (const DiGraph& g : brute_force_A(enum_n)) out << io::dump(io::to_json(g));
      } else if (kind == "L") {
        for_each_L(enum_n, [&](const RootedPlaneTree& t) { out << io::dump(io::to_json(t)); });
      } else if (kind == "Lprime") {
        for (const RootedPlaneTree& t : enumerate_Lprime(enum_n)) out << io::dump(io::to_json(t));
      } else if (kind == "unlabeled") {
        for (const RootedPlaneTree& t : enumerate_unlabeled(enum_n)) out << io::dump(io::to_json(t));
      } else {
        for_each_valid_arrangement(enum_n, [&](const ParenArrangement& w) { out << to_text(w) << "\n"; });
      }
      return 0;
    }
    if (*tree2digraph) {
      const RootedPlaneTree t = io::tree_from_json(io::parse(detail::read_all(input, in)));
      out << io::dump(io::to_json(tree_to_digraph(t)));
      return 0;
    }
    if (*involution) {
      const RootedPlaneTree t = io::tree_from_json(io::parse(detail::read_all(input, in)));
      out << io::dump(io::to_json(swap_root_subtrees(t)));
      return 0;
    }
    if (*digraph2tree) {
      const DiGraph d = io::digraph_from_json(io::parse(detail::read_all(input, in)));
      out << io::dump(io::to_json(digraph_to_tree(d)));
      return 0;
    }
    if (*digraph2parens) {
      const DiGraph d = io::digraph_from_json(io::parse(detail::read_all(input, in)));
      const DiGraph with_loops = d.has_loops() ? d : add_loops(d);
      const ParenArrangement w = marked_digraph_to_parens(MarkedDigraph(with_loops, detail::parse_mark(mark)));
      if (format == "json") {
        out << io::dump(io::to_json(w));
      } else {
        out << to_text(w) << "\n";
      }
      return 0;
    }
    if (*parens2digraph) {
      const ParenArrangement w = io::read_arrangement(detail::read_all(input, in));
      const MarkedDigraph m = parens_to_marked_digraph(w);
      out << io::dump(strip_loops ? io::to_json(remove_loops(m.graph())) : io::to_json(m));
      return 0;
    }
    if (*verify) {
      const DiGraph d = io::digraph_from_json(io::parse(detail::read_all(input, in)));
      const bool single = is_single_tour_digraph(d);
      const auto path_cycle = path_cycle_criterion_violation(d);
      const auto arborescence = arborescence_criterion_violation(d);
      const bool agree = single == !path_cycle && single == !arborescence;
      out << "single_tour: " << std::boolalpha << single << "\n";
      out << "path_cycle_criterion: " << !path_cycle << "\n";
      if (path_cycle) out << "  reason: " << *path_cycle << "\n";
      out << "arborescence_criterion: " << !arborescence << "\n";
      if (arborescence) out << "  reason: " << *arborescence << "\n";
      out << "agree: " << (agree ? "yes" : "no") << "\n";
      return agree ? 0 : 1;
    }
    if (*dot) {
      const io::json j = io::parse(detail::read_all(input, in));
      if (j.is_object() && j.contains("children")) {
        out << io::to_dot(io::tree_from_json(j));
      } else if (j.is_object() && j.contains("marked")) {
        out << io::to_dot(io::digraph_from_json(j), io::detail::as_edge(j["marked"]));
      } else {
        out << io::to_dot(io::digraph_from_json(j));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, in, out, err);
}

}  // namespace onetour::cli

#endif  // ONETOUR_CLI_HPP
