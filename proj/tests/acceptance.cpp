// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cycshift/decomposition.hpp"
#include "cycshift/io.hpp"
#include "cycshift/oracle.hpp"
#include "cycshift/parabolic.hpp"
#include "cycshift/shift_graph.hpp"
#include "cycshift/verify.hpp"

#ifndef CYCSHIFT_CLI_PATH
#error "CYCSHIFT_CLI_PATH must name the cycshift executable"
#endif

using namespace cycshift;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

Element el(const CoxeterGroup& g, const char* word) { return io::parse_element(word, g); }

DiagramAutomorphism id_of(const CoxeterGroup& g) {
  return DiagramAutomorphism::identity(g.rank());
}

bool has_edge(const ShiftGraph& graph, Element from, Element to, Generator label) {
  for (const ShiftEdge& e : graph.out_edges(from)) {
    if (e.to == to && (label == 0 || e.label == label)) return true;
  }
  return false;
}

Outcome conjugacy_component() {
  Outcome o;
  const auto g = CoxeterGroup::of_type("A3");
  const ShiftGraph graph = build_shift_graph(g, id_of(g), g.all_generators());
  const Element s123 = el(g, "1,2,3"), s213 = el(g, "2,1,3"), s132 = el(g, "1,3,2"),
                s321 = el(g, "3,2,1"), s12132 = el(g, "1,2,1,3,2"), s23212 = el(g, "2,3,2,1,2");
  const ElementSet component = connected_component(graph, s123);
  o.require(component == ElementSet({s123, s213, s132, s321, s12132, s23212}),
            "component vertex set differs");

  std::multiset<std::size_t> sizes;
  std::set<std::uint32_t> seen;
  const ComponentLabels scc = strongly_connected_components(graph);
  for (Element v : component) {
    if (seen.insert(scc.component[v.id]).second) {
      sizes.insert(cyclic_shift_class(graph, v).size());
    }
  }
  o.require(sizes == std::multiset<std::size_t>{2, 4}, "SCC sizes are not 4 and 2");
  o.require(cyclic_shift_class(graph, s12132) == ElementSet({s12132, s23212}),
            "length-5 SCC differs");

  const std::array<std::tuple<Element, Element, Generator>, 12> labelled = {{
      {s12132, s123, 2},  {s23212, s321, 2},  {s12132, s23212, 1}, {s12132, s23212, 3},
      {s23212, s12132, 1}, {s23212, s12132, 3}, {s123, s213, 1},   {s123, s132, 3},
      {s213, s321, 3},    {s132, s321, 1},    {s132, s123, 0},     {s321, s213, 0},
  }};
  for (const auto& [from, to, label] : labelled) {
    if (!has_edge(graph, from, to, label)) {
      o.require(false, "missing edge " + io::subscript_label(g, from) + " -> " +
                           io::subscript_label(g, to));
    }
  }
  for (Element top : {s12132, s23212}) {
    for (const ShiftEdge& e : graph.out_edges(top)) {
      if (g.length(e.to) < 5) o.require(e.label == 2, "downward edge not labelled s2");
    }
  }
  return o;
}

Outcome hasse_example() {
  Outcome o;
  const auto g = CoxeterGroup::of_type("A3");
  const SimpleSubset J{3};
  std::vector<Element> listed;
  for (const char* w : {"", "1", "2", "1,2", "2,1", "2,3", "1,2,1", "1,2,3", "2,1,3", "1,2,1,3",
                        "2,1,3,2", "1,2,1,3,2"}) {
    listed.push_back(el(g, w));
  }
  std::sort(listed.begin(), listed.end());
  o.require(minimal_reps(g, J, id_of(g), RepKind::RightCosets) == listed,
            "^J W differs from the 12 listed elements");

  const HasseDiagram h = hasse(g, J, id_of(g));
  const HasseDiagram b = bruhat_hasse(g, J);
  std::set<CoverEdge> expected(b.covers.begin(), b.covers.end());
  const CoverEdge extra{el(g, "1,2,3"), el(g, "2,1,3,2"), false};
  o.require(!expected.contains(CoverEdge{extra.lower, extra.upper, true}),
            "extra cover is already a Bruhat cover");
  expected.insert(extra);
  const std::set<CoverEdge> got(h.covers.begin(), h.covers.end());
  o.require(got == expected, "Hasse diagram is not Bruhat plus the single extra cover");
  std::size_t non_bruhat = 0;
  for (const auto& c : h.covers) non_bruhat += c.bruhat ? 0 : 1;
  o.require(non_bruhat == 1, "expected exactly one non-Bruhat cover");
  return o;
}

Outcome iota_example() {
  Outcome o;
  const auto g = CoxeterGroup::of_type("A4");
  const Element w = el(g, "1,2,1,3,2,4");
  const IotaResult r = iota(g, SimpleSubset{1, 3}, id_of(g), w);
  o.require(r.image == el(g, "2,1,3,2,4,3"),
            "iota(w) = " + io::subscript_label(g, r.image) + ", expected s_{213243}");
  o.require(r.certificate.u == g.identity(), "certificate has u != e");
  o.require(r.image != g.inverse(w), "iota(w) equals w^-1");
  return o;
}

Outcome suite_over(const std::vector<const char*>& types, const char* suite) {
  Outcome o;
  for (const char* type : types) {
    const auto g = CoxeterGroup::of_type(type);
    const SuiteReport rep = run_suite(g, suite);
    std::ostringstream line;
    line << type << ": " << rep.cases << " cases, " << rep.failures.size() << " failures";
    o.notes.push_back(line.str());
    if (!rep.passed()) {
      o.pass = false;
      for (std::size_t i = 0; i < rep.failures.size() && i < 5; ++i) {
        o.notes.push_back("  " + rep.failures[i]);
      }
    }
  }
  return o;
}

// Literal comparison of strongly connected components against the swap
// closure, over every element.
Outcome broue_michel() {
  Outcome o;
  for (const char* type : {"A3", "B2"}) {
    const auto g = CoxeterGroup::of_type(type);
    for (const auto& delta : g.automorphisms()) {
      const ShiftGraph graph = build_shift_graph(g, delta, g.all_generators());
      std::size_t differ = 0, differ_minimal = 0;
      std::string first;
      for (std::size_t i = 0; i < g.order(); ++i) {
        const Element w = g.element(i);
        const ElementSet scc = cyclic_shift_class(graph, w);
        const ElementSet swaps = oracle::shift_class(g, w, delta);
        if (scc == swaps) continue;
        ++differ;
        if (is_min_length_in_orbit(g, w, g.all_generators(), delta)) ++differ_minimal;
        if (first.empty()) {
          first = io::subscript_label(g, w) + ": SCC size " + std::to_string(scc.size()) +
                  ", swap closure size " + std::to_string(swaps.size());
        }
      }
      std::ostringstream line;
      line << type << " delta=" << io::format_automorphism(delta) << ": " << differ
           << " elements differ (" << differ_minimal << " of minimal length)";
      if (!first.empty()) line << "; first " << first;
      o.notes.push_back(line.str());
      if (differ != 0) o.pass = false;
    }
  }
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  out += "\n<status " + std::to_string(status) + ">";
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string cli = CYCSHIFT_CLI_PATH;
  const std::vector<std::string> commands = {
      "graph A3",
      "graph A3 --format json",
      "graph A3 --format table --delta 1:3,3:1",
      "graph B3 --w 1,2,3 --component --format json",
      "decompose A3 --J 1,3 --format json",
      "decompose G2 --J 1 --delta 1:2,2:1 --format table",
      "hasse A3 --J 3",
      "hasse B2 --J 1 --format json",
      "hasse A3 --J 3 --format table",
      "iota A4 --J 1,3 --w 1,2,1,3,2,4 --format json",
      "iota A3 --J 1 --delta 1:3,3:1 --all --format table",
      "certificate A3 --J 1,3 --w 2,1,3,2 --K 1,3 --format json",
      "certificate B3 --J 1,2 --w 3 --format table",
      "datum A3 --J 1 --Jprime 1,2 --w 2 --format json",
      "datum A3 --J 1 --Jprime 1,2 --w 2 --format table",
      "verify --types A2,B2 --format json",
      "verify --types A3 --suite thm-cyc,iota",
  };
  for (const auto& c : commands) {
    const std::string full = cli + " " + c + " 2>&1";
    const std::string a = capture(full);
    const std::string b = capture(full);
    o.require(a == b, "output differs between runs: " + c);
    o.require(a.find("<status 0>") != std::string::npos, "command failed: " + c);
  }
  o.notes.push_back(std::to_string(commands.size()) + " commands run twice");
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<const char*> small = {"A1", "A2", "A3", "A4", "B2", "B3", "G2"};
  const std::vector<Criterion> criteria = {
      {1, "A3 conjugacy component of s1s2s3", 1.0, conjugacy_component},
      {2, "A3 J={3} Hasse diagram", 1.0, hasse_example},
      {3, "A4 iota example", 1.0, iota_example},
      {4, "partition into blocks", 300.0, [&] { return suite_over(small, "prop-w"); }},
      {5, "I(J,w,delta) versus J-infinity", 0.0, [&] { return suite_over(small, "lemma-j-inf"); }},
      {6, "cyclic shift certificates", 600.0,
       [] { return suite_over({"A3", "B2", "G2"}, "thm-cyc"); }},
      {7, "SCC equals swap closure on A3, B2", 0.0, broue_michel},
      {8, "iota bijection and induction data", 0.0,
       [] { return suite_over({"A3", "B3"}, "iota"); }},
      {9, "CLI determinism", 0.0, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.notes.push_back("time limit exceeded");
    }
    if (!o.pass) ++failed;
    std::printf("%s  criterion %d: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.number, c.title,
                secs);
    for (const auto& n : o.notes) std::printf("      %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
