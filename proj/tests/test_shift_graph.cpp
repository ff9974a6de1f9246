#include <gtest/gtest.h>

#include "cycshift/oracle.hpp"
#include "cycshift/parabolic.hpp"
#include "cycshift/shift_graph.hpp"
#include "test_support.hpp"

using namespace cycshift;
using cycshift::testing::all_elements;
using cycshift::testing::el;
using cycshift::testing::flip;
using cycshift::testing::identity;
using cycshift::testing::set_of;

namespace {

bool has_edge(const ShiftGraph& graph, Element from, Element to, Generator label = 0) {
  for (const ShiftEdge& e : graph.out_edges(from)) {
    if (e.to == to && (label == 0 || e.label == label)) return true;
  }
  return false;
}

}  // namespace

TEST(ShiftGraph, EdgesFollowDefinition) {
  const auto g = CoxeterGroup::of_type("B3");
  for (const auto& delta : g.automorphisms()) {
    const ShiftGraph graph = build_shift_graph(g, delta, g.all_generators());
    EXPECT_EQ(graph.vertex_count(), g.order());
    for (Element w : all_elements(g)) {
      Generator previous = 0;
      for (const ShiftEdge& e : graph.out_edges(w)) {
        EXPECT_EQ(e.from, w);
        EXPECT_GT(e.label, previous);
        previous = e.label;
        EXPECT_EQ(e.to, g.multiply(g.multiply(g.generator(e.label), w),
                                   g.generator(delta(e.label))));
        EXPECT_LE(g.length(e.to), g.length(w));
      }
    }
  }
}

TEST(ShiftGraph, LabelsRestrictedToJ) {
  const auto g = CoxeterGroup::of_type("A3");
  const ShiftGraph graph = build_shift_graph(g, identity(g), SimpleSubset{1, 3});
  for (const ShiftEdge& e : graph.edges()) EXPECT_NE(e.label, 2);
  EXPECT_EQ(graph.labels(), (SimpleSubset{1, 3}));
}

TEST(ShiftGraph, A1HasSelfLoops) {
  const auto g = CoxeterGroup::of_type("A1");
  const ShiftGraph graph = build_shift_graph(g, identity(g), g.all_generators());
  EXPECT_TRUE(has_edge(graph, g.identity(), g.identity(), 1));
  EXPECT_TRUE(has_edge(graph, el(g, "1"), el(g, "1"), 1));
}

TEST(ShiftGraph, ConjugacyClassOfCoxeterElementInA3) {
  const auto g = CoxeterGroup::of_type("A3");
  const ShiftGraph graph = build_shift_graph(g, identity(g), g.all_generators());
  const Element s123 = el(g, "1,2,3");
  const Element s213 = el(g, "2,1,3");
  const Element s132 = el(g, "1,3,2");
  const Element s321 = el(g, "3,2,1");
  const Element s12132 = el(g, "1,2,1,3,2");
  const Element s23212 = el(g, "2,3,2,1,2");

  const ElementSet component = connected_component(graph, s123);
  EXPECT_EQ(component, ElementSet({s123, s213, s132, s321, s12132, s23212}));

  EXPECT_EQ(cyclic_shift_class(graph, s123), ElementSet({s123, s213, s132, s321}));
  EXPECT_EQ(cyclic_shift_class(graph, s12132), ElementSet({s12132, s23212}));

  EXPECT_TRUE(has_edge(graph, s12132, s123, 2));
  EXPECT_TRUE(has_edge(graph, s12132, s23212, 1));
  EXPECT_TRUE(has_edge(graph, s12132, s23212, 3));
  EXPECT_TRUE(has_edge(graph, s23212, s12132));
  EXPECT_TRUE(has_edge(graph, s23212, s321, 2));
  EXPECT_TRUE(has_edge(graph, s123, s213, 1));
  EXPECT_TRUE(has_edge(graph, s123, s132, 3));
  EXPECT_TRUE(has_edge(graph, s213, s321, 3));
  EXPECT_TRUE(has_edge(graph, s132, s321, 1));
  EXPECT_TRUE(has_edge(graph, s132, s123));
  EXPECT_TRUE(has_edge(graph, s321, s132));
  EXPECT_TRUE(has_edge(graph, s321, s213));

  // The only edges leaving the length-5 layer downwards carry the label 2.
  for (Element top : {s12132, s23212}) {
    for (const ShiftEdge& e : graph.out_edges(top)) {
      if (g.length(e.to) < 5) EXPECT_EQ(e.label, 2);
    }
  }
  EXPECT_FALSE(reaches(graph, s123, s12132));
  EXPECT_TRUE(reaches(graph, s12132, s321));
}

TEST(ShiftGraph, SerialAndParallelAgree) {
  for (const char* type : {"A3", "B3", "G2", "D4"}) {
    const auto g = CoxeterGroup::of_type(type);
    for (const auto& delta : g.automorphisms()) {
      for (SimpleSubset J : {SimpleSubset{}, SimpleSubset{1}, g.all_generators()}) {
        EXPECT_EQ(build_shift_graph(g, delta, J), build_shift_graph_serial(g, delta, J));
      }
    }
  }
}

TEST(Components, SccMatchesMutualReachability) {
  const auto g = CoxeterGroup::of_type("A3");
  const ShiftGraph graph = build_shift_graph(g, flip(g), g.all_generators());
  const ComponentLabels labels = strongly_connected_components(graph);
  const auto all = all_elements(g);
  std::uint32_t next = 0;
  for (Element a : all) {
    // Components are numbered by least vertex.
    if (labels.component[a.id] == next) ++next;
    EXPECT_LT(labels.component[a.id], next);
    for (Element b : all) {
      const bool same = labels.component[a.id] == labels.component[b.id];
      EXPECT_EQ(same, reaches(graph, a, b) && reaches(graph, b, a));
    }
  }
  EXPECT_EQ(next, labels.count);
}

TEST(CyclicShiftClass, ContainedInSwapClosure) {
  for (const char* type : {"A3", "B2", "G2", "B3"}) {
    const auto g = CoxeterGroup::of_type(type);
    for (const auto& delta : g.automorphisms()) {
      const ShiftGraph graph = build_shift_graph(g, delta, g.all_generators());
      for (Element w : all_elements(g)) {
        const ElementSet scc = cyclic_shift_class(graph, w);
        const ElementSet swaps = oracle::shift_class(g, w, delta);
        for (Element v : scc) EXPECT_TRUE(swaps.contains(v));
        if (is_min_length_in_orbit(g, w, g.all_generators(), delta)) EXPECT_EQ(scc, swaps);
      }
    }
  }
}

TEST(CyclicShiftClass, FlipSeparatesSwapClosureAtNonMinimalElements) {
  const auto g = CoxeterGroup::of_type("A3");
  const Element s123 = el(g, "1,2,3");
  const Element s321 = el(g, "3,2,1");
  EXPECT_FALSE(is_min_length_in_orbit(g, s123, g.all_generators(), flip(g)));
  EXPECT_EQ(cyclic_shift_class(g, s123, flip(g), g.all_generators()), ElementSet({s123}));
  EXPECT_TRUE(oracle::shift_class(g, s123, flip(g)).contains(s321));
  EXPECT_TRUE(broue_michel_equiv(g, s123, s321, flip(g)));
}

TEST(BroueMichel, Examples) {
  const auto g = CoxeterGroup::of_type("A3");
  EXPECT_TRUE(broue_michel_equiv(g, el(g, "1,2,3"), el(g, "3,2,1"), identity(g)));
  EXPECT_FALSE(broue_michel_equiv(g, el(g, "1,2,3"), el(g, "1,2,1,3,2"), identity(g)));
  EXPECT_TRUE(broue_michel_equiv(g, el(g, "1,2,1,3,2"), el(g, "2,3,2,1,2"), identity(g)));
}

TEST(BroueMichel, AgreesWithSwapClosure) {
  for (const char* type : {"A3", "B2", "G2"}) {
    const auto g = CoxeterGroup::of_type(type);
    for (const auto& delta : g.automorphisms()) {
      const auto all = all_elements(g);
      for (Element a : all) {
        const ElementSet swaps = oracle::shift_class(g, a, delta);
        for (Element b : all) {
          if (g.length(a) != g.length(b)) continue;
          EXPECT_EQ(broue_michel_equiv(g, a, b, delta), swaps.contains(b)) << type;
        }
      }
    }
  }
}

TEST(Orbit, MinimalLength) {
  const auto g = CoxeterGroup::of_type("A2");
  const Element s121 = el(g, "1,2,1");
  EXPECT_EQ(orbit(g, s121, SimpleSubset{1}, identity(g)), set_of(g, {"2", "1,2,1"}));
  EXPECT_EQ(min_length_in_orbit(g, s121, SimpleSubset{1}, identity(g)), 1);
  EXPECT_FALSE(is_min_length_in_orbit(g, s121, SimpleSubset{1}, identity(g)));
  EXPECT_TRUE(is_min_length_in_orbit(g, el(g, "1,2"), SimpleSubset{1}, identity(g)));
}

TEST(ReduceToMin, DescendsToMinimalRepresentative) {
  const auto g = CoxeterGroup::of_type("A2");
  const Reduction r = reduce_to_min(g, el(g, "1,2,1"), SimpleSubset{1}, identity(g));
  ASSERT_EQ(r.path.size(), 1u);
  EXPECT_EQ(r.path[0], (ShiftEdge{el(g, "1,2,1"), el(g, "2"), 1}));
  EXPECT_EQ(r.endpoint, el(g, "2"));
  EXPECT_EQ(r.w_prime, el(g, "2"));
  EXPECT_EQ(r.u, g.identity());

  const Reduction fixed = reduce_to_min(g, el(g, "1,2"), SimpleSubset{1}, identity(g));
  EXPECT_EQ(fixed.endpoint, g.multiply(fixed.u, fixed.w_prime));
  EXPECT_EQ(g.length(fixed.endpoint), 2);
}

TEST(ReduceToMin, PathsAreGraphPaths) {
  const auto g = CoxeterGroup::of_type("B3");
  const auto delta = identity(g);
  for (SimpleSubset J : all_subsets(g.rank())) {
    const ShiftGraph graph = build_shift_graph(g, delta, J);
    for (Element w : all_elements(g)) {
      const Reduction r = reduce_to_min(g, w, J, delta);
      Element at = w;
      for (const ShiftEdge& e : r.path) {
        EXPECT_EQ(e.from, at);
        EXPECT_TRUE(has_edge(graph, e.from, e.to, e.label));
        at = e.to;
      }
      EXPECT_EQ(at, r.endpoint);
      EXPECT_EQ(r.endpoint, g.multiply(r.u, r.w_prime));
      EXPECT_TRUE(in_left_reduced(g, r.w_prime, J));
      EXPECT_EQ(g.length(r.endpoint), min_length_in_orbit(g, w, J, delta));
    }
  }
}
