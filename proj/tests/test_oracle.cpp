#include <gtest/gtest.h>

#include <chrono>

#include "cycshift/oracle.hpp"
#include "cycshift/parabolic.hpp"
#include "test_support.hpp"

using namespace cycshift;
using cycshift::testing::all_elements;
using cycshift::testing::el;
using cycshift::testing::flip;
using cycshift::testing::identity;
using cycshift::testing::set_of;

TEST(Orbits, A2WithJ1) {
  const auto g = CoxeterGroup::of_type("A2");
  const auto orbits = oracle::orbits(g, SimpleSubset{1}, identity(g));
  ASSERT_EQ(orbits.size(), 4u);
  EXPECT_EQ(orbits[0], set_of(g, {""}));
  EXPECT_EQ(orbits[1], set_of(g, {"1"}));
  EXPECT_EQ(orbits[2], set_of(g, {"2", "1,2,1"}));
  EXPECT_EQ(orbits[3], set_of(g, {"1,2", "2,1"}));
}

TEST(Orbits, ExtremeSubsets) {
  const auto g = CoxeterGroup::of_type("A3");
  EXPECT_EQ(oracle::orbits(g, SimpleSubset{}, identity(g)).size(), g.order());
  // Conjugacy classes of S4 correspond to the five partitions of 4.
  EXPECT_EQ(oracle::orbits(g, g.all_generators(), identity(g)).size(), 5u);
  // Twisted classes under the flip.
  std::size_t total = 0;
  for (const auto& o : oracle::orbits(g, g.all_generators(), flip(g))) total += o.size();
  EXPECT_EQ(total, g.order());
}

TEST(Orbits, ClosedUnderTwistedConjugation) {
  const auto g = CoxeterGroup::of_type("B2");
  for (const auto& delta : g.automorphisms()) {
    for (SimpleSubset J : all_subsets(g.rank())) {
      const ElementSet WJ = oracle::parabolic(g, J);
      for (const auto& orb : oracle::orbits(g, J, delta)) {
        for (Element w : orb) {
          for (Element x : WJ) EXPECT_TRUE(orb.contains(g.twisted_conjugate(x, w, delta)));
        }
      }
    }
  }
}

TEST(Parabolic, Sizes) {
  const auto g = CoxeterGroup::of_type("A3");
  EXPECT_EQ(oracle::parabolic(g, SimpleSubset{}).size(), 1u);
  EXPECT_EQ(oracle::parabolic(g, SimpleSubset{1, 3}).size(), 4u);
  EXPECT_EQ(oracle::parabolic(g, SimpleSubset{1, 2}).size(), 6u);
  EXPECT_EQ(oracle::parabolic(g, g.all_generators()).size(), 24u);
}

TEST(Bruhat, LowerSets) {
  const auto g = CoxeterGroup::of_type("A2");
  EXPECT_EQ(oracle::bruhat_lower_set(g, g.longest_element()).size(), 6u);
  EXPECT_EQ(oracle::bruhat_lower_set(g, el(g, "1,2")), set_of(g, {"", "1", "2", "1,2"}));
  EXPECT_EQ(oracle::bruhat_lower_set(g, g.identity()), set_of(g, {""}));
}

TEST(Bruhat, AgreesWithLiftingProperty) {
  for (const char* type : {"A3", "B3", "G2"}) {
    const auto g = CoxeterGroup::of_type(type);
    const auto all = all_elements(g);
    for (Element b : all) {
      const ElementSet lower = oracle::bruhat_lower_set(g, b);
      for (Element a : all) EXPECT_EQ(lower.contains(a), g.bruhat_leq(a, b)) << type;
    }
  }
}

TEST(ISubset, Examples) {
  const auto g = CoxeterGroup::of_type("A3");
  EXPECT_EQ(oracle::i_subset(g, SimpleSubset{1, 3}, el(g, "2,1,3,2"), identity(g)),
            (SimpleSubset{1, 3}));
  EXPECT_EQ(oracle::i_subset(g, SimpleSubset{1, 3}, el(g, "2"), identity(g)), SimpleSubset{});
}

TEST(ShiftClass, CoxeterElementsOfA3) {
  const auto g = CoxeterGroup::of_type("A3");
  EXPECT_EQ(oracle::shift_class(g, el(g, "1,2,3"), identity(g)),
            set_of(g, {"1,2,3", "2,1,3", "1,3,2", "3,2,1"}));
  EXPECT_EQ(oracle::shift_class(g, g.identity(), flip(g)), set_of(g, {""}));
}

TEST(CycSolutions, TrivialSubset) {
  const auto g = CoxeterGroup::of_type("A2");
  const Element w = el(g, "1,2");
  const auto sols = oracle::cyc_solutions(g, SimpleSubset{}, identity(g), w);
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0], (oracle::CycSolution{w, g.identity(), g.identity()}));
}

TEST(Budget, ExpiredBudgetThrows) {
  const oracle::Budget expired(std::chrono::milliseconds(-1));
  EXPECT_THROW(expired.check("test"), oracle::OracleTimeout);
  const auto g = CoxeterGroup::of_type("A3");
  EXPECT_THROW(oracle::orbits(g, g.all_generators(), identity(g), expired),
               oracle::OracleTimeout);
  EXPECT_NO_THROW(oracle::Budget().check("test"));
}
