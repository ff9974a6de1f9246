#include <gtest/gtest.h>

#include <omp.h>

#include "cycshift/decomposition.hpp"
#include "cycshift/shift_graph.hpp"
#include "cycshift/verify.hpp"
#include "test_support.hpp"

using namespace cycshift;

namespace {

class ThreadCount : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(GetParam());
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

}  // namespace

TEST_P(ThreadCount, ShiftGraphMatchesSerial) {
  for (const char* type : {"A4", "D4"}) {
    const auto g = CoxeterGroup::of_type(type);
    for (const auto& delta : g.automorphisms()) {
      for (SimpleSubset J : all_subsets(g.rank())) {
        EXPECT_EQ(build_shift_graph(g, delta, J), build_shift_graph_serial(g, delta, J));
      }
    }
  }
}

TEST_P(ThreadCount, DecomposeMatchesSerial) {
  const auto g = CoxeterGroup::of_type("A4");
  for (const auto& delta : g.automorphisms()) {
    for (SimpleSubset J : all_subsets(g.rank())) {
      EXPECT_EQ(decompose(g, J, delta), decompose_serial(g, J, delta));
    }
  }
}

TEST_P(ThreadCount, PartialOrderMatchesSerial) {
  const auto g = CoxeterGroup::of_type("B3");
  for (SimpleSubset J : all_subsets(g.rank())) {
    const auto delta = DiagramAutomorphism::identity(g.rank());
    EXPECT_EQ(partial_order(g, J, delta), partial_order_serial(g, J, delta));
  }
}

TEST_P(ThreadCount, SuiteReportsMatchSerial) {
  const auto g = CoxeterGroup::of_type("A3");
  for (const std::string& name : suite_names()) {
    const SuiteReport par = run_suite(g, name);
    const SuiteReport ser = run_suite_serial(g, name);
    EXPECT_EQ(par.cases, ser.cases) << name;
    EXPECT_EQ(par.failures, ser.failures) << name;
    EXPECT_TRUE(par.passed()) << name;
  }
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 4));

TEST(Suites, UnknownNameThrows) {
  const auto g = CoxeterGroup::of_type("A1");
  EXPECT_THROW(run_suite(g, "nope"), CoxeterError);
}
