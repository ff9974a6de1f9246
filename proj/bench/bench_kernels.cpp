#include <benchmark/benchmark.h>

#include "cycshift/decomposition.hpp"
#include "cycshift/shift_graph.hpp"
#include "cycshift/verify.hpp"

using namespace cycshift;

namespace {

const CoxeterGroup& group(const char* type) {
  static const CoxeterGroup a4 = CoxeterGroup::of_type("A4");
  static const CoxeterGroup b4 = CoxeterGroup::of_type("B4");
  static const CoxeterGroup f4 = CoxeterGroup::of_type("F4");
  switch (type[0]) {
    case 'B': return b4;
    case 'F': return f4;
    default: return a4;
  }
}

void BM_ShiftGraph(benchmark::State& state, const char* type, bool parallel) {
  const CoxeterGroup& g = group(type);
  const auto delta = DiagramAutomorphism::identity(g.rank());
  for (auto _ : state) {
    auto graph = parallel ? build_shift_graph(g, delta, g.all_generators())
                          : build_shift_graph_serial(g, delta, g.all_generators());
    benchmark::DoNotOptimize(graph.edge_count());
  }
}

void BM_Decompose(benchmark::State& state, const char* type, bool parallel) {
  const CoxeterGroup& g = group(type);
  const auto delta = DiagramAutomorphism::identity(g.rank());
  const SimpleSubset J{1, 2};
  for (auto _ : state) {
    auto d = parallel ? decompose(g, J, delta) : decompose_serial(g, J, delta);
    benchmark::DoNotOptimize(d.blocks.size());
  }
}

void BM_PartialOrder(benchmark::State& state, const char* type, bool parallel) {
  const CoxeterGroup& g = group(type);
  const auto delta = DiagramAutomorphism::identity(g.rank());
  const SimpleSubset J{1};
  for (auto _ : state) {
    auto rel = parallel ? partial_order(g, J, delta) : partial_order_serial(g, J, delta);
    benchmark::DoNotOptimize(rel.leq.size());
  }
}

void BM_Suite(benchmark::State& state, const char* suite, bool parallel) {
  const CoxeterGroup& g = group("A4");
  for (auto _ : state) {
    auto rep = parallel ? run_suite(g, suite) : run_suite_serial(g, suite);
    benchmark::DoNotOptimize(rep.cases);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_ShiftGraph, F4_serial, "F4", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ShiftGraph, F4_parallel, "F4", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decompose, B4_serial, "B4", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decompose, B4_parallel, "B4", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PartialOrder, A4_serial, "A4", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PartialOrder, A4_parallel, "A4", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, prop_w_serial, "prop-w", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, prop_w_parallel, "prop-w", true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
