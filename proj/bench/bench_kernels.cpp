// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "sschur/bases.hpp"
#include "sschur/schur_table.hpp"
#include "sschur/superalgebra.hpp"

using namespace sschur;

namespace {

SuperPolynomial product_operand(int n) { return homogeneous(n) * homogeneous_tilde(n - 1); }

template <SuperPolynomial (*Multiply)(const SuperPolynomial&, const SuperPolynomial&)>
void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SuperPolynomial f = product_operand(n), g = elementary(n);
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(f, g));
  state.counters["term_pairs"] = static_cast<double>(f.size() * g.size());
}

void BM_Populate(benchmark::State& state, Execution exec) {
  const int total = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SchurTable table(TableLimits{}, exec);
    table.populate(SchurType::I, total, 2);
    benchmark::ClobberMemory();
  }
}

}  // namespace

BENCHMARK_TEMPLATE(BM_Multiply, multiply_serial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Multiply, multiply_parallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Populate, serial, Execution::Serial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Populate, parallel, Execution::Parallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
