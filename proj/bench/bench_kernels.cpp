#include <benchmark/benchmark.h>

#include "ginv/finite_ring.hpp"
#include "ginv/law_eval.hpp"
#include "ginv/law_parser.hpp"
#include "ginv/ring_oracle.hpp"

using namespace ginv;

namespace {

const char* kRings[] = {"Zn:12", "M2:Z2", "Zn:64"};

const FiniteRing& ring_at(int i) {
  static const FiniteRing rings[] = {FiniteRing::build(kRings[0]), FiniteRing::build(kRings[1]),
                                     FiniteRing::build(kRings[2])};
  return rings[i];
}

template <bool Parallel>
void BM_WitnessTable(benchmark::State& state) {
  const FiniteRing& ring = ring_at(static_cast<int>(state.range(0)));
  const auto kind = static_cast<InverseKind>(state.range(1));
  for (auto _ : state) {
    auto t = Parallel ? witness_table_parallel(ring, kind) : witness_table_serial(ring, kind);
    benchmark::DoNotOptimize(t);
  }
  state.SetLabel(std::string(kRings[state.range(0)]) + " " + std::string(kind_short_name(kind)));
}

template <bool Parallel>
void BM_LawExhaustive(benchmark::State& state) {
  const FiniteRing& ring = ring_at(static_cast<int>(state.range(0)));
  const RingOracle oracle(ring);
  oracle.prefetch_all();
  const Law law = parse_law("a*b = b*a, b*a^{wd}*a = a^{wd}*a*b => b^{wd}*a^{wd} in wd(a*b)");
  EvalOptions o;
  o.parallel = Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_law(law, oracle, o));
  state.SetLabel(kRings[state.range(0)]);
}

template <bool Parallel>
void BM_LawSampledMatrices(benchmark::State& state) {
  const MatrixCarrier m;
  const Law law = parse_law("a^{wd}*a*a^{mp} in wdmp(a)");
  EvalOptions o;
  o.mode = EvalMode::Sampled;
  o.samples = static_cast<std::size_t>(state.range(0));
  o.parallel = Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_law(law, m, o));
}

void table_args(benchmark::internal::Benchmark* b) {
  for (int r = 0; r < 3; ++r)
    for (auto k : {InverseKind::MP, InverseKind::WD, InverseKind::WDMP}) b->Args({r, static_cast<int>(k)});
}

}  // namespace

BENCHMARK(BM_WitnessTable<false>)->Apply(table_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessTable<true>)->Apply(table_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LawExhaustive<false>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LawExhaustive<true>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LawSampledMatrices<false>)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LawSampledMatrices<true>)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
