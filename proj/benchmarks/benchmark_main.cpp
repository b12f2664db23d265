#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "chainmetric/anticode.hpp"
#include "chainmetric/field.hpp"
#include "chainmetric/metric.hpp"
#include "chainmetric/oracle.hpp"
#include "chainmetric/poset.hpp"
#include "chainmetric/weight.hpp"

namespace {

using namespace chainmetric;

MetricSpace lee_chain(unsigned q, unsigned n) {
  Field f = Field::make(q);
  return MetricSpace(f, n, Poset::chain(n), make_standard_weight(f, WeightKind::lee));
}

std::vector<Vector> sample_vectors(const Field& f, unsigned n, std::size_t count) {
  std::vector<Vector> out;
  out.reserve(count);
  std::uint64_t space = 1;
  for (unsigned i = 0; i < n; ++i) space *= f.q();
  std::uint64_t stride = space / count + 1;
  for (std::uint64_t r = 0; out.size() < count; r += stride) out.push_back(vector_from_rank(f, n, r % space));
  return out;
}

void BM_ChainWeightFastPath(benchmark::State& state) {
  MetricSpace space = lee_chain(7, static_cast<unsigned>(state.range(0)));
  std::vector<Vector> vs = sample_vectors(space.field(), space.dimension(), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(space.chain_weight(vs[i]));
    i = (i + 1) % vs.size();
  }
}
BENCHMARK(BM_ChainWeightFastPath)->Arg(4)->Arg(8)->Arg(16);

void BM_GeneralWeightEvaluator(benchmark::State& state) {
  MetricSpace space = lee_chain(7, static_cast<unsigned>(state.range(0)));
  std::vector<Vector> vs = sample_vectors(space.field(), space.dimension(), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(space.wp_weight(vs[i]));
    i = (i + 1) % vs.size();
  }
}
BENCHMARK(BM_GeneralWeightEvaluator)->Arg(4)->Arg(8)->Arg(16);

void BM_BallSizeClosedForm(benchmark::State& state) {
  Field f = Field::of_order(9);
  WeightTable w = make_standard_weight(f, WeightKind::hamming);
  std::uint64_t D = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball_size(w, 12, 1 + (D++ % 12)));
  }
}
BENCHMARK(BM_BallSizeClosedForm);

void BM_BallEnumeration(benchmark::State& state) {
  MetricSpace space = lee_chain(5, 4);
  Vector zero(4, space.field().zero());
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball(space, zero, static_cast<std::uint64_t>(state.range(0))));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BallEnumeration)->Arg(2)->Arg(4)->Arg(6);

void BM_ExactMaximumAnticode(benchmark::State& state) {
  MetricSpace space = lee_chain(5, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_a_star(space, static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_ExactMaximumAnticode)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
