#include <random>

#include <benchmark/benchmark.h>

#include "cantorseq/jacobian.hpp"
#include "cantorseq/periodicity.hpp"
#include "cantorseq/presets.hpp"

namespace {

using namespace cantorseq;

const Preset& reference() {
  static const Preset p = preset_a058231();
  return p;
}

void BM_CantorAdd(benchmark::State& state) {
  const Jacobian j(CurveModP::reduce(reference().curve, static_cast<std::uint64_t>(state.range(0))));
  std::mt19937_64 rng(1);
  const MumfordDivisor a = j.random_element(rng);
  const MumfordDivisor b = j.random_element(rng);
  for (auto _ : state) benchmark::DoNotOptimize(j.add(a, b));
}
BENCHMARK(BM_CantorAdd)->Arg(13)->Arg(397)->Arg(4999);

void BM_ScalarMul(benchmark::State& state) {
  const Jacobian j(CurveModP::reduce(reference().curve, 397));
  const MumfordDivisor d = j.embed(reference().point);
  for (auto _ : state) benchmark::DoNotOptimize(j.scalar_mul(165192, d));
}
BENCHMARK(BM_ScalarMul);

void BM_JacobianOrder(benchmark::State& state) {
  const CurveModP c = CurveModP::reduce(reference().curve, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_order(c));
}
BENCHMARK(BM_JacobianOrder)->Arg(101)->Arg(397)->Arg(1999)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(reference().curve, reference().point, reference().seed, p));
  }
}
BENCHMARK(BM_Analyze)->Arg(61)->Arg(379)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
