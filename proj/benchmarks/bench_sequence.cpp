#include <benchmark/benchmark.h>

#include "cantorseq/exact_sequence.hpp"
#include "cantorseq/modular_sequence.hpp"
#include "cantorseq/presets.hpp"

namespace {

using namespace cantorseq;

const Preset& reference() {
  static const Preset p = preset_a058231();
  return p;
}

void BM_ModularStep(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const ModularRecurrence rec(SomosCoefficients::from_seed(reference().seed), p);
  ModularScanner scanner(reference().seed, rec);
  for (auto _ : state) benchmark::DoNotOptimize(scanner.advance());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ModularStep)->Arg(13)->Arg(397)->Arg(1'000'003);

void BM_WindowStep(benchmark::State& state) {
  const ModularRecurrence rec(SomosCoefficients::from_seed(reference().seed), 397);
  Window w = window_init(reference().seed, 397, kJumpHalfWidth);
  for (auto _ : state) {
    w = step(w, rec, Direction::right);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WindowStep);

void BM_Jump(benchmark::State& state) {
  const ModularSequence ms(reference().seed, 397);
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ms.jump(n));
}
BENCHMARK(BM_Jump)->RangeMultiplier(1000)->Range(1000, 1'000'000'000'000);

void BM_ExactExtension(benchmark::State& state) {
  const long n = state.range(0);
  const bool cross_check = state.range(1) != 0;
  for (auto _ : state) {
    ExactSequence seq(reference().seed, n, cross_check);
    seq.extend_to(n);
    benchmark::DoNotOptimize(seq.term(n));
  }
}
BENCHMARK(BM_ExactExtension)->ArgsProduct({{50, 150, 300}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace
