// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "jfa/expr.hpp"
#include "jfa/machine.hpp"
#include "jfa/parallel.hpp"
#include "jfa/random.hpp"
#include "jfa/selftest.hpp"
#include "jfa/semilinear.hpp"

namespace {

using namespace jfa;

const Machine& abc_cycle() {
  static const Machine m = parse_machine(builtin_corpus_text("abc-cycle"));
  return m;
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(language_upto_serial(abc_cycle(), Semantics::JFA, n));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  state.counters["threads"] = parallel::max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(language_upto(abc_cycle(), Semantics::JFA, n));
}

struct BoxInput {
  SemilinearSet a, b;
  std::vector<std::uint32_t> box;
};

const BoxInput& box_input() {
  static const BoxInput in = [] {
    const Alphabet abc{"a", "b", "c"};
    SemilinearSet s = alpha_shuf_to_semilinear(parse_expr("((a&b)&*&c+a&*)&*", abc));
    return BoxInput{s, alpha_shuf_to_semilinear(semilinear_to_normalform(s, abc)), {12, 12, 12}};
  }();
  return in;
}

void BM_BoxSerial(benchmark::State& state) {
  const BoxInput& in = box_input();
  for (auto _ : state) benchmark::DoNotOptimize(sl_bounded_equal_serial(in.a, in.b, in.box));
}

void BM_BoxParallel(benchmark::State& state) {
  const BoxInput& in = box_input();
  state.counters["threads"] = parallel::max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(sl_bounded_equal(in.a, in.b, in.box));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
