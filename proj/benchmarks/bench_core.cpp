#include <benchmark/benchmark.h>

#include "fourier/analysis.hpp"
#include "fourier/fusion.hpp"
#include "fourier/genlib.hpp"

namespace {

using namespace fourier;

AbelianGroupSpec cyclic(std::int64_t n) { return n == 1 ? AbelianGroupSpec{} : AbelianGroupSpec{{n}}; }

void BM_Multiply(benchmark::State& state) {
  const auto n = state.range(0);
  const Cyclotomic a = Cyclotomic::root_of_unity(n) + Cyclotomic(Rational(1, 3)) * Cyclotomic::root_of_unity(n, 2);
  const Cyclotomic b = Cyclotomic::root_of_unity(n, n - 1) - Cyclotomic(Rational(2, 5));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(12)->Arg(60)->Arg(420);

void BM_Inverse(benchmark::State& state) {
  const auto n = state.range(0);
  const Cyclotomic a = Cyclotomic(2L) + Cyclotomic::root_of_unity(n) + Cyclotomic::root_of_unity(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_Inverse)->Arg(12)->Arg(60)->Arg(420)->Unit(benchmark::kMicrosecond);

void BM_RescaleFromP(benchmark::State& state) {
  const ExactMatrix P = abelian_character_table(cyclic(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(from_P(P));
}
BENCHMARK(BM_RescaleFromP)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_VerifyFourier(benchmark::State& state) {
  const ExactMatrix S = from_P(abelian_character_table(cyclic(state.range(0)))).S;
  for (auto _ : state) benchmark::DoNotOptimize(verify_fourier(S));
}
BENCHMARK(BM_VerifyFourier)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_VerifyCAlgebra(benchmark::State& state) {
  const CAlgebra alg = build_calgebra(from_P(abelian_character_table({{2, 2, 2, 2}})));
  for (auto _ : state) benchmark::DoNotOptimize(verify_calgebra(alg));
}
BENCHMARK(BM_VerifyCAlgebra)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const FourierTriple t = from_P(abelian_character_table({{2, 8}}));
  for (auto _ : state) benchmark::DoNotOptimize(classify(t));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
