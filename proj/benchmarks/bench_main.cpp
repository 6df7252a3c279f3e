#include "jordan/checker.hpp"
#include "jordan/expr.hpp"
#include "jordan/functional.hpp"

#include <benchmark/benchmark.h>

using namespace jordan;

namespace {

const std::string kProofs = std::string(JORDAN_SOURCE_DIR) + "/proofs/";

void BM_ReplayCentralizer(benchmark::State& state) {
  const auto script = load_script(kProofs + "theorem_centralizer.steps");
  for (auto _ : state) benchmark::DoNotOptimize(replay(script));
}
BENCHMARK(BM_ReplayCentralizer)->Unit(benchmark::kMillisecond);

void BM_ReplayDerivation(benchmark::State& state) {
  const auto script = load_script(kProofs + "theorem_derivation.steps");
  for (auto _ : state) benchmark::DoNotOptimize(replay(script));
}
BENCHMARK(BM_ReplayDerivation)->Unit(benchmark::kMillisecond);

void BM_Normalize(benchmark::State& state) {
  const NCPoly p = parse_polynomial("D[(x + y)^3] x y - x D[y x^2] + T0[x y] x - x T0[y x]");
  RewriteRules rules{true, true};
  for (auto _ : state) benchmark::DoNotOptimize(normalize(p, rules));
}
BENCHMARK(BM_Normalize);

void BM_SolveMat2(benchmark::State& state) {
  const auto r = FinRing::MatRing(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_identity(r, {Law::gen_centralizer, 1, 2}));
}
BENCHMARK(BM_SolveMat2)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CheckTheoremMat2(benchmark::State& state) {
  const auto r = FinRing::MatRing(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem(r, {Law::gen_derivation, 1, 2}));
}
BENCHMARK(BM_CheckTheoremMat2)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_Semiprime(benchmark::State& state) {
  const auto r = FinRing::MatRing(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_semiprime(r));
}
BENCHMARK(BM_Semiprime)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
