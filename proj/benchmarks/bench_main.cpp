#include <benchmark/benchmark.h>

#include <vector>

#include "pit/circuits.hpp"
#include "pit/concentration.hpp"
#include "pit/expand.hpp"
#include "pit/field.hpp"
#include "pit/hitgen.hpp"
#include "pit/kronecker.hpp"
#include "pit/linalg.hpp"
#include "pit/rng.hpp"

namespace {

using namespace pit;

void BM_FieldMul(benchmark::State& state) {
  PrimeField F(kDefaultPrime);
  SplitMix64 rng(1);
  std::uint64_t a = rng.below(kDefaultPrime), b = rng.below(kDefaultPrime);
  for (auto _ : state) {
    a = F.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul);

void BM_RankModP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PrimeField F(kDefaultPrime);
  SplitMix64 rng(7);
  std::vector<std::vector<std::uint64_t>> m(static_cast<std::size_t>(n));
  for (auto& row : m) {
    row.resize(static_cast<std::size_t>(n));
    for (auto& v : row) v = rng.below(kDefaultPrime);
  }
  for (auto _ : state) {
    auto copy = m;
    benchmark::DoNotOptimize(rank_mod_p(F, copy));
  }
}
BENCHMARK(BM_RankModP)->Arg(16)->Arg(32)->Arg(64);

void BM_EvalDepth3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto c = random_depth3(kDefaultPrime, n, 3, 2, 5);
  SplitMix64 rng(11);
  std::vector<std::uint64_t> x(static_cast<std::size_t>(n));
  for (auto& v : x) v = rng.below(kDefaultPrime);
  for (auto _ : state) benchmark::DoNotOptimize(eval_depth3(c, x).first);
}
BENCHMARK(BM_EvalDepth3)->Arg(8)->Arg(10)->Arg(12);

void BM_ExpandDepth3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto c = random_depth3(kDefaultPrime, n, 3, 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(expand_depth3(c).rows.size());
}
BENCHMARK(BM_ExpandDepth3)->Arg(8)->Arg(10)->Arg(12);

void BM_EvalRoabp(benchmark::State& state) {
  auto r = random_roabp(kDefaultPrime, 8, 4, 2, 2, 3, 2, true, 9);
  SplitMix64 rng(13);
  std::vector<std::uint64_t> x(8);
  for (auto& v : x) v = rng.below(kDefaultPrime);
  for (auto _ : state) benchmark::DoNotOptimize(eval_roabp(r, x));
}
BENCHMARK(BM_EvalRoabp);

void BM_SeparatingMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vars[static_cast<std::size_t>(v)] = v;
  auto fam = enumerate_support_bounded(vars, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_separating_map(fam, n, 1).q[0]);
}
BENCHMARK(BM_SeparatingMap)->Arg(6)->Arg(10);

void BM_DeltaStreamEmit(benchmark::State& state) {
  HSParams ps;
  ps.p = kDefaultPrime;
  ps.n = static_cast<int>(state.range(0));
  ps.k = 2;
  ps.delta = 1;
  auto stream = hs_delta_distance(ps);
  std::uint64_t emitted = 0;
  for (auto _ : state) {
    auto pt = stream.next();
    if (!pt) {
      state.PauseTiming();
      stream = hs_delta_distance(ps);
      state.ResumeTiming();
      pt = stream.next();
    }
    ++emitted;
    benchmark::DoNotOptimize(pt->x.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(emitted));
}
BENCHMARK(BM_DeltaStreamEmit)->Arg(6)->Arg(10);

void BM_TransferRowspanWeight(benchmark::State& state) {
  auto m = transfer_matrix(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_rowspan_weight(m, 2));
}
BENCHMARK(BM_TransferRowspanWeight)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
