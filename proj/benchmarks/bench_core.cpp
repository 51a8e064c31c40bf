#include <benchmark/benchmark.h>

#include <random>

#include "modtheta/crystal.hpp"
#include "modtheta/datum.hpp"
#include "modtheta/polygon.hpp"
#include "modtheta/random_datum.hpp"
#include "modtheta/schur.hpp"
#include "modtheta/theta.hpp"
#include "modtheta/weights.hpp"

using namespace modtheta;

namespace {

ShimuraDatum inert21() {
  RawDatum raw;
  raw.kind = "A";
  raw.n = 3;
  raw.p = 3;
  raw.orbits = {{"tau", "taustar"}};
  raw.star = {{"tau", "taustar"}, {"taustar", "tau"}};
  raw.cm_type = {"tau"};
  raw.signature = {{"tau", 2}, {"taustar", 1}};
  return validate_datum(raw);
}

std::vector<ShimuraDatum> corpus(std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<ShimuraDatum> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_case_a_datum(rng));
  return out;
}

}  // namespace

static void BM_WeylDim(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  std::vector<Int> k(a);
  for (int i = 0; i < a; ++i) k[i] = 2 * (a - i);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_dim(a, k));
}
BENCHMARK(BM_WeylDim)->Arg(3)->Arg(8)->Arg(16);

static void BM_LittlewoodRichardson(benchmark::State& state) {
  const Int n = state.range(0);
  Partition mu = {n, n - 1, 1}, nu = {n - 1, 2, 1};
  for (auto _ : state) {
    LittlewoodRichardson fresh;
    benchmark::DoNotOptimize(fresh.multiply(mu, nu));
  }
}
BENCHMARK(BM_LittlewoodRichardson)->Arg(3)->Arg(5)->Arg(7);

static void BM_BruteForceDim(benchmark::State& state) {
  std::vector<Int> k = {2, 1, 0};
  if (state.range(0) == 4) k = {2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_dim(3, k));
}
BENCHMARK(BM_BruteForceDim)->Arg(3)->Arg(4);

static void BM_CauchyExpansion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_sym_power(state.range(0), 3, 3));
}
BENCHMARK(BM_CauchyExpansion)->Arg(2)->Arg(4);

static void BM_CrystalExponents(benchmark::State& state) {
  auto data = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Int acc = 0;
    for (const auto& d : data)
      for (const auto& t : d.embeddings())
        if (d.f(t) > 0) acc += c_exponent(d, t);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CrystalExponents)->Arg(500);

static void BM_DenseCrystalPath(benchmark::State& state) {
  auto d = inert21();
  for (auto _ : state) benchmark::DoNotOptimize(c_exponent_dense(d, "tau"));
}
BENCHMARK(BM_DenseCrystalPath);

static void BM_ExploreCycles(benchmark::State& state) {
  auto d = inert21();
  std::set<std::string> all = {"tau", "taustar"};
  auto k = make_weight(d, {{"tau", {2, 2}}, {"taustar", {5}}});
  std::vector<OperatorDescriptor> gens = {
      {OpKind::ThetaTildeBasic, all, "tau", std::nullopt, ThetaVariant::General, {}},
      {OpKind::HasseMult, {"tau"}, "", std::nullopt, ThetaVariant::General, {}},
      {OpKind::HasseMult, {"taustar"}, "", std::nullopt, ThetaVariant::General, {}},
  };
  for (auto _ : state) benchmark::DoNotOptimize(explore_cycles(d, k, gens, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExploreCycles)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
