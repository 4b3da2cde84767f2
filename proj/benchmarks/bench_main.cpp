#include <benchmark/benchmark.h>

#include <random>

#include "pchar/families.hpp"

namespace {

using namespace pchar;

Element random_element(const PcGroup& G, std::mt19937_64& rng) {
  Element x = G.identity();
  std::uniform_int_distribution<unsigned> d(0, G.prime() - 1);
  for (std::size_t i = 0; i < G.ngens(); ++i) x[i] = static_cast<Exponent>(d(rng));
  return x;
}

void BM_CollectFamilyA(benchmark::State& state) {
  const auto fa = family_a(static_cast<unsigned>(state.range(0)));
  const PcGroup& G = *fa.group;
  std::mt19937_64 rng(1);
  const Element x = random_element(G, rng), y = random_element(G, rng);
  for (auto _ : state) benchmark::DoNotOptimize(G.multiply(x, y));
}
BENCHMARK(BM_CollectFamilyA)->Arg(3)->Arg(13);

void BM_CollectWreath(benchmark::State& state) {
  const auto w = wreath_iterate(family_a(3), static_cast<std::size_t>(state.range(0)));
  const PcGroup& G = *w.group;
  std::mt19937_64 rng(2);
  const Element x = random_element(G, rng), y = random_element(G, rng);
  for (auto _ : state) benchmark::DoNotOptimize(G.multiply(x, y));
}
BENCHMARK(BM_CollectWreath)->Arg(1)->Arg(2);

void BM_MackeyFamilyA(benchmark::State& state) {
  const auto fa = family_a(static_cast<unsigned>(state.range(0)));
  const MonomialDescriptor d{fa.whole, fa.lambda};
  for (auto _ : state) benchmark::DoNotOptimize(mackey_inner_product(d, d));
}
BENCHMARK(BM_MackeyFamilyA)->Arg(3)->Arg(7)->Arg(13);

void BM_MackeyWreath(benchmark::State& state) {
  const auto w = wreath_lift(family_a(3));
  const MonomialDescriptor d{w.whole, w.lambda};
  for (auto _ : state) benchmark::DoNotOptimize(mackey_inner_product(d, d));
}
BENCHMARK(BM_MackeyWreath);

void BM_EtaFamilyB(benchmark::State& state) {
  const auto fb = family_b(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eta(fb.lambda, fb.whole, *fb.hints).count);
}
BENCHMARK(BM_EtaFamilyB)->Arg(7)->Arg(13);

}  // namespace

BENCHMARK_MAIN();
