#include "benchmark/benchmark.h"
#include "eqlat/relation_laws.hpp"
#include "eqlat/sublattice.hpp"
#include "eqlat/transposition.hpp"

namespace {

// Every alpha <= beta and every gamma of Eq(n), both Dedekind identities.
void BM_DedekindExhaustive(benchmark::State& state) {
  const auto parts = eqlat::enumerate_partitions(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t held = 0;
    for (const auto& a : parts)
      for (const auto& b : parts) {
        if (!eqlat::leq(a, b)) continue;
        for (const auto& c : parts)
          held += eqlat::dedekind_left(a, b, c).holds() + eqlat::dedekind_right(a, b, c).holds();
      }
    benchmark::DoNotOptimize(held);
  }
}
BENCHMARK(BM_DedekindExhaustive)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_TranspositionAllPairs(benchmark::State& state) {
  const auto lattice = eqlat::full_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t valid = 0;
    for (const auto& eta : lattice)
      for (const auto& theta : lattice)
        if (eqlat::permutes(eta, theta)) valid += eqlat::verify_transposition(lattice, eta, theta).valid();
    benchmark::DoNotOptimize(valid);
  }
}
BENCHMARK(BM_TranspositionAllPairs)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ClosureOfThreeAtoms(benchmark::State& state) {
  const std::vector<eqlat::Partition> gens{eqlat::Partition::parse("0,1|2,3"),
                                           eqlat::Partition::parse("0,2|1,3"),
                                           eqlat::Partition::parse("0,3|1,2")};
  for (auto _ : state) benchmark::DoNotOptimize(eqlat::closure(4, gens));
}
BENCHMARK(BM_ClosureOfThreeAtoms);

void BM_IsModular(benchmark::State& state) {
  const auto lattice = eqlat::full_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqlat::is_modular(lattice));
}
BENCHMARK(BM_IsModular)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

}  // namespace
