#include <random>

#include "benchmark/benchmark.h"
#include "eqlat/partition.hpp"
#include "eqlat/relation_laws.hpp"

namespace {

void BM_EnumeratePartitions(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    auto parts = eqlat::enumerate_partitions(n);
    count = parts.size();
    benchmark::DoNotOptimize(parts.data());
  }
  state.counters["partitions"] = static_cast<double>(count);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(4, 9)->Unit(benchmark::kMicrosecond);

class PairFixture : public benchmark::Fixture {
 public:
  void SetUp(const benchmark::State& state) override {
    std::mt19937_64 rng(42);
    const auto n = static_cast<std::size_t>(state.range(0));
    pairs_.clear();
    for (int i = 0; i < 256; ++i)
      pairs_.emplace_back(eqlat::random_partition(n, rng), eqlat::random_partition(n, rng));
  }

 protected:
  std::vector<std::pair<eqlat::Partition, eqlat::Partition>> pairs_;
};

BENCHMARK_DEFINE_F(PairFixture, Compose)(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs_[i++ % pairs_.size()];
    benchmark::DoNotOptimize(eqlat::compose(a, b));
  }
}
BENCHMARK_REGISTER_F(PairFixture, Compose)->Arg(8)->Arg(32)->Arg(128);

BENCHMARK_DEFINE_F(PairFixture, UnionFindJoin)(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs_[i++ % pairs_.size()];
    benchmark::DoNotOptimize(eqlat::join(a, b));
  }
}
BENCHMARK_REGISTER_F(PairFixture, UnionFindJoin)->Arg(8)->Arg(32)->Arg(128);

BENCHMARK_DEFINE_F(PairFixture, CompositionJoin)(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs_[i++ % pairs_.size()];
    benchmark::DoNotOptimize(eqlat::join_by_composition(a, b));
  }
}
BENCHMARK_REGISTER_F(PairFixture, CompositionJoin)->Arg(8)->Arg(32)->Arg(128);

BENCHMARK_DEFINE_F(PairFixture, Permutes)(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs_[i++ % pairs_.size()];
    benchmark::DoNotOptimize(eqlat::permutes(a, b));
  }
}
BENCHMARK_REGISTER_F(PairFixture, Permutes)->Arg(8)->Arg(32);

}  // namespace
