#include <benchmark/benchmark.h>

#include <vector>

#include "ordinals/fuzz.hpp"
#include "ordinals/gen.hpp"
#include "ordinals/semantics.hpp"
#include "ordinals/text.hpp"

namespace {

std::vector<ord::Cnf> random_cnfs(std::size_t n) {
  ord::Rng rng(99);
  std::vector<ord::Cnf> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(ord::gen_cnf(rng));
  return out;
}

void BM_CnfAdd(benchmark::State& state) {
  auto values = random_cnfs(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ord::cnf_add(values[i % 256], values[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(BM_CnfAdd);

void BM_CnfMul(benchmark::State& state) {
  auto values = random_cnfs(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ord::cnf_mul(values[i % 256], values[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(BM_CnfMul);

void BM_CnfExp(benchmark::State& state) {
  auto values = random_cnfs(256);
  const ord::Cnf one = ord::cnf(1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ord::cnf_exp(ord::cnf_max(values[i % 256], one),
                                          values[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(BM_CnfExp);

void BM_RankUnrank(benchmark::State& state) {
  ord::Expr e = ord::parse_expr("(w+2)^(w*2) + w^3*4");
  ord::Rng rng(7);
  auto xs = ord::sample_elements(rng, e, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    ord::Cnf c = ord::rank(e, xs[i % 64]);
    benchmark::DoNotOptimize(ord::unrank(e, c));
    ++i;
  }
}
BENCHMARK(BM_RankUnrank);

void BM_Compare(benchmark::State& state) {
  ord::Expr e = ord::parse_expr("(w+2)^(w*2)");
  ord::Rng rng(8);
  auto xs = ord::sample_elements(rng, e, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ord::compare(e, xs[i % 64], xs[(i + 13) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Compare);

void BM_FuzzCase(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ord::fuzz_order_embedding(seed++, 1));
  }
}
BENCHMARK(BM_FuzzCase);

}  // namespace

BENCHMARK_MAIN();
