#include <benchmark/benchmark.h>

#include <random>

#include "escalier/staircase.hpp"

using namespace escalier;

namespace {

std::vector<Polynomial> random_monomials(std::size_t n, Exponent D, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> F;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = static_cast<Exponent>(1 + rng() % D);
    F.push_back(Polynomial::monomial(Term(e), 1, PrimeField()));
  }
  return F;
}

void BM_BruteSerial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto D = static_cast<Exponent>(st.range(1));
  GroebnerOracle o(random_monomials(n, D, 6, 1), TermOrder(OrderKind::DegRevLex, n));
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_generators(o, n, D));
}

void BM_BruteParallel(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto D = static_cast<Exponent>(st.range(1));
  GroebnerOracle o(random_monomials(n, D, 6, 1), TermOrder(OrderKind::DegRevLex, n));
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_generators_parallel(o, n, D));
}

void BM_Reconstruct(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto D = static_cast<Exponent>(st.range(1));
  GroebnerOracle o(random_monomials(n, D, 6, 1), TermOrder(OrderKind::DegRevLex, n));
  std::size_t before = 0;
  for (auto _ : st) {
    before = o.query_count();
    benchmark::DoNotOptimize(reconstruct(o, n, D));
  }
  st.counters["queries"] = static_cast<double>(o.query_count() - before);
}

}  // namespace

BENCHMARK(BM_BruteSerial)->Args({3, 8})->Args({4, 8})->Args({4, 12});
BENCHMARK(BM_BruteParallel)->Args({3, 8})->Args({4, 8})->Args({4, 12});
BENCHMARK(BM_Reconstruct)->Args({3, 8})->Args({4, 8})->Args({4, 12});

BENCHMARK_MAIN();
