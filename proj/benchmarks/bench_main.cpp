#include <benchmark/benchmark.h>

#include <random>

#include "hyperlc/families.hpp"
#include "hyperlc/lienard.hpp"
#include "hyperlc/parse.hpp"
#include "hyperlc/recover.hpp"
#include "hyperlc/rootclass.hpp"

using namespace hyperlc;

namespace {

Poly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = Rational(num(rng), 1 + std::abs(num(rng)));
  while (c.back() == 0) c.back() = 1;
  for (auto& v : c) v.canonicalize();
  return Poly(std::move(c));
}

void BM_DiscriminantSequence(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const Poly f = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_sequence(f));
}
BENCHMARK(BM_DiscriminantSequence)->DenseRange(4, 16, 4);

void BM_CountRoots(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const Poly f = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_roots(f));
}
BENCHMARK(BM_CountRoots)->DenseRange(4, 16, 4);

void BM_IsolateRealRoots(benchmark::State& state) {
  std::mt19937_64 rng(13);
  const Poly f = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(f));
}
BENCHMARK(BM_IsolateRealRoots)->DenseRange(4, 16, 4);

void BM_CertifyWorked(benchmark::State& state) {
  const HyperellipticCurve curve{parse_poly("(x-1)*(x-2)*(x+10)"), parse_poly("-10*(x-1)*(x-2)*(x+10)^4")};
  for (auto _ : state) benchmark::DoNotOptimize(certify(curve));
}
BENCHMARK(BM_CertifyWorked);

void BM_CertifyNTwoM(benchmark::State& state) {
  const auto built = construct_n_2m(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify(built.curve));
}
BENCHMARK(BM_CertifyNTwoM)->DenseRange(4, 7);

void BM_RecoverNTwoM(benchmark::State& state) {
  const auto built = construct_n_2m(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(recover_curve(built.system));
}
BENCHMARK(BM_RecoverNTwoM)->DenseRange(4, 7);

void BM_ConstructCaseI(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construct_case_i(10, 13));
}
BENCHMARK(BM_ConstructCaseI)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
