#include <benchmark/benchmark.h>

#include <random>

#include "ringlab/matred.hpp"
#include "ringlab/range_props.hpp"

using namespace ringlab;

namespace {

void BM_SmithNormalFormIntegers(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntegerDomain Z;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-20, 20);
  Matrix<Integer> A(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(Z, A));
}
BENCHMARK(BM_SmithNormalFormIntegers)->DenseRange(2, 8, 2);

void BM_SmithNormalFormPolynomials(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolyDomain f5(5);
  std::mt19937_64 rng(2);
  Matrix<Poly> A(n, n, Poly(5));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Poly::Coeff> c(5);
      for (auto& x : c) x = static_cast<Poly::Coeff>(rng() % 5);
      A(i, j) = Poly(5, c);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(f5, A));
}
BENCHMARK(BM_SmithNormalFormPolynomials)->DenseRange(2, 4, 1);

// Fresh rings each iteration so the closure caches start empty.
void BM_Asr1FiniteRing(benchmark::State& state, const char* spec) {
  for (auto _ : state) {
    const auto r = FiniteRing::make(spec);
    benchmark::DoNotOptimize(is_asr1_ring(*r, Side::Right));
  }
}
BENCHMARK_CAPTURE(BM_Asr1FiniteRing, z30, "Z/30");
BENCHMARK_CAPTURE(BM_Asr1FiniteRing, m2_z2, "M2(Z/2)");
BENCHMARK_CAPTURE(BM_Asr1FiniteRing, ut2_z3, "UT2(Z/3)");

void BM_IdealClosure(benchmark::State& state, const char* spec, Side side) {
  const auto r = FiniteRing::make(spec);
  std::mt19937 rng(3);
  for (auto _ : state) {
    const auto g = static_cast<FiniteRing::Index>(rng() % r->size());
    benchmark::DoNotOptimize(ideal_closure(r, side, {g}));
  }
}
BENCHMARK_CAPTURE(BM_IdealClosure, m2_z3_right, "M2(Z/3)", Side::Right);
BENCHMARK_CAPTURE(BM_IdealClosure, m2_z3_two_sided, "M2(Z/3)", Side::TwoSided);
BENCHMARK_CAPTURE(BM_IdealClosure, product_two_sided, "Z/2 x M2(Z/2)", Side::TwoSided);

}  // namespace
BENCHMARK_MAIN();
