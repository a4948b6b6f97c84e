// Evaluation strategies for V_n on the unit disk, plus the exact
// constructions they start from.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "chebsqrt/closed_form.hpp"
#include "chebsqrt/complex.hpp"
#include "chebsqrt/iterates.hpp"
#include "chebsqrt/series.hpp"

using namespace chebsqrt;

namespace {

constexpr unsigned kPrec = 256;

std::vector<ComplexRational> samples(std::size_t count) {
  constexpr long kDen = 1L << 20;
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> coord(-kDen, kDen);
  std::vector<ComplexRational> pts;
  while (pts.size() < count) {
    const long x = coord(rng), y = coord(rng);
    if (x * x + y * y <= kDen * kDen) pts.push_back({make_rational(x, kDen), make_rational(y, kDen)});
  }
  return pts;
}

void BM_ExactHorner(benchmark::State& state) {
  const auto f = iterate(IterationScheme::v_step(), static_cast<unsigned>(state.range(0)));
  const auto pts = samples(64);
  for (auto _ : state)
    for (const auto& z : pts) benchmark::DoNotOptimize(f(z));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}

void BM_BigFloatHorner(benchmark::State& state) {
  const auto f = iterate(IterationScheme::v_step(), static_cast<unsigned>(state.range(0)));
  const auto ff = to_float(f, kPrec + horner_guard_bits(f));
  std::vector<Complex> pts;
  for (const auto& z : samples(64)) pts.emplace_back(z, kPrec);
  for (auto _ : state)
    for (const auto& z : pts) benchmark::DoNotOptimize(ff(z));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}

void BM_PartialFraction(benchmark::State& state) {
  const auto pf = decompose(static_cast<unsigned>(state.range(0)), kPrec);
  std::vector<Complex> pts;
  for (const auto& z : samples(64)) pts.emplace_back(z, kPrec);
  for (auto _ : state)
    for (const auto& z : pts) benchmark::DoNotOptimize(pf_eval(pf, z));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}

void BM_TaylorExtraction(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto f = iterate(IterationScheme::v_step(), n);
  for (auto _ : state) benchmark::DoNotOptimize(taylor_coefficients(f, 4 * n));
}

void BM_IterateV(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(iterate(IterationScheme::v_step(), static_cast<unsigned>(state.range(0))));
}

void BM_IterateNewton(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(iterate(IterationScheme::newton(2), static_cast<unsigned>(state.range(0))));
}

void BM_Decompose(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(decompose(static_cast<unsigned>(state.range(0)), kPrec));
}

}  // namespace

BENCHMARK(BM_ExactHorner)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_BigFloatHorner)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_PartialFraction)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_TaylorExtraction)->Arg(16)->Arg(64);
BENCHMARK(BM_IterateV)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_IterateNewton)->Arg(3)->Arg(5);
BENCHMARK(BM_Decompose)->Arg(16)->Arg(64);
BENCHMARK_MAIN();
