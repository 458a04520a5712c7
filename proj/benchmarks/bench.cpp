#include <benchmark/benchmark.h>

#include <random>

#include "artinder/derivations.hpp"
#include "artinder/groebner.hpp"
#include "artinder/matrix.hpp"
#include "artinder/parser.hpp"

namespace {

artinder::QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  artinder::QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) =
          artinder::Rational(num(rng)) / artinder::Rational(den(rng));
  return m;
}

void BM_rref(benchmark::State& state) {
  artinder::QMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)),
                                      20240901);
  for (auto _ : state) {
    auto [r, rank] = artinder::rref(m);
    benchmark::DoNotOptimize(rank);
  }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_buchberger(benchmark::State& state) {
  artinder::Presentation p = artinder::parse_presentation(
      "vars t s\nrel t*s\nrel t^3 - s^3\n");
  for (auto _ : state) {
    auto g = artinder::buchberger(p);
    benchmark::DoNotOptimize(g.generators.size());
  }
}
BENCHMARK(BM_buchberger);

void BM_derivation_solve(benchmark::State& state) {
  artinder::LocalAlgebra a = artinder::from_presentation(
      artinder::parse_presentation(
          "vars x1 x2 x3\nrel x1*x2\nrel x1*x3\nrel x2*x3\n"
          "rel x1^2 - x2^2\nrel x2^2 - x3^2\n"));
  for (auto _ : state) {
    auto d = artinder::derivation_space(a);
    benchmark::DoNotOptimize(d.dim());
  }
}
BENCHMARK(BM_derivation_solve);

}  // namespace

BENCHMARK_MAIN();
