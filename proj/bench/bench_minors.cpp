// Parallel minors against the serial reference on matrices of random forms.

#include <benchmark/benchmark.h>

#include <random>

#include "mld/matrix.hpp"

namespace {

using namespace mld;

PolyMatrix random_matrix(std::size_t rows, std::size_t cols, int degree) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cols; ++i) names.push_back("x" + std::to_string(i));
  const RingPtr r = make_ring(names);
  std::mt19937_64 rng(rows * 131 + cols);
  std::uniform_int_distribution<int> c(-5, 5);
  PolyMatrix m(r, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < cols; ++j) {
      Polynomial p(r);
      for (std::size_t v = 0; v < cols; ++v) p += Polynomial::variable(r, v) * Scalar(c(rng));
      row.push_back(p.pow(degree));
    }
    m.append_row(std::move(row));
  }
  return m;
}

void BM_minors(benchmark::State& state) {
  const auto m = random_matrix(3, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(minors(m, 3));
}

void BM_minors_serial(benchmark::State& state) {
  const auto m = random_matrix(3, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(minors_serial(m, 3));
}

BENCHMARK(BM_minors)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_minors_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
