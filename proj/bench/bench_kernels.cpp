// Parallel kernels against the serial reference.

#include <benchmark/benchmark.h>

#include <random>

#include "secmon/kernels.hpp"

using namespace secmon;

namespace {

std::vector<double> table(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> t(n);
  for (auto& x : t) x = u(rng);
  return t;
}

Eigen::MatrixXcd state(Eigen::Index d) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = {g(rng), g(rng)};
  }
  // Hermitian is enough for timing; a Gram product would dominate setup.
  Eigen::MatrixXcd h = m + m.adjoint();
  return h / h.trace();
}

template <bool Parallel>
void BM_Marginalize(benchmark::State& s) {
  const std::size_t parties = static_cast<std::size_t>(s.range(0));
  const std::vector<std::size_t> cards(parties, 4);
  const auto t = table(std::size_t{1} << (2 * parties));
  const PartyMask keep = 0b101;
  for (auto _ : s) {
    auto out = Parallel ? kernels::marginalize(t, cards, keep)
                        : kernels::serial::marginalize(t, cards, keep);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_AxisKernel(benchmark::State& s) {
  const std::size_t parties = static_cast<std::size_t>(s.range(0));
  const std::vector<std::size_t> cards(parties, 4);
  const auto t = table(std::size_t{1} << (2 * parties));
  const std::vector<double> k(16, 0.25);
  for (auto _ : s) {
    auto out = Parallel ? kernels::apply_axis_kernel(t, cards, 1, k, 4)
                        : kernels::serial::apply_axis_kernel(t, cards, 1, k, 4);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_PartialTrace(benchmark::State& s) {
  const std::size_t parties = static_cast<std::size_t>(s.range(0));
  const std::vector<std::size_t> dims(parties, 2);
  const auto rho = state(Eigen::Index{1} << parties);
  for (auto _ : s) {
    auto out = Parallel ? kernels::partial_trace(rho, dims, 0b011)
                        : kernels::serial::partial_trace(rho, dims, 0b011);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_Marginalize<false>)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_Marginalize<true>)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_AxisKernel<false>)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_AxisKernel<true>)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_PartialTrace<false>)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_PartialTrace<true>)->Arg(8)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
