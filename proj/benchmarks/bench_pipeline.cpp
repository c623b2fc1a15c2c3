#include <benchmark/benchmark.h>

#include "soscert/assumption.hpp"
#include "soscert/certgen.hpp"
#include "soscert/gradpipe.hpp"
#include "soscert/groebner.hpp"
#include "soscert/parse.hpp"
#include "soscert/sdp.hpp"

using namespace soscert;

namespace {

std::vector<Polynomial> binary(std::size_t n) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial xi = Polynomial::variable(n, i);
    g.push_back(xi * xi - Polynomial::constant(n, 1));
  }
  return g;
}

// sum_{i<j} x_i x_j + sum_i i x_i
Polynomial coupling(std::size_t n) {
  Polynomial f(n);
  for (std::size_t i = 0; i < n; ++i) {
    f += Polynomial::variable(n, i) * Rational(static_cast<long>(i + 1));
    for (std::size_t j = i + 1; j < n; ++j) f += Polynomial::variable(n, i) * Polynomial::variable(n, j);
  }
  return f;
}

std::vector<Polynomial> example31() {
  const auto names = default_variable_names(2);
  return {parse_polynomial("x2*(2*(x2 - 1) - 2*x1)", names), parse_polynomial("x1*(x2 - 3*(x1 - 1))", names)};
}

}  // namespace

static void BM_CheckAtInfinity(benchmark::State& state) {
  const auto g = binary(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_at_infinity(g));
}
BENCHMARK(BM_CheckAtInfinity)->DenseRange(1, 5);

static void BM_Buchberger(benchmark::State& state) {
  const auto g = example31();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(g));
}
BENCHMARK(BM_Buchberger);

static void BM_SolveVariety(benchmark::State& state) {
  const auto g = binary(static_cast<std::size_t>(state.range(0)));
  const auto qa = quotient_algebra(buchberger(g));
  for (auto _ : state) benchmark::DoNotOptimize(solve_variety(qa, g));
}
BENCHMARK(BM_SolveVariety)->DenseRange(1, 4);

static void BM_BuildRelaxation(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto g = binary(n);
  const auto f = coupling(n);
  for (auto _ : state) benchmark::DoNotOptimize(build_relaxation(f, g, static_cast<int>(n)));
}
BENCHMARK(BM_BuildRelaxation)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_SolveAtBound(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto prob = build_relaxation(coupling(n), binary(n), static_cast<int>(n));
  for (auto _ : state) benchmark::DoNotOptimize(solve(prob));
  state.counters["gram_size"] = static_cast<double>(prob.moment_matrix_size);
}
BENCHMARK(BM_SolveAtBound)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_ExactCertificate(benchmark::State& state) {
  const auto g = example31();
  const auto f = parse_polynomial("x1 + x2", default_variable_names(2));
  CertificateOptions co;
  co.assumption_verified = true;
  for (auto _ : state) benchmark::DoNotOptimize(build_certificate(f, g, co));
}
BENCHMARK(BM_ExactCertificate)->Unit(benchmark::kMillisecond);

static void BM_Copositivity(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const QMatrix p = QMatrix::identity(n);
  for (auto _ : state) benchmark::DoNotOptimize(certify_copositivity(p, Rational(1)));
}
BENCHMARK(BM_Copositivity)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_SqrtModPower(benchmark::State& state) {
  const auto names = default_variable_names(3);
  const Polynomial p = parse_polynomial("1 + x1 - 2*x2*x3 + 3*x1^2*x3 + x2^4", names);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_mod_power(p, k));
}
BENCHMARK(BM_SqrtModPower)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
