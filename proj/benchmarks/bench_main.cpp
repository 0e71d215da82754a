#include <benchmark/benchmark.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "proplen/ball.hpp"
#include "proplen/construct.hpp"
#include "proplen/eig.hpp"
#include "proplen/group.hpp"
#include "proplen/rng.hpp"

using namespace proplen;

namespace {

std::shared_ptr<const BallTable> z1_table(int radius) {
  static std::shared_ptr<const BallTable> table = std::make_shared<BallTable>(
      enumerate_balls(Group(GroupSpec::parse("free_abelian(1)")), radius));
  return table;
}

std::shared_ptr<const BallTable> heis_table(int radius) {
  static std::shared_ptr<const BallTable> table = std::make_shared<BallTable>(
      enumerate_balls(Group(GroupSpec::parse("heisenberg3")), radius));
  return table;
}

}  // namespace

static void BM_ball_enumeration(benchmark::State& state) {
  Group h(GroupSpec::parse("heisenberg3"));
  int radius = static_cast<int>(state.range(0));
  std::uint64_t elements = 0;
  for (auto _ : state) {
    BallTable t = enumerate_balls(h, radius, static_cast<int>(state.range(1)));
    elements = t.mu_at(radius);
    benchmark::DoNotOptimize(t.content_hash());
  }
  state.counters["elements"] = static_cast<double>(elements);
}
BENCHMARK(BM_ball_enumeration)
    ->Args({8, 1})
    ->Args({12, 1})
    ->Args({12, 4})
    ->Args({16, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_omega(benchmark::State& state) {
  Group g(GroupSpec::parse("free_abelian(1)"));
  auto table = z1_table(80);
  LengthContext ctx(g, table, make_params(Rational(9, 10), Rational(6, 5), 3), 12);
  std::int64_t k = state.range(0);
  std::int64_t s = 0;
  for (auto _ : state) {
    // Enumeration path: the memoized path collapses to a lookup.
    benchmark::DoNotOptimize(ctx.omega_by_enumeration(k, {s}));
    s = (s + 1) % (2 * k);
  }
}
BENCHMARK(BM_omega)->Arg(4)->Arg(16)->Arg(32);

static void BM_ell(benchmark::State& state) {
  Group g(GroupSpec::parse("free_abelian(1)"));
  auto table = z1_table(80);
  LengthContext ctx(g, table, make_params(Rational(17, 20), Rational(29, 20), 8), 12);
  std::int64_t s = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.ell({s}).value);
    s = s % 60 + 1;
  }
}
BENCHMARK(BM_ell);

static void BM_jacobi(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  // PSD input A B B^T with B seeded, symmetric by construction.
  SplitMix64 rng(7);
  std::vector<double> b(static_cast<std::size_t>(n) * n);
  for (double& v : b) v = static_cast<double>(rng.range(-9, 9));
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double sum = 0;
      for (int t = 0; t < n; ++t)
        sum += b[static_cast<std::size_t>(i) * n + t] * b[static_cast<std::size_t>(j) * n + t];
      a[static_cast<std::size_t>(i) * n + j] = sum;
    }
  for (auto _ : state) {
    std::vector<double> copy = a;
    benchmark::DoNotOptimize(min_eig_sym(std::move(copy), n));
  }
}
BENCHMARK(BM_jacobi)->Arg(8)->Arg(32)->Arg(96);

BENCHMARK_MAIN();
