#include <benchmark/benchmark.h>

#include "arboreal/analytic.hpp"
#include "arboreal/catalog.hpp"
#include "arboreal/padic.hpp"
#include "arboreal/param.hpp"
#include "arboreal/point_search.hpp"
#include "arboreal/weierstrass.hpp"

using namespace arboreal;

static void BM_FactorSemiprime(benchmark::State& state) {
  const Integer n = Integer("1000000007") * Integer("998244353");
  for (auto _ : state) benchmark::DoNotOptimize(arith::factor(n));
}
BENCHMARK(BM_FactorSemiprime);

static void BM_FactorOrbitValue(benchmark::State& state) {
  // f^3(0) at c = 9973 has 14 digits.
  const dynamics::QuadMap m{0, 9973};
  const Integer v = m.iterate(0, 3).get_num();
  for (auto _ : state) benchmark::DoNotOptimize(arith::factor(v));
}
BENCHMARK(BM_FactorOrbitValue);

static void BM_Classify(benchmark::State& state) {
  const arith::FactorCache cache;
  long c = 1;
  for (auto _ : state) benchmark::DoNotOptimize(param::classify(0, Rational(c++ % 10000), 3, cache));
}
BENCHMARK(BM_Classify);

static void BM_ScanIntegers(benchmark::State& state) {
  const long half = state.range(0);
  for (auto _ : state) {
    const arith::FactorCache cache;
    benchmark::DoNotOptimize(param::scan_integers(0, -half, half, 3, 1, cache));
  }
  state.SetItemsProcessed(state.iterations() * (2 * half + 1));
}
BENCHMARK(BM_ScanIntegers)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_PointSearch(benchmark::State& state) {
  const auto m = curves::named_curve("C1");
  for (auto _ : state) benchmark::DoNotOptimize(curves::rational_point_search(m, state.range(0)));
}
BENCHMARK(BM_PointSearch)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_IntegralPoints(benchmark::State& state) {
  const auto W = curves::named_curve("W").weierstrass();
  for (auto _ : state)
    benchmark::DoNotOptimize(curves::integral_points_via_generator(W, curves::CurvePoint::affine(1, 1), 40));
}
BENCHMARK(BM_IntegralPoints)->Unit(benchmark::kMillisecond);

static void BM_EllipticLog(benchmark::State& state) {
  const auto ctx = analytic::make_context(curves::named_curve("W").weierstrass(), static_cast<int>(state.range(0)));
  const auto P = curves::CurvePoint::affine(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(analytic::elliptic_log(ctx, P));
}
BENCHMARK(BM_EllipticLog)->Arg(30)->Arg(80)->Arg(180);

static void BM_PadicExpansion(benchmark::State& state) {
  using namespace padic;
  const auto G = reference_curve();
  const curves::GroupPoint<FieldElement> P0 = curves::AffinePoint<FieldElement>{FieldElement(1), FieldElement(1)};
  const auto Q = from_monic(G, curves::group_mul(monic_model(G), 3, to_monic(G, P0)));
  const auto zQ = z_of_point(Q, 3, 16);
  const auto g = to_ring(G, 3, 16);
  for (auto _ : state) benchmark::DoNotOptimize(x_inverse_of_multiple(zQ, g, 4));
}
BENCHMARK(BM_PadicExpansion)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
