#include <benchmark/benchmark.h>

#include <cstdint>

#include "precint/factor.hpp"
#include "precint/integral_basis.hpp"
#include "precint/parse.hpp"
#include "precint/shift_space.hpp"
#include "precint/solutions.hpp"
#include "precint/valuation.hpp"
#include "precint/verify.hpp"

namespace {

using namespace precint;

const char* kExample = "(x+2)^2 + x*S^2 + (x+2)*S^3";

void BM_SolutionTable(benchmark::State& state) {
  const OreOperator l = normalize(parse_operator(kExample));
  const long n = state.range(0);
  for (auto _ : state) {
    SolutionBasis b(l, AlgebraicPoint::rational(Rational(0)), -2);
    benchmark::DoNotOptimize(b.fraction(2, n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolutionTable)->RangeMultiplier(2)->Range(8, 256)->Complexity();

// Reduced values pay one gcd per entry on top of the table.
void BM_SolutionValueReduced(benchmark::State& state) {
  const OreOperator l = normalize(parse_operator(kExample));
  for (auto _ : state) {
    SolutionBasis b(l, AlgebraicPoint::rational(Rational(0)), -2);
    benchmark::DoNotOptimize(b.value(2, state.range(0)));
  }
}
BENCHMARK(BM_SolutionValueReduced)->Arg(8)->Arg(16)->Arg(32);

void BM_SolutionTableAlgebraic(benchmark::State& state) {
  const OreOperator l = normalize(parse_operator("x^2 - 2 + x*S + S^2"));
  const AlgebraicPoint orbit = parse_point("root(x^2 - 2)");
  for (auto _ : state) {
    SolutionBasis b(l, orbit, 0);
    benchmark::DoNotOptimize(b.value(1, state.range(0)));
  }
}
BENCHMARK(BM_SolutionTableAlgebraic)->Arg(8)->Arg(16)->Arg(32);

void BM_LocalBasis(benchmark::State& state) {
  const OreOperator l = parse_operator(kExample);
  for (auto _ : state) {
    ShiftSpace space(l);
    benchmark::DoNotOptimize(local_integral_basis(space, BasisMatrix::standard(3), AlgebraicPoint::rational(Rational(0))));
  }
}
BENCHMARK(BM_LocalBasis);

void BM_GlobalBasis(benchmark::State& state) {
  const OreOperator l = parse_operator(kExample);
  ZSpec z;
  z.right_bounds["Z"] = 0;
  for (auto _ : state) benchmark::DoNotOptimize(global_integral_basis(l, z));
}
BENCHMARK(BM_GlobalBasis);

// Random operators without rational singularities: every singular orbit is
// algebraic. Orbits that need a right bound get the end of their singular range.
void BM_GlobalBasisRandom(benchmark::State& state) {
  RandomOperatorSpec spec{3, 2, 3, static_cast<std::uint64_t>(state.range(0))};
  spec.no_rational_roots = true;
  const OreOperator l = random_operator(spec);
  const OreOperator n = normalize(l);
  ZSpec z;
  for (const auto& orbit : singular_orbits(n)) z.right_bounds[orbit.orbit_key()] = OrbitAnalysis(n, orbit).right_end();
  for (auto _ : state) benchmark::DoNotOptimize(global_integral_basis(l, z));
}
BENCHMARK(BM_GlobalBasisRandom)->Arg(7)->Arg(11);

void BM_Certificate(benchmark::State& state) {
  const OreOperator l = parse_operator(kExample);
  const BasisMatrix b{{parse_element("1", 3), parse_element("(x-2)/x^2 + (1/x)*S", 3), parse_element("-2/x + S^2", 3)}, {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(certificate(l, b, AlgebraicPoint::rational(Rational(0)), static_cast<std::size_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_Certificate)->Arg(50)->Arg(200);

void BM_FactorSwinnertonDyer(benchmark::State& state) {
  const QPoly p = parse_rational_function("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576").num();
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorSwinnertonDyer);

void BM_FactorProduct(benchmark::State& state) {
  const QPoly p = parse_rational_function("(x^3 - x - 1)*(x^2 + 7)*(3*x - 2)^2*(x^4 + 4)").num();
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorProduct);

}  // namespace

BENCHMARK_MAIN();
