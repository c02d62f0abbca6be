#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "relrep/fock.hpp"
#include "relrep/intertwiner.hpp"
#include "relrep/lorentz_rep.hpp"
#include "relrep/minkowski.hpp"
#include "relrep/su2.hpp"

using namespace relrep;

namespace {

Matrix2 sample_unimodular() {
  Matrix2 m;
  m << Complex(1.2, 0.3), Complex(0.1, -0.4), Complex(-0.2, 0.1), Complex(0.0, 0.0);
  m(1, 1) = (Complex(1.0, 0.0) + m(0, 1) * m(1, 0)) / m(0, 0);
  return m;
}

Matrix2 sample_su2() {
  const double phi = 1.1;
  const double n[3] = {0.6, 0.48, 0.64};
  const double c = std::cos(phi / 2), s = std::sin(phi / 2);
  Matrix2 u;
  u << Complex(c, -s * n[2]), Complex(-s * n[1], -s * n[0]),
      Complex(s * n[1], -s * n[0]), Complex(c, s * n[2]);
  return u;
}

void bm_wigner_d_spin2(benchmark::State& state) {
  const Matrix2 u = sample_su2();
  for (auto _ : state) benchmark::DoNotOptimize(wigner_D(HalfInt(2), u));
}
BENCHMARK(bm_wigner_d_spin2);

void bm_covering(benchmark::State& state) {
  const Matrix2 a = sample_unimodular();
  for (auto _ : state) benchmark::DoNotOptimize(covering(a));
}
BENCHMARK(bm_covering);

void bm_cg_table(benchmark::State& state) {
  const HalfInt two(2), three_half = HalfInt::from_twice(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(cg_table(two, three_half, HalfInt::from_twice(1)));
}
BENCHMARK(bm_cg_table);

void bm_exp_rep_1_1(benchmark::State& state) {
  const GeneratorSet gens = generators_AB({HalfInt(1), HalfInt(1)});
  const Matrix2 a = sample_unimodular();
  for (auto _ : state) benchmark::DoNotOptimize(exp_rep(gens, a));
}
BENCHMARK(bm_exp_rep_1_1);

void bm_solve_u_zero_bispinor(benchmark::State& state) {
  const RepSum rep = parse_rep_sum("(1/2,0)+(0,1/2)");
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_u_zero(HalfInt::from_twice(1), rep));
}
BENCHMARK(bm_solve_u_zero_bispinor);

void bm_standard_boost_massive(benchmark::State& state) {
  const FourVector p{std::sqrt(30.0), 2, 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(standard_boost_massive(p, 1.0));
}
BENCHMARK(bm_standard_boost_massive);

void bm_normal_order_word(benchmark::State& state) {
  const SpeciesDescriptor species{"b", 1.0, HalfInt(0), Statistics::Bose};
  const OperatorSum word = parse_operator_expression(
      "a(q1)*a(q2)*ad(q3)*ad(q1)*a(q3)*ad(q2)", species);
  const OperatorSum again = parse_operator_expression("ad(q2)*a(q1)", species);
  for (auto _ : state) benchmark::DoNotOptimize(word * again);
}
BENCHMARK(bm_normal_order_word);

}  // namespace

BENCHMARK_MAIN();
