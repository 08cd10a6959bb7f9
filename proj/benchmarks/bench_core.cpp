#include <benchmark/benchmark.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "jordan/herm.hpp"
#include "jordan/sampling.hpp"
#include "jordan/spectral.hpp"
#include "jordan/structure.hpp"

using namespace jordan;

namespace {

Algebra sym(const benchmark::State& st) { return Algebra::sym_real(static_cast<int>(st.range(0))); }
Algebra herm(const benchmark::State& st) { return Algebra::herm_complex(static_cast<int>(st.range(0))); }

void BM_QuadraticRepresentation(benchmark::State& st) {
  const Algebra a = sym(st);
  Sampler s(1);
  const Element x = s.element(a);
  for (auto _ : st) benchmark::DoNotOptimize(U_op(x));
}
BENCHMARK(BM_QuadraticRepresentation)->DenseRange(2, 8, 2);

void BM_SpectralDecompose(benchmark::State& st) {
  const Algebra a = herm(st);
  Sampler s(2);
  const Element x = s.element(a);
  for (auto _ : st) benchmark::DoNotOptimize(spectral_decompose(x));
}
BENCHMARK(BM_SpectralDecompose)->DenseRange(2, 8, 2);

void BM_StrResidual(benchmark::State& st) {
  const Algebra a = sym(st);
  Sampler s(3);
  const VOperator g = U_op(s.cone_element(a)) * s.automorphism(a);
  for (auto _ : st) benchmark::DoNotOptimize(str_residual(g));
}
BENCHMARK(BM_StrResidual)->DenseRange(2, 6, 2);

void BM_StrDecompose(benchmark::State& st) {
  const Algebra a = sym(st);
  Sampler s(4);
  const VOperator g = U_op(s.cone_element(a)) * central_symmetry_op(s.central_projection(a)) * s.automorphism(a);
  const StrElement e = make_str_element(g);
  for (auto _ : st) benchmark::DoNotOptimize(str_decompose(e));
}
BENCHMARK(BM_StrDecompose)->DenseRange(2, 6, 2);

void BM_LiftAutomorphism(benchmark::State& st) {
  const Algebra a = herm(st);
  const int n = a.order();
  Sampler s(5);
  Eigen::MatrixXcd z = s.skew_hermitian(n);
  while ((congruence_op(a, Eigen::MatrixXcd(z).exp()) - VOperator::identity(a)).operator_norm() >= 0.9) z *= 0.5;
  const VOperator k = congruence_op(a, Eigen::MatrixXcd(z).exp());
  for (auto _ : st) benchmark::DoNotOptimize(lift_automorphism(k));
}
BENCHMARK(BM_LiftAutomorphism)->DenseRange(2, 5, 1);

}  // namespace

BENCHMARK_MAIN();
