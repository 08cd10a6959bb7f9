#include <gtest/gtest.h>

#include "jordan/cone.hpp"
#include "jordan/isotope.hpp"
#include "jordan/sampling.hpp"
#include "jordan/spectral.hpp"
#include "jordan/structure.hpp"
#include "jordan/verify.hpp"
#include "oracle.hpp"

using namespace jordan;

namespace {

class Sweep : public testing::TestWithParam<std::string> {
 protected:
  Algebra algebra() const { return Algebra::parse(GetParam()); }
};

double gap(const Element& a, const Element& b) { return (a - b).coord_norm() / std::max(1.0, b.coord_norm()); }

std::string label(const testing::TestParamInfo<std::string>& info) {
  std::string s = info.param;
  for (char& c : s) {
    if (c == ':' || c == '+') c = '_';
  }
  return s;
}

}  // namespace

TEST_P(Sweep, JordanIdentity) {
  const Algebra a = algebra();
  Sampler s(101);
  for (int t = 0; t < 25; ++t) {
    const Element x = s.element(a), y = s.element(a);
    const Element x2 = square(x);
    const Element lhs = jordan_product(jordan_product(x, y), x2);
    const Element rhs = jordan_product(x, jordan_product(y, x2));
    EXPECT_LT((lhs - rhs).coord_norm(), 1e-12 * (1 + lhs.coord_norm()));
  }
}

TEST_P(Sweep, FundamentalFormula) {
  const Algebra a = algebra();
  Sampler s(102);
  for (int t = 0; t < 10; ++t) {
    const Element x = s.element(a), y = s.element(a);
    const Eigen::MatrixXd lhs = oracle::U_matrix(a, U_op(x)(y).coords());
    const Eigen::MatrixXd rhs = (U_op(x) * U_op(y) * U_op(x)).matrix();
    EXPECT_LT(oracle::rel(lhs, rhs), 1e-11);
  }
}

TEST_P(Sweep, SpectralMappingAndReconstruction) {
  const Algebra a = algebra();
  Sampler s(103);
  for (int t = 0; t < 10; ++t) {
    const Element x = s.element(a);
    const auto ev = oracle::spectrum(a, x.coords());
    std::vector<double> sq;
    for (double l : ev) sq.push_back(l * l);
    EXPECT_LT(oracle::max_gap(eigenvalues(square(x)), sq), 1e-11 * (1 + jb_norm(x) * jb_norm(x)));
    EXPECT_LT(gap(spectral_decompose(x).reconstruct(), x), 1e-12);
  }
}

TEST_P(Sweep, StructureGroupClosedUnderProductAndInverse) {
  const Algebra a = algebra();
  Sampler s(104);
  for (int t = 0; t < 5; ++t) {
    const VOperator g = U_op(s.cone_element(a)) * central_symmetry_op(s.central_projection(a)) * s.automorphism(a);
    const VOperator h = U_op(s.cone_element(a)) * s.automorphism(a);
    EXPECT_LT(str_residual(g * h), 1e-9);
    EXPECT_LT(str_residual(g.inverse()), 1e-9);
  }
}

TEST_P(Sweep, DecompositionsRecompose) {
  const Algebra a = algebra();
  Sampler s(105);
  for (int t = 0; t < 5; ++t) {
    const VOperator g = U_op(s.cone_element(a)) * central_symmetry_op(s.central_projection(a)) * s.automorphism(a);
    const StrDecomposition d = str_decompose(make_str_element(g));
    EXPECT_LT(d.recomposition_residual, 1e-7);
    EXPECT_TRUE(in_cone(d.v));
    EXPECT_TRUE(is_central(d.p));
    EXPECT_TRUE(is_automorphism(d.k, 1e-7));
  }
}

TEST_P(Sweep, LieAlgebraSplits) {
  const Algebra a = algebra();
  Sampler s(106);
  for (int t = 0; t < 5; ++t) {
    const VOperator h = L_op(s.element(a)) + s.derivation(a);
    const LieSplit ls = lie_split(h);
    EXPECT_LT(derivation_residual(ls.d), 1e-9);
    EXPECT_LT(oracle::rel((L_op(ls.u) + ls.d).matrix(), h.matrix()), 1e-12);
  }
}

TEST_P(Sweep, ConeTransportPreservesCone) {
  const Algebra a = algebra();
  Sampler s(107);
  for (int t = 0; t < 5; ++t) {
    const VOperator g = transport(s.cone_element(a), s.cone_element(a));
    for (int i = 0; i < 5; ++i) EXPECT_TRUE(in_cone(g(s.cone_element(a))));
  }
}

TEST_P(Sweep, UPositiveIffOperatorSpectrumPositive) {
  const Algebra a = algebra();
  Sampler s(108);
  for (int t = 0; t < 10; ++t) {
    const Element x = s.element(a);
    if (!is_invertible(x)) continue;
    const auto sp = real_operator_spectrum(U_op(x));
    const double lo = *std::min_element(sp.begin(), sp.end());
    if (std::abs(lo) < 1e-6) continue;
    bool decomposed = true;
    try {
      u_positive_decompose(x);
    } catch (const JordanError& e) {
      EXPECT_EQ(e.code(), Errc::UxNotPositive);
      decomposed = false;
    }
    EXPECT_EQ(decomposed, lo > 0);
    EXPECT_EQ(isotope_isomorphic(x).isomorphic, lo > 0);
  }
}

TEST_P(Sweep, VerifySuitePasses) {
  const VerificationReport r = run_suite(algebra(), 7, 3);
  for (const auto& rec : r.records) {
    EXPECT_TRUE(rec.pass) << rec.check << " trial " << rec.trial << " residual " << rec.residual << " " << rec.error;
  }
}

INSTANTIATE_TEST_SUITE_P(Algebras, Sweep,
                         testing::Values("sym:1", "sym:2", "sym:4", "herm:1", "herm:2", "herm:3", "spin:1",
                                         "spin:2", "spin:3", "spin:7", "sym:2+sym:3", "sym:1+herm:2+spin:4"),
                         label);

TEST(Verify, ReportIsDeterministic) {
  const Algebra a = Algebra::parse("sym:2+spin:3");
  const VerificationReport r1 = run_suite(a, 42, 2);
  const VerificationReport r2 = run_suite(a, 42, 2);
  EXPECT_EQ(report_to_json(r1), report_to_json(r2));
  EXPECT_NE(report_to_json(r1), report_to_json(run_suite(a, 43, 2)));
  EXPECT_THROW(run_suite(a, 1, 0), JordanError);
}

TEST(Verify, HermSuiteIncludesHermChecks) {
  const auto sym = suite_checks(Algebra::sym_real(2));
  const auto herm = suite_checks(Algebra::herm_complex(2));
  EXPECT_GT(herm.size(), sym.size());
  EXPECT_NE(std::find(herm.begin(), herm.end(), "herm_lift"), herm.end());
  EXPECT_EQ(std::find(sym.begin(), sym.end(), "herm_lift"), sym.end());
}
