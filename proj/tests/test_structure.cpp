#include <gtest/gtest.h>

#include "jordan/cone.hpp"
#include "jordan/sampling.hpp"
#include "jordan/spectral.hpp"
#include "jordan/structure.hpp"
#include "oracle.hpp"

using namespace jordan;

namespace {

std::vector<Algebra> algebras() {
  return {Algebra::sym_real(1),  Algebra::sym_real(3),       Algebra::herm_complex(2),
          Algebra::spin_factor(2), Algebra::spin_factor(4), Algebra::parse("sym:2+sym:3"),
          Algebra::parse("sym:1+herm:2")};
}

Element diag2(double a, double b) { return Element(Algebra::sym_real(2), Eigen::Vector3d(a, b, 0.0)); }

Element sum_el(const Algebra& a, std::initializer_list<double> c) {
  return Element(a, Eigen::Map<const Eigen::VectorXd>(c.begin(), static_cast<Eigen::Index>(c.size())));
}

double gap(const Element& a, const Element& b) { return (a - b).coord_norm() / std::max(1.0, b.coord_norm()); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const JordanError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::Inconsistent;
}

}  // namespace

TEST(StrResidual, MembersAndNonMembers) {
  Sampler s(1);
  for (const auto& a : algebras()) {
    EXPECT_LT(str_residual(VOperator::identity(a)), 1e-14) << a.name();
    EXPECT_LT(str_residual(U_op(s.cone_element(a))), 1e-10) << a.name();
    EXPECT_LT(str_residual(s.automorphism(a)), 1e-10) << a.name();
    EXPECT_LT(str_residual(-3.0 * VOperator::identity(a)), 1e-14) << a.name();
  }
  EXPECT_GT(str_residual(L_op(diag2(1, 2))), 0.01);
  EXPECT_THROW(str_residual(VOperator::zero(Algebra::sym_real(2))), JordanError);
}

TEST(StrResidual, ScaleInvariant) {
  Sampler s(2);
  const Algebra a = Algebra::sym_real(3);
  const VOperator g = L_op(s.cone_element(a));
  EXPECT_NEAR(str_residual(g), str_residual(1e4 * g), 1e-10);
}

TEST(StrElement, AdjointAndRejection) {
  Sampler s(3);
  const Algebra a = Algebra::herm_complex(2);
  const Element x = s.cone_element(a);
  const StrElement g = make_str_element(U_op(x));
  // U_x* = U_x^{-1} U_{x^2} = U_x
  EXPECT_LT(oracle::rel(g.adj.matrix(), U_op(x).matrix()), 1e-9);
  EXPECT_EQ(code_of([] { make_str_element(L_op(diag2(1, 2))); }), Errc::NotInStr);
}

TEST(Automorphisms, Detection) {
  Sampler s(4);
  for (const auto& a : algebras()) {
    const VOperator k = s.automorphism(a);
    EXPECT_TRUE(is_automorphism(k)) << a.name();
    EXPECT_LT(multiplicativity_residual(k), 1e-10) << a.name();
    if (a.dim() > 1) EXPECT_FALSE(is_automorphism(U_op(s.cone_element(a)))) << a.name();
    EXPECT_LT(derivation_residual(s.derivation(a)), 1e-10) << a.name();
  }
  EXPECT_GT(derivation_residual(L_op(diag2(1, 2))), 0.01);
}

TEST(Pierce, RanksAndIdentities) {
  const Algebra a = Algebra::sym_real(3);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(6);
  c[0] = 1;
  const Element p(a, c);
  const PierceDecomposition pd = pierce_decompose(p);
  EXPECT_EQ(pd.rank1, 1);
  EXPECT_EQ(pd.rank_half, 2);
  EXPECT_EQ(pd.rank0, 3);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(6, 6);
  EXPECT_LT(oracle::rel((pd.p1 + pd.p0 + pd.phalf).matrix(), id), 1e-14);

  const Element eps = 2.0 * p - unit(a);
  const Eigen::MatrixXd lp = L_op(p).matrix();
  EXPECT_LT(oracle::rel(U_op(eps).matrix(), 8 * lp * lp - 8 * lp + id), 1e-14);
  EXPECT_LT((L_op(eps) * pd.phalf).matrix().norm(), 1e-14);
  EXPECT_LT((L_op(p) * pd.phalf - 0.5 * pd.phalf).matrix().norm(), 1e-14);
  EXPECT_EQ(code_of([&] { pierce_decompose(diag2(1, 0.5)); }), Errc::NotIdempotent);
}

TEST(Pierce, SpinRankOneIdempotent) {
  const Algebra a = Algebra::spin_factor(5);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(5);
  c[0] = 0.5;
  c[1] = 0.5;
  const PierceDecomposition pd = pierce_decompose(Element(a, c));
  EXPECT_EQ(pd.rank1, 1);
  EXPECT_EQ(pd.rank0, 1);
  EXPECT_EQ(pd.rank_half, 3);
}

TEST(Central, ProjectionCounts) {
  EXPECT_EQ(central_projections(Algebra::sym_real(3)).size(), 2u);
  EXPECT_EQ(central_projections(Algebra::spin_factor(1)).size(), 2u);
  EXPECT_EQ(central_projections(Algebra::spin_factor(2)).size(), 4u);
  EXPECT_EQ(central_projections(Algebra::spin_factor(3)).size(), 2u);
  EXPECT_EQ(central_projections(Algebra::parse("sym:2+sym:3")).size(), 4u);
  EXPECT_EQ(central_projections(Algebra::parse("sym:2+sym:2")).size(), 4u);
  EXPECT_EQ(central_projections(Algebra::parse("sym:1+sym:1+herm:2")).size(), 8u);
  for (const auto& a : algebras()) {
    const auto ps = central_projections(a);
    EXPECT_LT(ps.front().coord_norm(), 1e-15) << a.name();
    EXPECT_LT((ps.back() - unit(a)).coord_norm(), 1e-14) << a.name();
    for (const auto& p : ps) EXPECT_TRUE(is_central(p)) << a.name();
  }
}

TEST(Central, NoncentralIdempotent) {
  EXPECT_FALSE(is_central(diag2(1, 0)));
  EXPECT_FALSE(is_central(diag2(1, 0.5)));
}

TEST(Central, SymmetriesComposeBySymmetricDifference) {
  const Algebra a = Algebra::parse("sym:2+sym:3+spin:2");
  const auto ps = central_projections(a);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(a.dim(), a.dim());
  for (const auto& p : ps) {
    const VOperator sp = central_symmetry_op(p);
    EXPECT_LT(oracle::rel((sp * sp).matrix(), id), 1e-14);
    EXPECT_EQ(is_automorphism(sp), (p - unit(a)).coord_norm() < 1e-12);
    EXPECT_LT(str_residual(sp), 1e-12);
    for (const auto& q : ps) {
      // eps_p o eps_q = 1 - 2(p + q - 2pq) = -eps_r with r the symmetric difference
      const Element r = unit(a) - (p + q - 2.0 * jordan_product(p, q));
      EXPECT_LT(oracle::rel((sp * central_symmetry_op(q)).matrix(), central_symmetry_op(r).matrix()), 1e-14);
    }
  }
}

TEST(UPositive, Examples) {
  EXPECT_EQ(code_of([] { u_positive_decompose(diag2(1, -1)); }), Errc::UxNotPositive);
  EXPECT_EQ(code_of([] { u_positive_decompose(diag2(1, 0)); }), Errc::NotInvertible);

  const Algebra a = Algebra::parse("sym:1+sym:1");
  const UPositiveDecomposition d = u_positive_decompose(sum_el(a, {2, -3}));
  EXPECT_LT(gap(d.v, sum_el(a, {2, 3})), 1e-14);
  EXPECT_LT(gap(d.eps, sum_el(a, {1, -1})), 1e-14);

  const UPositiveDecomposition n = u_positive_decompose(diag2(-1, -2));
  EXPECT_LT(gap(n.v, diag2(1, 2)), 1e-14);
  EXPECT_LT(gap(n.eps, diag2(-1, -1)), 1e-14);
}

TEST(UPositive, WitnessIsMostNegativeEigenvalue) {
  try {
    u_positive_decompose(diag2(2, -3));
    FAIL();
  } catch (const JordanError& e) {
    ASSERT_TRUE(e.value().has_value());
    EXPECT_NEAR(*e.value(), -6.0, 1e-12);
  }
}

TEST(UPositive, RecomposesOnRandomSums) {
  Sampler s(5);
  const Algebra a = Algebra::parse("sym:2+herm:2+spin:3");
  for (int t = 0; t < 10; ++t) {
    const Element x = jordan_product(s.cone_element(a), 2.0 * s.central_projection(a) - unit(a));
    const UPositiveDecomposition d = u_positive_decompose(x);
    EXPECT_TRUE(in_cone(d.v));
    EXPECT_TRUE(is_central((d.eps + unit(a)) * 0.5));
    EXPECT_LT(gap(jordan_product(d.v, d.eps), x), 1e-12);
  }
}

TEST(USpectrum, SplitOfDiagonalSign) {
  const USpectrumSplit sp = u_spectrum_split(diag2(1, -1));
  EXPECT_EQ(sp.plus, std::vector<double>{1.0});
  EXPECT_EQ(sp.minus, std::vector<double>{1.0});
  ASSERT_EQ(sp.zero.size(), 1u);
  EXPECT_NEAR(sp.zero[0], -1.0, 1e-14);
}

TEST(USpectrum, SplitCoversOperatorSpectrum) {
  Sampler s(6);
  for (const auto& a : algebras()) {
    const Element x = s.element(a);
    const USpectrumSplit sp = u_spectrum_split(x);
    std::vector<double> all = sp.plus;
    all.insert(all.end(), sp.minus.begin(), sp.minus.end());
    all.insert(all.end(), sp.zero.begin(), sp.zero.end());
    EXPECT_LT(oracle::max_gap(all, real_operator_spectrum(U_op(x))), 1e-9 * (1 + jb_norm(x) * jb_norm(x)))
        << a.name();
    for (double v : sp.plus) EXPECT_GT(v, 0);
    for (double v : sp.minus) EXPECT_GT(v, 0);
    for (double v : sp.zero) EXPECT_LT(v, 0);
  }
}

TEST(GoDecompose, RecomposesAndFactorsAreTyped) {
  Sampler s(7);
  for (const auto& a : algebras()) {
    const Element y0 = s.cone_element(a);
    const VOperator k0 = s.automorphism(a);
    const GODecomposition d = go_decompose(make_str_element(U_op(y0) * k0));
    EXPECT_LT(gap(d.y, y0), 1e-9) << a.name();
    EXPECT_TRUE(is_automorphism(d.k, 1e-7)) << a.name();
    EXPECT_LT(oracle::rel(d.k.matrix(), k0.matrix()), 1e-8) << a.name();
  }
}

TEST(GoDecompose, RejectsNegativeUnitImage) {
  const Algebra a = Algebra::sym_real(2);
  EXPECT_THROW(go_decompose(make_str_element(-VOperator::identity(a))), JordanError);
}

TEST(StrDecompose, RecoversFactors) {
  Sampler s(8);
  for (const auto& a : algebras()) {
    for (int t = 0; t < 5; ++t) {
      const Element v = s.cone_element(a);
      const Element p = s.central_projection(a);
      const VOperator k = s.automorphism(a);
      const VOperator g = U_op(v) * central_symmetry_op(p) * k;
      const StrDecomposition d = str_decompose(make_str_element(g));
      EXPECT_LT(d.recomposition_residual, 1e-7) << a.name();
      EXPECT_LT(gap(d.v, v), 1e-8) << a.name();
      EXPECT_LT(gap(d.p, p), 1e-8) << a.name();
      EXPECT_TRUE(is_automorphism(d.k, 1e-7)) << a.name();
    }
  }
}

TEST(StrDecompose, NegatedIdentityAndInvolution) {
  const Algebra a = Algebra::sym_real(3);
  const StrDecomposition d = str_decompose(make_str_element(-VOperator::identity(a)));
  EXPECT_LT(gap(d.v, unit(a)), 1e-14);
  EXPECT_LT(d.p.coord_norm(), 1e-14);
  EXPECT_LT(oracle::rel(d.k.matrix(), Eigen::MatrixXd::Identity(6, 6)), 1e-14);
  EXPECT_TRUE(d.involutive());

  Sampler s(9);
  const StrDecomposition u = str_decompose(make_str_element(U_op(s.cone_element(a) + unit(a))));
  EXPECT_FALSE(u.involutive());
}

TEST(StrDecompose, InvolutiveIffStarIsInverse) {
  Sampler s(10);
  const Algebra a = Algebra::parse("sym:2+spin:3");
  for (int t = 0; t < 6; ++t) {
    const VOperator k = s.automorphism(a);
    const Element p = s.central_projection(a);
    const VOperator g = central_symmetry_op(p) * k;
    const StrElement e = make_str_element(g);
    EXPECT_LT(oracle::rel(e.adj.matrix(), g.inverse().matrix()), 1e-9);
    EXPECT_TRUE(str_decompose(e).involutive());
  }
}

TEST(LieAlgebra, SplitIntoMultiplicationAndDerivation) {
  Sampler s(11);
  for (const auto& a : algebras()) {
    const Element u = s.element(a);
    const VOperator d = s.derivation(a);
    const VOperator h = L_op(u) + d;
    EXPECT_LT(str_lie_residual(h), 1e-10) << a.name();
    const LieSplit ls = lie_split(h);
    EXPECT_LT(gap(ls.u, u), 1e-10) << a.name();
    EXPECT_LT(oracle::rel(ls.d.matrix(), d.matrix()), 1e-9) << a.name();
  }
}

TEST(LieAlgebra, RejectsQuadraticOperator) {
  const Algebra a = Algebra::sym_real(2);
  const VOperator h = U_op(diag2(1, 2));
  EXPECT_GT(str_lie_residual(h), 0.01);
  EXPECT_EQ(code_of([&] { lie_split(h); }), Errc::NotInLieAlgebra);
}

TEST(LieAlgebra, Dimensions) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(str_dimension(Algebra::sym_real(n)), n * n) << n;
  // T -> l_T + r_{T^dagger} kills i R 1.
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(str_dimension(Algebra::herm_complex(n)), 2 * n * n - 1) << n;
  for (int d = 3; d <= 6; ++d) EXPECT_EQ(str_dimension(Algebra::spin_factor(d)), 1 + d * (d - 1) / 2) << d;
  EXPECT_EQ(str_dimension(Algebra::spin_factor(2)), 2);
  EXPECT_EQ(str_dimension(Algebra::parse("sym:2+sym:3")), 4 + 9);
}
