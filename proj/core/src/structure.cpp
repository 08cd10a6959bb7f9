#include "jordan/structure.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"
#include "jordan/cone.hpp"
#include "jordan/sampling.hpp"
#include "jordan/spectral.hpp"

namespace jordan {

namespace {

// Factors produced by a decomposition inherit the conditioning of U_v; they
// are re-verified at this level rather than at the input tolerance.
constexpr double kDerivedFactorTol = 1e-7;

double relative_residual3(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                          const Eigen::MatrixXd& c, double bound) {
  const double denom = std::max({a.norm(), b.norm(), c.norm(), bound});
  if (denom == 0.0) return 0.0;
  return (a - b + c).norm() / denom;
}

// Basis vectors followed by 2*dim random elements.
std::vector<Element> probe_elements(const Algebra& a, std::uint64_t seed) {
  std::vector<Element> xs;
  xs.reserve(3 * a.dim());
  for (int i = 0; i < a.dim(); ++i) xs.push_back(basis_element(a, i));
  Sampler sampler(seed);
  for (int i = 0; i < 2 * a.dim(); ++i) xs.push_back(sampler.element(a));
  return xs;
}

Eigen::MatrixXd range_basis(const VOperator& projector) {
  const Eigen::MatrixXd sym = 0.5 * (projector.matrix() + projector.matrix().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  std::vector<int> keep;
  for (int i = 0; i < sym.rows(); ++i) {
    if (es.eigenvalues()[i] > 0.5) keep.push_back(i);
  }
  Eigen::MatrixXd q(sym.rows(), static_cast<Eigen::Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) q.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
  return q;
}

std::vector<double> restricted_spectrum(const VOperator& t, const VOperator& projector) {
  const Eigen::MatrixXd q = range_basis(projector);
  std::vector<double> out;
  if (q.cols() == 0) return out;
  const Eigen::MatrixXd r = q.transpose() * t.matrix() * q;
  Eigen::EigenSolver<Eigen::MatrixXd> es(r, false);
  for (int i = 0; i < r.rows(); ++i) out.push_back(es.eigenvalues()[i].real());
  std::sort(out.begin(), out.end());
  return out;
}

int rounded_trace(const VOperator& p) {
  return static_cast<int>(std::lround(p.matrix().trace()));
}

}  // namespace

// ---------------------------------------------------------------------------
// Membership

double str_residual(const VOperator& g, std::uint64_t seed) {
  const Algebra& a = g.algebra();
  const VOperator g_inv = g.inverse();
  const Element one = unit(a);
  // g* = g^{-1} U_{g1} and (g^{-1})* = g U_{g^{-1}1}
  const Eigen::MatrixXd adj = g_inv.matrix() * U_op(g(one)).matrix();
  const Eigen::MatrixXd inv_adj = g.matrix() * U_op(g_inv(one)).matrix();
  // Each side is bounded by ||g|| ||U_x|| ||g*||; that bound is the scale.
  const double scale = g.norm() * adj.norm();
  const double scale_inv = g_inv.norm() * inv_adj.norm();

  double worst = 0.0;
  for (const auto& x : probe_elements(a, seed)) {
    const Eigen::MatrixXd ux = U_op(x).matrix();
    const double nx = ux.norm();
    if (nx == 0.0) continue;
    const Eigen::MatrixXd lhs = U_op(g(x)).matrix();
    const Eigen::MatrixXd rhs = g.matrix() * ux * adj;
    worst = std::max(worst, (lhs - rhs).norm() / std::max(lhs.norm(), scale * nx));
    const Eigen::MatrixXd lhs_inv = U_op(g_inv(x)).matrix();
    const Eigen::MatrixXd rhs_inv = g_inv.matrix() * ux * inv_adj;
    worst = std::max(worst, (lhs_inv - rhs_inv).norm() / std::max(lhs_inv.norm(), scale_inv * nx));
  }
  return worst;
}

StrElement make_str_element(const VOperator& g, double tol) {
  double res = 0.0;
  try {
    res = str_residual(g);
  } catch (const JordanError& e) {
    throw JordanError(Errc::NotInStr, std::string("operator is singular: ") + e.what());
  }
  if (res > tol) throw JordanError(Errc::NotInStr, "structure-group residual too large", res);
  const Element g1 = g(unit(g.algebra()));
  if (!is_invertible(g1)) throw JordanError(Errc::NotInStr, "g(1) is not invertible");
  VOperator adj = g.inverse() * U_op(g1);
  return StrElement{g, g1, std::move(adj), res};
}

VOperator str_adjoint(const StrElement& g) { return g.adj; }

bool is_automorphism(const VOperator& g, double tol) {
  const Element one = unit(g.algebra());
  const Element g1 = g(one);
  if ((g1 - one).coord_norm() > tol * detail::scale_of(one.coord_norm())) return false;
  try {
    return str_residual(g) <= tol;
  } catch (const JordanError&) {
    return false;
  }
}

double multiplicativity_residual(const VOperator& g, int pairs, std::uint64_t seed) {
  Sampler sampler(seed);
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const Element x = sampler.element(g.algebra());
    const Element y = sampler.element(g.algebra());
    worst = std::max(worst, detail::relative_gap(g(jordan_product(x, y)).coords(),
                                                 jordan_product(g(x), g(y)).coords()));
  }
  return worst;
}

double derivation_residual(const VOperator& d, int pairs, std::uint64_t seed) {
  Sampler sampler(seed);
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const Element x = sampler.element(d.algebra());
    const Element y = sampler.element(d.algebra());
    const Element lhs = d(jordan_product(x, y));
    const Element a = jordan_product(d(x), y);
    const Element b = jordan_product(x, d(y));
    const double denom = std::max({lhs.coord_norm(), a.coord_norm(), b.coord_norm()});
    if (denom == 0.0) continue;
    worst = std::max(worst, (lhs - a - b).coord_norm() / denom);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Pierce decomposition and central projections

PierceDecomposition pierce_decompose(const Element& p, double tol) {
  const double defect = (square(p) - p).coord_norm();
  if (defect > tol * detail::scale_of(p.coord_norm())) {
    throw JordanError(Errc::NotIdempotent, "p^2 != p", defect);
  }
  const Element q = unit(p.algebra()) - p;
  PierceDecomposition out{U_op(p), U_op(q), 2.0 * U_bilinear(p, q)};
  out.rank1 = rounded_trace(out.p1);
  out.rank0 = rounded_trace(out.p0);
  out.rank_half = rounded_trace(out.phalf);
  return out;
}

bool is_central(const Element& p, double tol) {
  const Algebra& a = p.algebra();
  const double scale = detail::scale_of(p.coord_norm());
  if ((square(p) - p).coord_norm() > tol * scale) return false;
  const Eigen::MatrixXd lp = L_op(p).matrix();
  for (int i = 0; i < a.dim(); ++i) {
    const Eigen::MatrixXd le = L_op(basis_element(a, i)).matrix();
    if ((lp * le - le * lp).norm() > tol * scale) return false;
  }
  return true;
}

std::vector<Element> central_atoms(const Algebra& a) {
  std::vector<Element> atoms;
  const auto blocks = a.blocks();
  const auto offsets = a.offsets();
  for (size_t b = 0; b < blocks.size(); ++b) {
    const Element block_unit = unit(blocks[b]);
    if (blocks[b].kind() == AlgebraKind::SpinFactor && blocks[b].order() == 2) {
      // R + R: (1/2, +-1/2) are central.
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(a.dim());
        c[offsets[b]] = 0.5;
        c[offsets[b] + 1] = 0.5 * sign;
        atoms.emplace_back(a, std::move(c));
      }
      continue;
    }
    Eigen::VectorXd c = Eigen::VectorXd::Zero(a.dim());
    c.segment(offsets[b], blocks[b].dim()) = block_unit.coords();
    atoms.emplace_back(a, std::move(c));
  }
  return atoms;
}

std::vector<Element> central_projections(const Algebra& a) {
  const auto atoms = central_atoms(a);
  const size_t m = atoms.size();
  std::vector<Element> out;
  out.reserve(size_t{1} << m);
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    Element p = zero(a);
    for (size_t i = 0; i < m; ++i) {
      if (mask & (size_t{1} << i)) p += atoms[i];
    }
    out.push_back(std::move(p));
  }
  return out;
}

VOperator central_symmetry_op(const Element& p) {
  return L_op(2.0 * p - unit(p.algebra()));
}

// ---------------------------------------------------------------------------
// Positive U_x

UPositiveDecomposition u_positive_decompose(const Element& x, double tol) {
  if (!is_invertible(x)) throw JordanError(Errc::NotInvertible, "x is not invertible");
  const Element p_plus = apply_function(x, ScalarFunction::ChiPlus);

  double min_u = std::numeric_limits<double>::infinity();
  for (const auto& z : operator_spectrum(U_op(x))) min_u = std::min(min_u, z.real());

  if (!is_central(p_plus, tol)) {
    if (min_u > 0.0) {
      throw JordanError(Errc::CentralityViolation,
                        "sign projection is not central although sigma(U_x) > 0", min_u);
    }
    throw JordanError(Errc::UxNotPositive, "U_x has a negative eigenvalue", min_u);
  }
  if (!(min_u > 0.0)) {
    throw JordanError(Errc::UxNotPositive, "U_x has a non-positive eigenvalue", min_u);
  }
  return {abs(x), 2.0 * p_plus - unit(x.algebra())};
}

USpectrumSplit u_spectrum_split(const Element& x) {
  if (!is_invertible(x)) throw JordanError(Errc::NotInvertible, "x is not invertible");
  const Element p_plus = apply_function(x, ScalarFunction::ChiPlus);
  const Element p_minus = apply_function(x, ScalarFunction::ChiMinus);
  const VOperator ux = U_op(x);
  USpectrumSplit out;
  out.plus = restricted_spectrum(ux, U_op(p_plus));
  out.minus = restricted_spectrum(ux, U_op(p_minus));
  out.zero = restricted_spectrum(ux, 2.0 * U_bilinear(p_plus, p_minus));
  return out;
}

// ---------------------------------------------------------------------------
// Factorizations

GODecomposition go_decompose(const StrElement& g, double tol) {
  if (!in_cone(g.g1, tol)) throw JordanError(Errc::NotConePreserving, "g(1) is not positive");
  Element y = sqrt(g.g1);
  VOperator k = U_op(inverse(y)) * g.g;
  if (!is_automorphism(k, std::max(tol, kDerivedFactorTol))) {
    throw JordanError(Errc::NotConePreserving, "U_y^{-1} g is not an automorphism");
  }
  return {std::move(y), std::move(k)};
}

bool StrDecomposition::involutive(double tol) const {
  const Element one = unit(v.algebra());
  return (v - one).coord_norm() <= tol * detail::scale_of(one.coord_norm());
}

VOperator StrDecomposition::recompose() const {
  return U_op(v) * central_symmetry_op(p) * k;
}

StrDecomposition str_decompose(const StrElement& g, double tol) {
  const Algebra& a = g.g.algebra();
  const Element& z = g.g1;
  Element p = apply_function(z, ScalarFunction::ChiPlus);
  if (!is_central(p, std::max(tol, kDerivedFactorTol))) {
    throw JordanError(Errc::CentralityViolation, "sign projection of g(1) is not central");
  }
  const Element eps = 2.0 * p - unit(a);
  Element v = sqrt(abs(z));
  const VOperator h = U_op(inverse(v)) * g.g;
  VOperator k = L_op(eps) * h;
  StrDecomposition out{std::move(v), std::move(p), std::move(k)};
  out.recomposition_residual = detail::relative_gap(out.recompose().matrix(), g.g.matrix());
  return out;
}

// ---------------------------------------------------------------------------
// Lie algebra

double str_lie_residual(const VOperator& h, std::uint64_t seed) {
  const Algebra& a = h.algebra();
  // Hbar = H - 2U_{H1,1} = H - 2L_{H1}
  const Eigen::MatrixXd hbar = h.matrix() - 2.0 * L_op(h(unit(a))).matrix();
  double worst = 0.0;
  for (const auto& x : probe_elements(a, seed)) {
    const Eigen::MatrixXd ux = U_op(x).matrix();
    const Eigen::MatrixXd lhs = 2.0 * U_bilinear(x, h(x)).matrix();
    const double bound = ux.norm() * std::max(h.norm(), hbar.norm());
    worst = std::max(worst, relative_residual3(lhs, h.matrix() * ux, ux * hbar, bound));
  }
  return worst;
}

LieSplit lie_split(const VOperator& h, double tol) {
  const double res = str_lie_residual(h);
  if (res > tol) throw JordanError(Errc::NotInLieAlgebra, "H is not in str", res);
  Element u = h(unit(h.algebra()));
  VOperator d = h - L_op(u);
  const double dres = derivation_residual(d);
  if (dres > std::max(tol, kDerivedFactorTol)) {
    throw JordanError(Errc::NotInLieAlgebra, "H - L_{H1} is not a derivation", dres);
  }
  return {std::move(u), std::move(d)};
}

int str_dimension(const Algebra& a, std::uint64_t seed) {
  const int d = a.dim();
  const int unknowns = d * d;
  const Element one = unit(a);
  // Gram matrix A^T A of the stacked constraint, accumulated per probe x.
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(unknowns, unknowns);

  std::vector<Element> basis;
  for (int i = 0; i < d; ++i) basis.push_back(basis_element(a, i));
  std::vector<Eigen::MatrixXd> l_basis;
  for (const auto& e : basis) l_basis.push_back(L_op(e).matrix());

  Eigen::MatrixXd block(d * d, unknowns);
  for (const auto& x : probe_elements(a, seed)) {
    const Eigen::MatrixXd ux = U_op(x).matrix();
    std::vector<Eigen::MatrixXd> u_xe;
    std::vector<Eigen::MatrixXd> ux_le;
    for (int r = 0; r < d; ++r) {
      u_xe.push_back(U_bilinear(x, basis[r]).matrix());
      ux_le.push_back(ux * l_basis[r]);
    }
    // H = E_rc: Hx = x_c e_r, H1 = 1_c e_r.
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        Eigen::MatrixXd res = 2.0 * x[c] * u_xe[r] + 2.0 * one[c] * -ux_le[r];
        res.row(r) -= ux.row(c);  // - E_rc U_x
        res.col(c) += ux.col(r);  // + U_x E_rc
        block.col(r * d + c) = Eigen::Map<const Eigen::VectorXd>(res.data(), d * d);
      }
    }
    gram.noalias() += block.transpose() * block;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  int nullity = 0;
  for (int i = 0; i < unknowns; ++i) {
    if (es.eigenvalues()[i] <= 1e-10 * top) ++nullity;
  }
  return nullity;
}

}  // namespace jordan
