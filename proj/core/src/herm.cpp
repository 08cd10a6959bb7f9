#include "jordan/herm.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>

#include "detail.hpp"
#include "jordan/cone.hpp"
#include "jordan/sampling.hpp"
#include "jordan/spectral.hpp"

namespace jordan {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

int require_herm(const Algebra& a, const char* where) {
  if (a.kind() != AlgebraKind::HermComplex) {
    throw JordanError(Errc::AlgebraMismatch, std::string(where) + ": expected a Herm(n) algebra, got " + a.name());
  }
  return a.order();
}

Eigen::MatrixXcd unit_matrix(int n, int i, int j) {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

double distance_to_identity(const VOperator& k) {
  return (k - VOperator::identity(k.algebra())).operator_norm();
}

// Unitary U with k = Ad(U), for k in the unitary component.
Eigen::MatrixXcd unitary_from_columns(const VOperator& k, int n) {
  const Eigen::MatrixXcd m11 = complexify_apply(k, unit_matrix(n, 0, 0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m11 + m11.adjoint()));
  const Eigen::VectorXcd w1 = es.eigenvectors().col(n - 1);
  Eigen::MatrixXcd u(n, n);
  for (int j = 0; j < n; ++j) u.col(j) = complexify_apply(k, unit_matrix(n, j, 0)) * w1;
  return u;
}

}  // namespace

const char* to_string(AutComponent c) {
  return c == AutComponent::Unitary ? "unitary" : "antiunitary";
}

const char* to_string(StrComponent c) { return c == StrComponent::Plus ? "plus" : "minus"; }

VOperator congruence_op(const Algebra& a, const Eigen::MatrixXcd& T, bool conjugate_flag) {
  const int n = require_herm(a, "congruence_op");
  if (T.rows() != n || T.cols() != n) {
    throw JordanError(Errc::AlgebraMismatch, "congruence_op: matrix size does not match the algebra");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T);
  const auto& sv = svd.singularValues();
  if (sv[n - 1] <= 1e-12 * std::max(1.0, sv[0])) {
    throw JordanError(Errc::SingularMatrix, "congruence_op: T is singular", sv[n - 1]);
  }
  Eigen::MatrixXd m = detail::matrix_block_operator(a, [&](const Eigen::MatrixXcd& x) -> Eigen::MatrixXcd {
    return conjugate_flag ? Eigen::MatrixXcd(T * x.conjugate() * T.adjoint())
                          : Eigen::MatrixXcd(T * x * T.adjoint());
  });
  return VOperator(a, std::move(m));
}

VOperator transpose_op(const Algebra& a) {
  const int n = require_herm(a, "transpose_op");
  return congruence_op(a, Eigen::MatrixXcd::Identity(n, n), true);
}

VOperator commutator_op(const Algebra& a, const Eigen::MatrixXcd& Z) {
  require_herm(a, "commutator_op");
  return VOperator(a, detail::matrix_block_operator(
                          a, [&](const Eigen::MatrixXcd& x) -> Eigen::MatrixXcd { return Z * x - x * Z; }));
}

VOperator lr_op(const Algebra& a, const Eigen::MatrixXcd& T) {
  require_herm(a, "lr_op");
  return VOperator(a, detail::matrix_block_operator(a, [&](const Eigen::MatrixXcd& x) -> Eigen::MatrixXcd {
                     return T * x + x * T.adjoint();
                   }));
}

Eigen::MatrixXcd complexify_apply(const VOperator& k, const Eigen::MatrixXcd& x) {
  const Algebra& a = k.algebra();
  require_herm(a, "complexify_apply");
  const Eigen::MatrixXcd h1 = 0.5 * (x + x.adjoint());
  const Eigen::MatrixXcd h2 = (x - x.adjoint()) / (2.0 * kI);
  return to_matrix(k(from_matrix(a, h1))) + kI * to_matrix(k(from_matrix(a, h2)));
}

Eigen::MatrixXcd phase_normalize(const Eigen::MatrixXcd& T) {
  const double cutoff = 1e-6 * T.norm();
  for (int i = 0; i < T.rows(); ++i) {
    for (int j = 0; j < T.cols(); ++j) {
      const double mod = std::abs(T(i, j));
      if (mod > cutoff) return T * (std::conj(T(i, j)) / mod);
    }
  }
  return T;
}

AutComponent aut_component(const VOperator& k, double tol) {
  const Algebra& a = k.algebra();
  const int n = require_herm(a, "aut_component");
  if (!is_automorphism(k, tol)) throw JordanError(Errc::NotAutomorphism, "aut_component: k is not an automorphism");
  if (n == 1) return AutComponent::Unitary;
  const Eigen::MatrixXcd x = unit_matrix(n, 0, 1);
  const Eigen::MatrixXcd y = unit_matrix(n, 1, 0);
  const Eigen::MatrixXcd kxy = complexify_apply(k, x * y);
  const Eigen::MatrixXcd kx = complexify_apply(k, x);
  const Eigen::MatrixXcd ky = complexify_apply(k, y);
  const double d_unitary = (kxy - kx * ky).norm();
  const double d_anti = (kxy - ky * kx).norm();
  // Exactly one of the two must vanish; on this pair they differ by
  // ||[k^C(x), k^C(y)]|| = ||k^C(E_11 - E_22)|| = sqrt 2.
  if (std::min(d_unitary, d_anti) > 1e-6 || std::max(d_unitary, d_anti) < 0.5) {
    throw JordanError(Errc::UndecidableWitness, "aut_component: witness pair does not decide the component",
                      std::min(d_unitary, d_anti));
  }
  return d_unitary <= d_anti ? AutComponent::Unitary : AutComponent::Antiunitary;
}

ImplementingMap recover_implementer(const VOperator& g, double tol) {
  const Algebra& a = g.algebra();
  const int n = require_herm(a, "recover_implementer");
  const Element g1 = g(unit(a));
  if (!in_cone(g1, tol)) throw JordanError(Errc::NotConePreserving, "recover_implementer: g(1) is not positive");
  const double res = str_residual(g);
  if (res > tol) throw JordanError(Errc::NotConePreserving, "recover_implementer: g is not in Str", res);

  const Element x = sqrt(g1);
  VOperator k = U_op(inverse(x)) * g;
  ImplementingMap out;
  out.conjugate_flag = aut_component(k, kLiftTol) == AutComponent::Antiunitary;
  // k = Ad(U) o conj when flagged; j o j = Id.
  if (out.conjugate_flag) k = k * transpose_op(a);
  const Eigen::MatrixXcd u = unitary_from_columns(k, n);
  out.T = phase_normalize(to_matrix(x) * u);
  out.phase_normalized = true;
  out.residual = detail::relative_gap(congruence_op(a, out.T, out.conjugate_flag).matrix(), g.matrix());
  if (!(out.residual <= kLiftTol)) {
    throw JordanError(Errc::LiftFailure, "recover_implementer: recovered congruence does not reproduce g",
                      out.residual);
  }
  return out;
}

AutLift lift_automorphism(const VOperator& k, int xi_index, double tol) {
  const Algebra& a = k.algebra();
  const int n = require_herm(a, "lift_automorphism");
  if (xi_index < 0 || xi_index >= n) {
    throw JordanError(Errc::DomainViolation, "lift_automorphism: xi_index out of range");
  }
  if (!is_automorphism(k, tol)) throw JordanError(Errc::NotAutomorphism, "lift_automorphism: k is not an automorphism");

  AutLift out;
  out.xi_index = xi_index;
  VOperator k0 = k;
  if (distance_to_identity(k) >= 1.0) {
    const VOperator j = transpose_op(a);
    const double dj = (k - j).operator_norm();
    if (dj >= 1.0) {
      throw JordanError(Errc::OutOfNeighborhood, "lift_automorphism: ||k - Id|| >= 1 and ||k - j|| >= 1",
                        std::min(dj, distance_to_identity(k)));
    }
    k0 = j * k;
    out.conjugate_flag = true;
  }

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd p = unit_matrix(n, xi_index, xi_index);
  const Eigen::MatrixXcd kp = complexify_apply(k0, p);
  const Eigen::MatrixXcd m = (2.0 * kp - id) * (2.0 * p - id);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(m, false);
  for (int i = 0; i < n; ++i) {
    if (std::abs(ces.eigenvalues()[i] + 1.0) < 1e-8) {
      throw JordanError(Errc::OutOfNeighborhood, "lift_automorphism: k(p) is orthogonal to p");
    }
  }
  Eigen::MatrixXcd z = 0.5 * Eigen::MatrixXcd(m.log());
  z = 0.5 * (z - z.adjoint());
  out.Z = z;

  const Eigen::MatrixXcd ez = z.exp();
  const Eigen::MatrixXcd emz = (-z).exp();
  const Eigen::VectorXcd xi = id.col(xi_index);
  out.W.resize(n, n);
  for (int j = 0; j < n; ++j) {
    out.W.col(j) = emz * complexify_apply(k0, unit_matrix(n, j, xi_index)) * ez * xi;
  }
  out.s = ez * out.W;

  const double unitarity = (out.W.adjoint() * out.W - id).norm();
  out.residual = std::max(unitarity, detail::relative_gap(lift_operator(a, out).matrix(), k.matrix()));
  if (!(out.residual <= kLiftTol)) {
    throw JordanError(Errc::LiftFailure, "lift_automorphism: lift does not reproduce k", out.residual);
  }
  return out;
}

VOperator lift_operator(const Algebra& a, const AutLift& lift) {
  // j o Ad(s) = Ad(conj s) o j.
  if (lift.conjugate_flag) return congruence_op(a, lift.s.conjugate(), true);
  return congruence_op(a, lift.s, false);
}

Eigen::MatrixXcd derivation_to_skew(const VOperator& d, double tol) {
  const Algebra& a = d.algebra();
  const int n = require_herm(a, "derivation_to_skew");
  const int dim = a.dim();
  const double scale = detail::scale_of(d.norm());
  const double d1 = d(unit(a)).coord_norm();
  if (d1 > tol * scale) throw JordanError(Errc::NotDerivation, "derivation_to_skew: D(1) != 0", d1);
  const double lie = str_lie_residual(d);
  if (lie > tol) throw JordanError(Errc::NotDerivation, "derivation_to_skew: D is not in str", lie);

  // Z = sum_a c_a i H_a over the Hermitian basis, plus the row tr(H) c = 0.
  std::vector<Eigen::MatrixXcd> iz;
  Eigen::MatrixXd sys(dim * dim + 1, dim);
  for (int i = 0; i < dim; ++i) {
    const Eigen::MatrixXcd h = to_matrix(basis_element(a, i));
    iz.push_back(kI * h);
    const Eigen::MatrixXd ad = commutator_op(a, iz.back()).matrix();
    sys.col(i).head(dim * dim) = Eigen::Map<const Eigen::VectorXd>(ad.data(), dim * dim);
    sys(dim * dim, i) = h.trace().real();
  }
  Eigen::VectorXd rhs(dim * dim + 1);
  rhs.head(dim * dim) = Eigen::Map<const Eigen::VectorXd>(d.matrix().data(), dim * dim);
  rhs[dim * dim] = 0.0;
  const Eigen::VectorXd c = sys.colPivHouseholderQr().solve(rhs);

  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < dim; ++i) z += c[i] * iz[i];
  const double res = detail::relative_gap(commutator_op(a, z).matrix(), d.matrix());
  if (res > tol) throw JordanError(Errc::InconsistentSolve, "derivation_to_skew: D - ad Z residual too large", res);
  return z;
}

Eigen::MatrixXcd str_as_lr(const VOperator& h, double tol) {
  const Algebra& a = h.algebra();
  require_herm(a, "str_as_lr");
  const double res = str_lie_residual(h);
  if (res > tol) throw JordanError(Errc::NotInLieAlgebra, "str_as_lr: H is not in str", res);
  const Element u = h(unit(a));
  const VOperator d = h - L_op(u);
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(a.order(), a.order());
  // A derivation part at roundoff level has no meaningful relative residual.
  if (d.norm() <= kDefaultTol * h.norm()) return 0.5 * to_matrix(u) + z;
  try {
    z = derivation_to_skew(d, std::max(tol, kLiftTol));
  } catch (const JordanError& e) {
    throw JordanError(Errc::NotInLieAlgebra, std::string("str_as_lr: ") + e.what());
  }
  return 0.5 * to_matrix(u) + z;
}

StrComponent str_two_components(const VOperator& g, double tol) {
  require_herm(g.algebra(), "str_two_components");
  const StrElement s = make_str_element(g, tol);
  const bool plus = in_cone(s.g1, tol);
  const bool minus = in_cone(-s.g1, tol);
  if (plus == minus) {
    throw JordanError(Errc::Inconsistent, "str_two_components: g(1) is neither positive nor negative");
  }
  return plus ? StrComponent::Plus : StrComponent::Minus;
}

ConnectivityProbe connectivity_probe(const Algebra& a, const Eigen::MatrixXcd& U, bool conjugate_flag,
                                     std::uint64_t seed, int max_steps) {
  const int n = require_herm(a, "connectivity_probe");
  Sampler sampler(seed);
  constexpr int kCandidates = 12;
  Eigen::MatrixXcd current = U;
  ConnectivityProbe out;
  out.start_distance = distance_to_identity(congruence_op(a, current, conjugate_flag));
  out.best_distance = out.start_distance;
  double step = 0.5;
  for (int it = 0; it < max_steps && !out.connected && step > 1e-4; ++it) {
    out.steps = it + 1;
    Eigen::MatrixXcd best = current;
    double best_d = out.best_distance;
    // candidate 0 moves along the geodesic from current towards 1
    const Eigen::MatrixXcd toward = -std::min(1.0, 2.0 * step) * Eigen::MatrixXcd(current.log());
    for (int c = 0; c < kCandidates; ++c) {
      const Eigen::MatrixXcd z = c == 0 ? toward : sampler.skew_hermitian(n, step);
      const Eigen::MatrixXcd cand = current * Eigen::MatrixXcd(z.exp());
      const double dist = distance_to_identity(congruence_op(a, cand, conjugate_flag));
      if (dist < best_d) {
        best_d = dist;
        best = cand;
      }
    }
    if (best_d < out.best_distance) {
      current = best;
      out.best_distance = best_d;
    } else {
      step *= 0.5;
    }
    out.connected = out.best_distance < 1.0;
  }
  return out;
}

}  // namespace jordan
