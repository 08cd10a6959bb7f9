#pragma once

// The structure group Str(V), its Lie algebra str(V) and the decompositions
// built on them:
//   * membership residuals for Str and str,
//   * Pierce decomposition and central projections,
//   * x = v eps with v in Omega, eps a central symmetry (when sigma(U_x) > 0),
//   * g = U_y k for g in G(Omega), and g = U_v S_p k for every g in Str,
//   * str = der + L.

#include <cstdint>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

inline constexpr std::uint64_t kResidualSeed = 0x5eedULL;

// max over basis vectors e_i and 2*dim random x of
//   || U_{gx} - g U_x g* || / (||g|| ||U_x|| ||g*||),  g* = g^{-1} U_{g1},
// and the same expression for g^{-1}. The denominator bounds both sides, so
// the residual is invariant under g -> cg and does not amplify roundoff
// when U_{gx} happens to be small.
// Throws SingularOperator if g is not invertible.
double str_residual(const VOperator& g, std::uint64_t seed = kResidualSeed);

// A verified member of Str together with g(1) and g* = g^{-1} U_{g1}.
struct StrElement {
  VOperator g;
  Element g1;
  VOperator adj;
  double residual;
};

// Throws NotInStr when str_residual(g) > tol or g(1) is not invertible.
StrElement make_str_element(const VOperator& g, double tol = kDefaultTol);

VOperator str_adjoint(const StrElement& g);

// g in Str with g(1) = 1 (equivalently a Jordan automorphism).
bool is_automorphism(const VOperator& g, double tol = kDefaultTol);

// Largest relative failure of g(x o y) = g(x) o g(y) over random pairs.
double multiplicativity_residual(const VOperator& g, int pairs = 16,
                                 std::uint64_t seed = kResidualSeed);

// Largest relative failure of D(x o y) = Dx o y + x o Dy over random pairs.
double derivation_residual(const VOperator& d, int pairs = 16,
                           std::uint64_t seed = kResidualSeed);

struct PierceDecomposition {
  VOperator p1;     // U_p, the 1-eigenspace of L_p
  VOperator p0;     // U_{1-p}, the 0-eigenspace
  VOperator phalf;  // 2 U_{p,1-p}, the 1/2-eigenspace
  int rank1 = 0;
  int rank0 = 0;
  int rank_half = 0;
};

// Throws NotIdempotent unless ||p^2 - p|| <= tol * max(1, ||p||).
PierceDecomposition pierce_decompose(const Element& p, double tol = kDefaultTol);

// p^2 = p and [L_p, L_{e_i}] = 0 for every basis vector.
bool is_central(const Element& p, double tol = kDefaultTol);

// Minimal central projections, one per simple summand (SpinFactor(2) is
// R + R and contributes two).
std::vector<Element> central_atoms(const Algebra& a);
// All 2^m sums of atoms, starting with 0 and ending with 1.
std::vector<Element> central_projections(const Algebra& a);

// S_p = 2 L_p - 1 = L_{eps_p}.
VOperator central_symmetry_op(const Element& p);

struct UPositiveDecomposition {
  Element v;    // positive part |x|
  Element eps;  // central symmetry 2 p_+ - 1
};

// x = v o eps with v in Omega and eps a central symmetry; exists exactly when
// sigma(U_x) is positive. Throws NotInvertible, or UxNotPositive with the
// most negative eigenvalue of U_x as witness.
UPositiveDecomposition u_positive_decompose(const Element& x, double tol = kDefaultTol);

// sigma(U_x) split along J_+ = ran U_{p+}, J_- = ran U_{p-} and
// J_0 = ran 2U_{p+,p-} with p_{+-} = chi_{+-}(x). Each list is ascending.
struct USpectrumSplit {
  std::vector<double> plus;
  std::vector<double> minus;
  std::vector<double> zero;
};

USpectrumSplit u_spectrum_split(const Element& x);

// g = U_y k with y = sqrt(g(1)) in Omega and k an automorphism.
struct GODecomposition {
  Element y;
  VOperator k;
};

GODecomposition go_decompose(const StrElement& g, double tol = kDefaultTol);

// g = U_v S_p k with v in Omega, p a central projection, k in Aut.
struct StrDecomposition {
  Element v;
  Element p;
  VOperator k;
  double recomposition_residual = 0.0;

  // g* = g^{-1} holds exactly when v = 1.
  bool involutive(double tol = 1e-7) const;
  VOperator recompose() const;
};

// Throws NotInStr (via the precondition) or CentralityViolation when the
// sign projection of g(1) fails the centrality test.
StrDecomposition str_decompose(const StrElement& g, double tol = kDefaultTol);

// Lie algebra test 2U_{x,Hx} = H U_x - U_x Hbar with Hbar = H - 2U_{H1,1},
// over basis vectors and 2*dim random x; relative residual.
double str_lie_residual(const VOperator& h, std::uint64_t seed = kResidualSeed);

struct LieSplit {
  Element u;    // H(1)
  VOperator d;  // H - L_u, a derivation
};

// Throws NotInLieAlgebra when H fails str_lie_residual or D fails the
// derivation identity.
LieSplit lie_split(const VOperator& h, double tol = kDefaultTol);

// Real dimension of str(V) from the numerical rank of the linear constraint
// H -> 2U_{x,Hx} - H U_x + U_x (H - 2U_{H1,1}) sampled over x.
int str_dimension(const Algebra& a, std::uint64_t seed = kResidualSeed);

}  // namespace jordan
