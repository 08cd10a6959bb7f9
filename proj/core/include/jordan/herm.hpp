#pragma once

// Operators on V = Herm(n): congruences A -> T A T^dagger (optionally
// precomposed with entrywise conjugation), recovery of the implementing
// matrix, the two components of Aut, the explicit lift of automorphisms near
// the identity, and the A -> TA + AT^dagger form of str.

#include <Eigen/Dense>

#include <cstdint>

#include "jordan/algebra.hpp"
#include "jordan/structure.hpp"

namespace jordan {

// Verification level for maps recovered from other maps (lifts, implementers).
inline constexpr double kLiftTol = 1e-8;

struct ImplementingMap {
  Eigen::MatrixXcd T;
  bool conjugate_flag = false;  // true: A -> T conj(A) T^dagger
  bool phase_normalized = false;
  double residual = 0.0;        // relative gap to the input operator
};

struct AutLift {
  Eigen::MatrixXcd Z;  // skew-Hermitian
  Eigen::MatrixXcd W;  // unitary
  Eigen::MatrixXcd s;  // e^Z W
  int xi_index = 0;
  bool conjugate_flag = false;  // k = conj o Ad(s) when set
  double residual = 0.0;
};

enum class AutComponent { Unitary, Antiunitary };

const char* to_string(AutComponent c);

// A -> T A T^dagger, or T conj(A) T^dagger when conjugate_flag is set.
// Throws SingularMatrix for singular T, AlgebraMismatch unless a is Herm(n).
VOperator congruence_op(const Algebra& a, const Eigen::MatrixXcd& T, bool conjugate_flag = false);

// A -> A^T (= conj(A) on Hermitian matrices).
VOperator transpose_op(const Algebra& a);

// Complex-linear extension of k to all n x n matrices: X = H1 + i H2 goes to
// k(H1) + i k(H2).
Eigen::MatrixXcd complexify_apply(const VOperator& k, const Eigen::MatrixXcd& x);

// Multiply T by a unit scalar so that its first entry (row-major) with
// modulus above 1e-6 ||T|| is real and positive.
Eigen::MatrixXcd phase_normalize(const Eigen::MatrixXcd& T);

// Classify an automorphism by whether k^C is multiplicative or
// anti-multiplicative on the pair (E_12, E_21). n = 1 is declared unitary.
AutComponent aut_component(const VOperator& k, double tol = 1e-7);

// g = congruence_op(T, flag) for g in G(Omega): X = sqrt(g(1)) and the
// automorphism U_X^{-1} g is implemented by a unitary read off column by
// column. Throws NotConePreserving, LiftFailure.
ImplementingMap recover_implementer(const VOperator& g, double tol = kDefaultTol);

// Lift of an automorphism with ||k - Id|| < 1 (or ||k - j|| < 1, j the
// transpose, in which case j o k is lifted and the conjugation recorded).
// Throws NotAutomorphism, OutOfNeighborhood, LiftFailure.
AutLift lift_automorphism(const VOperator& k, int xi_index = 0, double tol = 1e-7);

// Congruence operator of a lift (conjugation included when flagged).
VOperator lift_operator(const Algebra& a, const AutLift& lift);

// Trace-free skew-Hermitian Z with D = ad Z. Throws NotDerivation,
// InconsistentSolve.
Eigen::MatrixXcd derivation_to_skew(const VOperator& d, double tol = kDefaultTol);

// A -> ZA - AZ.
VOperator commutator_op(const Algebra& a, const Eigen::MatrixXcd& Z);
// A -> TA + AT^dagger.
VOperator lr_op(const Algebra& a, const Eigen::MatrixXcd& T);

// T with H = lr_op(T), T = H(1)/2 + derivation_to_skew(H - L_{H1}).
// T is determined up to adding i t 1. Throws NotInLieAlgebra.
Eigen::MatrixXcd str_as_lr(const VOperator& h, double tol = kDefaultTol);

enum class StrComponent { Plus, Minus };
const char* to_string(StrComponent c);

// Plus iff g(1) in Omega, Minus iff -g(1) in Omega. Throws NotInStr, or
// Inconsistent when neither holds.
StrComponent str_two_components(const VOperator& g, double tol = kDefaultTol);

struct ConnectivityProbe {
  bool connected = false;      // reached ||k - Id|| < 1
  double start_distance = 0.0;
  double best_distance = 0.0;
  int steps = 0;
};

// Greedy walk through Aut starting at congruence_op(U, flag): each step
// tries random small unitary perturbations U e^{hZ} and keeps the one
// closest to Id. Deterministic given the seed.
ConnectivityProbe connectivity_probe(const Algebra& a, const Eigen::MatrixXcd& U, bool conjugate_flag,
                                     std::uint64_t seed, int max_steps = 400);

}  // namespace jordan
