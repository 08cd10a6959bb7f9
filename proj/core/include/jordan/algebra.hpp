#pragma once

// Finite-dimensional JB-algebras and their basic operator calculus.
//
// Supported algebras:
//   SymReal(n)      real symmetric n x n matrices,        dim n(n+1)/2
//   HermComplex(n)  complex Hermitian n x n matrices,     dim n^2
//   SpinFactor(d)   R + R^{d-1}, (s,u)o(t,w) = (st+<u,w>, sw+tu), dim d
//   DirectSum       blockwise sum of the above (nested sums are flattened)
//
// Coordinates are taken in a fixed basis. For the matrix algebras the basis is
// {E_ii} then {(E_ij+E_ji)/sqrt2 : i<j} then, for HermComplex only,
// {i(E_ij-E_ji)/sqrt2 : i<j}; off-diagonal pairs are enumerated row-major.
// That basis is orthonormal for <a,b> = tr(ab). Spin factor coordinates are
// (s, u) directly.

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <vector>

#include "jordan/error.hpp"

namespace jordan {

inline constexpr double kDefaultTol = 1e-9;
// min |sigma(x)| above this (times max(1, ||x||)) means invertible.
inline constexpr double kInvertibilityCutoff = 1e-8;
// Eigenvalues closer than this (times max(1, ||x||)) share an idempotent.
inline constexpr double kClusterTol = 1e-7;

enum class AlgebraKind { SymReal, HermComplex, SpinFactor, DirectSum };

class Algebra {
 public:
  static Algebra sym_real(int n);
  static Algebra herm_complex(int n);
  static Algebra spin_factor(int d);
  static Algebra direct_sum(const std::vector<Algebra>& parts);

  // "sym:3", "herm:2", "spin:4", "sym:2+sym:3".
  static Algebra parse(const std::string& text);

  AlgebraKind kind() const;
  // Matrix order for SymReal/HermComplex, d for SpinFactor, 0 for sums.
  int order() const;
  int dim() const;
  bool is_simple_kind() const { return kind() != AlgebraKind::DirectSum; }

  // Simple summands; a non-sum algebra is its own single block.
  std::vector<Algebra> blocks() const;
  // Coordinate offset of each block inside V.
  std::vector<int> offsets() const;

  std::string name() const;

  friend bool operator==(const Algebra& a, const Algebra& b);
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

 private:
  struct Impl;
  explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class Element {
 public:
  Element(Algebra algebra, Eigen::VectorXd coords);

  const Algebra& algebra() const { return algebra_; }
  const Eigen::VectorXd& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }

  // Euclidean norm of the coordinates (= trace-form norm for matrix algebras).
  double coord_norm() const { return coords_.norm(); }

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(double s);

 private:
  Algebra algebra_;
  Eigen::VectorXd coords_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(double s, Element a);
Element operator*(Element a, double s);

Element unit(const Algebra& a);
Element zero(const Algebra& a);
Element basis_element(const Algebra& a, int i);

// A real-linear map V -> V as a dim x dim matrix in the fixed basis.
class VOperator {
 public:
  VOperator(Algebra algebra, Eigen::MatrixXd matrix);

  static VOperator identity(const Algebra& a);
  static VOperator zero(const Algebra& a);

  const Algebra& algebra() const { return algebra_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  Element operator()(const Element& x) const;

  VOperator inverse() const;  // throws SingularOperator
  VOperator operator-() const;
  // Frobenius norm of the matrix.
  double norm() const { return matrix_.norm(); }
  // Induced 2-norm, i.e. the operator norm for the trace-form inner product.
  double operator_norm() const;

 private:
  Algebra algebra_;
  Eigen::MatrixXd matrix_;
};

VOperator operator*(const VOperator& a, const VOperator& b);
VOperator operator+(const VOperator& a, const VOperator& b);
VOperator operator-(const VOperator& a, const VOperator& b);
VOperator operator*(double s, const VOperator& a);

void require_same_algebra(const Algebra& a, const Algebra& b, const char* where);

Element jordan_product(const Element& x, const Element& y);
Element square(const Element& x);

// L_x y = x o y.
VOperator L_op(const Element& x);
// U_x = 2 L_x^2 - L_{x^2}.
VOperator U_op(const Element& x);
// U_{x,y} = L_x L_y + L_y L_x - L_{x o y}.
VOperator U_bilinear(const Element& x, const Element& y);
// Polarized route: (U_{x+y} - U_x - U_y) / 2. Kept separate so the two
// formulas can be compared against each other.
VOperator U_bilinear_polarized(const Element& x, const Element& y);

bool is_invertible(const Element& x);
// x^{-1} = U_x^{-1} x. Throws NotInvertible.
Element inverse(const Element& x);

// Order-unit norm, equal to the spectral radius max |sigma(x)|.
double jb_norm(const Element& x);

// <a,b> = tr(a o b): tr(ab) on matrix blocks, 2(st + <u,w>) on spin blocks.
double trace_form(const Element& a, const Element& b);

// Matrix views of a simple matrix-algebra element (SymReal or HermComplex).
Eigen::MatrixXcd to_matrix(const Element& x);
Element from_matrix(const Algebra& a, const Eigen::MatrixXcd& m);

}  // namespace jordan
