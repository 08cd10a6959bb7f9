#pragma once

// Block-level helpers shared by the translation units of jordan_core.

#include <Eigen/Dense>

#include <cmath>

#include "jordan/algebra.hpp"

namespace jordan::detail {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

// Number of off-diagonal pairs i<j for an n x n matrix.
inline int pair_count(int n) { return n * (n - 1) / 2; }

// Hermitian (or real symmetric) matrix from the coordinates of one block.
Eigen::MatrixXcd block_to_matrix(AlgebraKind kind, int n, const double* c);
// Inverse of block_to_matrix; components outside the block basis are dropped.
void matrix_to_block(AlgebraKind kind, int n, const Eigen::MatrixXcd& m, double* out);

Eigen::MatrixXd block_to_real_matrix(int n, const double* c);
void real_matrix_to_block(int n, const Eigen::MatrixXd& m, double* out);

inline double scale_of(double norm) { return std::max(1.0, norm); }

// Relative residual ||a - b|| / max(||a||, ||b||), 0 when both vanish.
inline double relative_gap(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double denom = std::max(a.norm(), b.norm());
  if (denom == 0.0) return 0.0;
  return (a - b).norm() / denom;
}

inline double relative_gap(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double denom = std::max(a.norm(), b.norm());
  if (denom == 0.0) return 0.0;
  return (a - b).norm() / denom;
}

}  // namespace jordan::detail

namespace jordan::detail {

// Matrix (dim x dim) of a real-linear map on one matrix block, given as a
// function acting on complex matrices.
template <typename F>
Eigen::MatrixXd matrix_block_operator(const Algebra& block, F&& f) {
  const int d = block.dim();
  const int n = block.order();
  Eigen::MatrixXd m(d, d);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd col(d);
  for (int i = 0; i < d; ++i) {
    e.setZero();
    e[i] = 1.0;
    const Eigen::MatrixXcd b = block_to_matrix(block.kind(), n, e.data());
    matrix_to_block(block.kind(), n, f(b), col.data());
    m.col(i) = col;
  }
  return m;
}

// Assemble a block-diagonal operator from per-block matrices.
inline VOperator block_diagonal(const Algebra& a, const std::vector<Eigen::MatrixXd>& parts) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(a.dim(), a.dim());
  const auto offsets = a.offsets();
  for (size_t b = 0; b < parts.size(); ++b) {
    const auto d = parts[b].rows();
    m.block(offsets[b], offsets[b], d, d) = parts[b];
  }
  return VOperator(a, std::move(m));
}

}  // namespace jordan::detail
