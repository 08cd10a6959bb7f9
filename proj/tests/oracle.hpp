#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// product or basis code: matrices are rebuilt from coordinates by hand and all
// operators are formed from the associative matrix product.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "jordan/algebra.hpp"

namespace oracle {

using cd = std::complex<double>;
using jordan::AlgebraKind;

inline Eigen::MatrixXcd herm_from_coords(AlgebraKind kind, int n, const Eigen::VectorXd& c) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i) m(i, i) = c[k++];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m(i, j) += c[k] * r;
      m(j, i) += c[k] * r;
      ++k;
    }
  }
  if (kind == AlgebraKind::HermComplex) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        // i (E_ij - E_ji) / sqrt2
        m(i, j) += cd(0, c[k] * r);
        m(j, i) -= cd(0, c[k] * r);
        ++k;
      }
    }
  }
  return m;
}

inline Eigen::VectorXd coords_from_herm(AlgebraKind kind, int n, const Eigen::MatrixXcd& m) {
  const int pairs = n * (n - 1) / 2;
  const int dim = n + pairs * (kind == AlgebraKind::HermComplex ? 2 : 1);
  Eigen::VectorXd c(dim);
  const double s = std::sqrt(2.0);
  int k = 0;
  for (int i = 0; i < n; ++i) c[k++] = m(i, i).real();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) c[k++] = s * m(i, j).real();
  }
  if (kind == AlgebraKind::HermComplex) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) c[k++] = s * m(i, j).imag();
    }
  }
  return c;
}

// Jordan product on a simple block given by kind/order.
inline Eigen::VectorXd block_product(AlgebraKind kind, int n, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (kind == AlgebraKind::SpinFactor) {
    Eigen::VectorXd out(n);
    out[0] = x[0] * y[0] + x.tail(n - 1).dot(y.tail(n - 1));
    out.tail(n - 1) = x[0] * y.tail(n - 1) + y[0] * x.tail(n - 1);
    return out;
  }
  const Eigen::MatrixXcd a = herm_from_coords(kind, n, x), b = herm_from_coords(kind, n, y);
  return coords_from_herm(kind, n, 0.5 * (a * b + b * a));
}

inline Eigen::VectorXd product(const jordan::Algebra& alg, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  Eigen::VectorXd out(alg.dim());
  const auto blocks = alg.blocks();
  const auto offsets = alg.offsets();
  for (size_t b = 0; b < blocks.size(); ++b) {
    const int d = blocks[b].dim();
    out.segment(offsets[b], d) = block_product(blocks[b].kind(), blocks[b].order(), x.segment(offsets[b], d),
                                               y.segment(offsets[b], d));
  }
  return out;
}

// U_x y = 2 x o (x o y) - x^2 o y, evaluated pointwise with the oracle product.
inline Eigen::VectorXd quadratic(const jordan::Algebra& alg, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return 2.0 * product(alg, x, product(alg, x, y)) - product(alg, product(alg, x, x), y);
}

// Matrix of y -> f(y) in the coordinate basis.
template <typename F>
Eigen::MatrixXd operator_matrix(int dim, F&& f) {
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i) m.col(i) = f(Eigen::VectorXd::Unit(dim, i));
  return m;
}

inline Eigen::MatrixXd U_matrix(const jordan::Algebra& alg, const Eigen::VectorXd& x) {
  return operator_matrix(alg.dim(), [&](const Eigen::VectorXd& y) { return quadratic(alg, x, y); });
}

inline Eigen::MatrixXd L_matrix(const jordan::Algebra& alg, const Eigen::VectorXd& x) {
  return operator_matrix(alg.dim(), [&](const Eigen::VectorXd& y) { return product(alg, x, y); });
}

// Eigenvalues with multiplicity: matrix eigenvalues per matrix block,
// s -+ |u| per spin block (a single s for Spin(1)).
inline std::vector<double> spectrum(const jordan::Algebra& alg, const Eigen::VectorXd& x) {
  std::vector<double> out;
  const auto blocks = alg.blocks();
  const auto offsets = alg.offsets();
  for (size_t b = 0; b < blocks.size(); ++b) {
    const int d = blocks[b].dim();
    const Eigen::VectorXd c = x.segment(offsets[b], d);
    if (blocks[b].kind() == AlgebraKind::SpinFactor) {
      if (d == 1) {
        out.push_back(c[0]);
      } else {
        const double r = c.tail(d - 1).norm();
        out.push_back(c[0] - r);
        out.push_back(c[0] + r);
      }
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm_from_coords(blocks[b].kind(), blocks[b].order(), c));
    for (int i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double max_gap(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double g = 0.0;
  for (size_t i = 0; i < a.size(); ++i) g = std::max(g, std::abs(a[i] - b[i]));
  return g;
}

inline double rel(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double d = std::max({a.norm(), b.norm(), 1e-300});
  return (a - b).norm() / d;
}

}  // namespace oracle
