#include "jordan/sampling.hpp"

#include <complex>

#include "detail.hpp"
#include "jordan/structure.hpp"

namespace jordan {

double Sampler::normal() { return normal_(rng_); }

double Sampler::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng_);
}

int Sampler::uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(rng_);
}

bool Sampler::coin() { return uniform_int(0, 1) == 1; }

Element Sampler::element(const Algebra& a, double scale) {
  Eigen::VectorXd c(a.dim());
  for (int i = 0; i < a.dim(); ++i) c[i] = scale * normal();
  return Element(a, std::move(c));
}

Element Sampler::cone_element(const Algebra& a) {
  return square(element(a)) + 0.1 * unit(a);
}

Element Sampler::central_projection(const Algebra& a) {
  const auto atoms = central_atoms(a);
  Element p = zero(a);
  for (const auto& atom : atoms) {
    if (coin()) p += atom;
  }
  return p;
}

Eigen::MatrixXcd Sampler::complex_gaussian(int n) {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = {normal(), normal()};
  }
  return m;
}

Eigen::MatrixXd Sampler::orthogonal(int n) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    if (r(i, i) < 0) q.col(i) *= -1.0;
  }
  return q;
}

Eigen::MatrixXcd Sampler::unitary(int n) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(complex_gaussian(n));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    const double mod = std::abs(r(i, i));
    if (mod > 0) q.col(i) *= r(i, i) / mod;
  }
  return q;
}

Eigen::MatrixXcd Sampler::skew_hermitian(int n, double scale) {
  const Eigen::MatrixXcd g = complex_gaussian(n);
  return scale * 0.5 * (g - g.adjoint());
}

VOperator Sampler::block_automorphism(const Algebra& a, bool allow_antiunitary) {
  std::vector<Eigen::MatrixXd> parts;
  for (const auto& block : a.blocks()) {
    const int n = block.order();
    switch (block.kind()) {
      case AlgebraKind::SymReal: {
        const Eigen::MatrixXcd o = orthogonal(n).cast<std::complex<double>>();
        parts.push_back(detail::matrix_block_operator(
            block, [&](const Eigen::MatrixXcd& m) -> Eigen::MatrixXcd { return o * m * o.adjoint(); }));
        break;
      }
      case AlgebraKind::HermComplex: {
        const Eigen::MatrixXcd u = unitary(n);
        const bool anti = allow_antiunitary && coin();
        parts.push_back(detail::matrix_block_operator(
            block, [&](const Eigen::MatrixXcd& m) -> Eigen::MatrixXcd {
              return anti ? Eigen::MatrixXcd(u * m.conjugate() * u.adjoint())
                          : Eigen::MatrixXcd(u * m * u.adjoint());
            }));
        break;
      }
      case AlgebraKind::SpinFactor: {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
        if (n > 1) {
          Eigen::MatrixXd r = orthogonal(n - 1);
          // Allow both components of O(d-1) in the full automorphism group.
          if (allow_antiunitary && coin()) r.col(0) *= -1.0;
          m.bottomRightCorner(n - 1, n - 1) = r;
        }
        parts.push_back(std::move(m));
        break;
      }
      case AlgebraKind::DirectSum:
        break;
    }
  }
  return detail::block_diagonal(a, parts);
}

VOperator Sampler::automorphism(const Algebra& a) { return block_automorphism(a, true); }

VOperator Sampler::inner_automorphism(const Algebra& a) { return block_automorphism(a, false); }

VOperator Sampler::derivation(const Algebra& a, double scale) {
  std::vector<Eigen::MatrixXd> parts;
  for (const auto& block : a.blocks()) {
    const int n = block.order();
    switch (block.kind()) {
      case AlgebraKind::SymReal: {
        Eigen::MatrixXd g(n, n);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) g(i, j) = normal();
        }
        const Eigen::MatrixXcd k = (scale * 0.5 * (g - g.transpose())).cast<std::complex<double>>();
        parts.push_back(detail::matrix_block_operator(
            block, [&](const Eigen::MatrixXcd& m) -> Eigen::MatrixXcd { return k * m - m * k; }));
        break;
      }
      case AlgebraKind::HermComplex: {
        const Eigen::MatrixXcd z = skew_hermitian(n, scale);
        parts.push_back(detail::matrix_block_operator(
            block, [&](const Eigen::MatrixXcd& m) -> Eigen::MatrixXcd { return z * m - m * z; }));
        break;
      }
      case AlgebraKind::SpinFactor: {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        if (n > 2) {
          Eigen::MatrixXd g(n - 1, n - 1);
          for (int i = 0; i < n - 1; ++i) {
            for (int j = 0; j < n - 1; ++j) g(i, j) = normal();
          }
          m.bottomRightCorner(n - 1, n - 1) = scale * 0.5 * (g - g.transpose());
        }
        parts.push_back(std::move(m));
        break;
      }
      case AlgebraKind::DirectSum:
        break;
    }
  }
  return detail::block_diagonal(a, parts);
}

}  // namespace jordan
