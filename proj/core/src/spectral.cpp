#include "jordan/spectral.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "detail.hpp"

namespace jordan {

namespace {

struct Primitive {
  double lambda;
  Eigen::VectorXd idempotent;  // coordinates in the full algebra
};

// One primitive idempotent per eigenvalue (with multiplicity), unsorted.
std::vector<Primitive> primitive_decomposition(const Element& x) {
  const auto& a = x.algebra();
  const auto blocks = a.blocks();
  const auto offsets = a.offsets();
  std::vector<Primitive> out;
  for (size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    const int off = offsets[b];
    const int n = block.order();
    const double* c = x.coords().data() + off;
    auto push = [&](double lambda, const auto& fill) {
      Primitive p{lambda, Eigen::VectorXd::Zero(a.dim())};
      fill(p.idempotent.data() + off);
      out.push_back(std::move(p));
    };
    switch (block.kind()) {
      case AlgebraKind::SymReal: {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(detail::block_to_real_matrix(n, c));
        for (int i = 0; i < n; ++i) {
          const Eigen::VectorXd v = es.eigenvectors().col(i);
          push(es.eigenvalues()[i],
               [&](double* dst) { detail::real_matrix_to_block(n, v * v.transpose(), dst); });
        }
        break;
      }
      case AlgebraKind::HermComplex: {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            detail::block_to_matrix(block.kind(), n, c));
        for (int i = 0; i < n; ++i) {
          const Eigen::VectorXcd v = es.eigenvectors().col(i);
          push(es.eigenvalues()[i], [&](double* dst) {
            detail::matrix_to_block(block.kind(), n, v * v.adjoint(), dst);
          });
        }
        break;
      }
      case AlgebraKind::SpinFactor: {
        const double s = c[0];
        if (n == 1) {
          push(s, [](double* dst) { dst[0] = 1.0; });
          break;
        }
        Eigen::Map<const Eigen::VectorXd> u(c + 1, n - 1);
        const double r = u.norm();
        Eigen::VectorXd dir = Eigen::VectorXd::Zero(n - 1);
        if (r > 0.0) {
          dir = u / r;
        } else {
          dir[0] = 1.0;
        }
        // e_{+-} = (1/2, +-u/(2|u|))
        for (int sign : {-1, 1}) {
          push(s + sign * r, [&](double* dst) {
            dst[0] = 0.5;
            for (int i = 1; i < n; ++i) dst[i] = 0.5 * sign * dir[i - 1];
          });
        }
        break;
      }
      case AlgebraKind::DirectSum:
        break;
    }
  }
  return out;
}

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Element SpectralData::reconstruct() const {
  if (frame.empty()) throw std::logic_error("empty spectral data");
  Element out = zero(frame.front().algebra());
  for (size_t i = 0; i < frame.size(); ++i) out += eigenvalues[i] * frame[i];
  return out;
}

SpectralData spectral_decompose(const Element& x) {
  auto prims = primitive_decomposition(x);
  std::sort(prims.begin(), prims.end(),
            [](const Primitive& a, const Primitive& b) { return a.lambda < b.lambda; });
  double radius = 0.0;
  for (const auto& p : prims) radius = std::max(radius, std::abs(p.lambda));
  const double tol = kClusterTol * detail::scale_of(radius);

  SpectralData out;
  size_t i = 0;
  while (i < prims.size()) {
    size_t j = i + 1;
    while (j < prims.size() && prims[j].lambda - prims[j - 1].lambda <= tol) ++j;
    double mean = 0.0;
    Eigen::VectorXd e = Eigen::VectorXd::Zero(x.dim());
    for (size_t k = i; k < j; ++k) {
      mean += prims[k].lambda;
      e += prims[k].idempotent;
    }
    out.eigenvalues.push_back(mean / static_cast<double>(j - i));
    out.frame.emplace_back(x.algebra(), std::move(e));
    i = j;
  }
  return out;
}

std::vector<double> eigenvalues(const Element& x) {
  const auto& a = x.algebra();
  const auto blocks = a.blocks();
  const auto offsets = a.offsets();
  std::vector<double> out;
  for (size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    const int n = block.order();
    const double* c = x.coords().data() + offsets[b];
    switch (block.kind()) {
      case AlgebraKind::SymReal: {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(detail::block_to_real_matrix(n, c),
                                                          Eigen::EigenvaluesOnly);
        for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
        break;
      }
      case AlgebraKind::HermComplex: {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            detail::block_to_matrix(block.kind(), n, c), Eigen::EigenvaluesOnly);
        for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
        break;
      }
      case AlgebraKind::SpinFactor: {
        if (n == 1) {
          out.push_back(c[0]);
          break;
        }
        const double r = Eigen::Map<const Eigen::VectorXd>(c + 1, n - 1).norm();
        out.push_back(c[0] - r);
        out.push_back(c[0] + r);
        break;
      }
      case AlgebraKind::DirectSum:
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double min_eigenvalue(const Element& x) { return eigenvalues(x).front(); }
double max_eigenvalue(const Element& x) { return eigenvalues(x).back(); }

Element map_spectrum(const Element& x, const std::function<double(double)>& f) {
  const auto sd = spectral_decompose(x);
  Element out = zero(x.algebra());
  for (size_t i = 0; i < sd.frame.size(); ++i) out += f(sd.eigenvalues[i]) * sd.frame[i];
  return out;
}

Element apply_function(const Element& x, ScalarFunction f) {
  const auto sd = spectral_decompose(x);
  double radius = 0.0;
  for (double v : sd.eigenvalues) radius = std::max(radius, std::abs(v));
  const double scale = detail::scale_of(radius);

  auto violation = [](const char* what, double lambda) {
    return JordanError(Errc::DomainViolation,
                       std::string(what) + " undefined at eigenvalue " + describe(lambda), lambda);
  };

  Element out = zero(x.algebra());
  for (size_t i = 0; i < sd.frame.size(); ++i) {
    const double l = sd.eigenvalues[i];
    double v = 0.0;
    switch (f) {
      case ScalarFunction::Sqrt:
        if (!(l > kDefaultTol * scale)) throw violation("sqrt", l);
        v = std::sqrt(l);
        break;
      case ScalarFunction::Log:
        if (!(l > kDefaultTol * scale)) throw violation("log", l);
        v = std::log(l);
        break;
      case ScalarFunction::Exp:
        v = std::exp(l);
        break;
      case ScalarFunction::Inv:
        if (!(std::abs(l) > kInvertibilityCutoff * scale)) throw violation("inv", l);
        v = 1.0 / l;
        break;
      case ScalarFunction::ChiPlus:
        if (!(std::abs(l) > kInvertibilityCutoff * scale)) throw violation("chi_plus", l);
        v = l > 0.0 ? 1.0 : 0.0;
        break;
      case ScalarFunction::ChiMinus:
        if (!(std::abs(l) > kInvertibilityCutoff * scale)) throw violation("chi_minus", l);
        v = l < 0.0 ? 1.0 : 0.0;
        break;
      case ScalarFunction::Abs:
        v = std::abs(l);
        break;
    }
    out += v * sd.frame[i];
  }
  return out;
}

Element sqrt(const Element& x) { return apply_function(x, ScalarFunction::Sqrt); }
Element log(const Element& x) { return apply_function(x, ScalarFunction::Log); }
Element exp(const Element& x) { return apply_function(x, ScalarFunction::Exp); }
Element abs(const Element& x) { return apply_function(x, ScalarFunction::Abs); }

std::vector<std::complex<double>> operator_spectrum(const VOperator& t) {
  std::vector<std::complex<double>> out;
  if (t.dim() == 0) return out;
  Eigen::EigenSolver<Eigen::MatrixXd> es(t.matrix(), false);
  const auto& ev = es.eigenvalues();
  out.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<double> real_operator_spectrum(const VOperator& t, double tol) {
  std::vector<double> out;
  for (const auto& z : operator_spectrum(t)) {
    if (std::abs(z.imag()) > tol * detail::scale_of(std::abs(z))) {
      throw JordanError(Errc::DomainViolation,
                        "operator has a non-real eigenvalue with imaginary part " +
                            describe(z.imag()),
                        z.imag());
    }
    out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<double, double> hull_check(const Element& x) {
  const auto spec_x = eigenvalues(x);
  std::vector<double> spec_l;
  for (const auto& z : operator_spectrum(L_op(x))) spec_l.push_back(z.real());
  const auto [lo, hi] = std::minmax_element(spec_l.begin(), spec_l.end());
  return {*lo - spec_x.front(), *hi - spec_x.back()};
}

VOperator operator_exp(const VOperator& t) {
  Eigen::MatrixXd e = t.matrix().exp();
  return VOperator(t.algebra(), std::move(e));
}

std::vector<double> cluster_values(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  size_t i = 0;
  while (i < values.size()) {
    size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] <= tol) sum += values[j++];
    out.push_back(sum / static_cast<double>(j - i));
    i = j;
  }
  return out;
}

double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double gap = 0.0;
  for (size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

}  // namespace jordan
