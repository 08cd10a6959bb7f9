#include "jordan/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "jordan/spectral.hpp"

namespace jordan {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NonFinite: return "NonFinite";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::NotInCone: return "NotInCone";
    case Errc::NotConePreserving: return "NotConePreserving";
    case Errc::SingularOperator: return "SingularOperator";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotInStr: return "NotInStr";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::UxNotPositive: return "UxNotPositive";
    case Errc::CentralityViolation: return "CentralityViolation";
    case Errc::NotInLieAlgebra: return "NotInLieAlgebra";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::NotDerivation: return "NotDerivation";
    case Errc::UndecidableWitness: return "UndecidableWitness";
    case Errc::OutOfNeighborhood: return "OutOfNeighborhood";
    case Errc::InconsistentSolve: return "InconsistentSolve";
    case Errc::LiftFailure: return "LiftFailure";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Algebra

struct Algebra::Impl {
  AlgebraKind kind;
  int order = 0;
  int dim = 0;
  std::vector<Algebra> parts;  // DirectSum only
  std::vector<int> offsets;    // DirectSum only
};

namespace {

int simple_dim(AlgebraKind kind, int n) {
  switch (kind) {
    case AlgebraKind::SymReal: return n * (n + 1) / 2;
    case AlgebraKind::HermComplex: return n * n;
    case AlgebraKind::SpinFactor: return n;
    case AlgebraKind::DirectSum: break;
  }
  return 0;
}

}  // namespace

Algebra Algebra::sym_real(int n) {
  if (n < 1) throw JordanError(Errc::DomainViolation, "sym_real: n must be positive");
  auto impl = std::make_shared<Impl>();
  impl->kind = AlgebraKind::SymReal;
  impl->order = n;
  impl->dim = simple_dim(impl->kind, n);
  return Algebra(std::move(impl));
}

Algebra Algebra::herm_complex(int n) {
  if (n < 1) throw JordanError(Errc::DomainViolation, "herm_complex: n must be positive");
  auto impl = std::make_shared<Impl>();
  impl->kind = AlgebraKind::HermComplex;
  impl->order = n;
  impl->dim = simple_dim(impl->kind, n);
  return Algebra(std::move(impl));
}

Algebra Algebra::spin_factor(int d) {
  if (d < 1) throw JordanError(Errc::DomainViolation, "spin_factor: d must be positive");
  auto impl = std::make_shared<Impl>();
  impl->kind = AlgebraKind::SpinFactor;
  impl->order = d;
  impl->dim = d;
  return Algebra(std::move(impl));
}

Algebra Algebra::direct_sum(const std::vector<Algebra>& parts) {
  if (parts.empty()) throw JordanError(Errc::DomainViolation, "direct_sum: no summands");
  auto impl = std::make_shared<Impl>();
  impl->kind = AlgebraKind::DirectSum;
  for (const auto& p : parts) {
    for (const auto& b : p.blocks()) {
      impl->offsets.push_back(impl->dim);
      impl->dim += b.dim();
      impl->parts.push_back(b);
    }
  }
  return Algebra(std::move(impl));
}

Algebra Algebra::parse(const std::string& text) {
  std::vector<Algebra> parts;
  if (!text.empty() && text.back() == '+') throw JordanError(Errc::ParseError, "algebra descriptor ends with '+'");
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, '+')) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw JordanError(Errc::ParseError, "algebra '" + token + "' must look like kind:n");
    }
    const std::string kind = token.substr(0, colon);
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(token.substr(colon + 1), &used);
      if (used != token.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw JordanError(Errc::ParseError, "algebra '" + token + "' has a bad size");
    }
    if (n < 1) throw JordanError(Errc::ParseError, "algebra '" + token + "' needs n >= 1");
    if (kind == "sym") {
      parts.push_back(sym_real(n));
    } else if (kind == "herm") {
      parts.push_back(herm_complex(n));
    } else if (kind == "spin") {
      parts.push_back(spin_factor(n));
    } else {
      throw JordanError(Errc::ParseError, "unknown algebra kind '" + kind + "'");
    }
  }
  if (parts.empty()) throw JordanError(Errc::ParseError, "empty algebra descriptor");
  if (parts.size() == 1) return parts.front();
  return direct_sum(parts);
}

AlgebraKind Algebra::kind() const { return impl_->kind; }
int Algebra::order() const { return impl_->order; }
int Algebra::dim() const { return impl_->dim; }

std::vector<Algebra> Algebra::blocks() const {
  if (impl_->kind == AlgebraKind::DirectSum) return impl_->parts;
  return {*this};
}

std::vector<int> Algebra::offsets() const {
  if (impl_->kind == AlgebraKind::DirectSum) return impl_->offsets;
  return {0};
}

std::string Algebra::name() const {
  switch (impl_->kind) {
    case AlgebraKind::SymReal: return "sym:" + std::to_string(impl_->order);
    case AlgebraKind::HermComplex: return "herm:" + std::to_string(impl_->order);
    case AlgebraKind::SpinFactor: return "spin:" + std::to_string(impl_->order);
    case AlgebraKind::DirectSum: {
      std::string out;
      for (size_t i = 0; i < impl_->parts.size(); ++i) {
        if (i) out += "+";
        out += impl_->parts[i].name();
      }
      return out;
    }
  }
  return {};
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.kind() != b.kind() || a.dim() != b.dim() || a.order() != b.order()) return false;
  if (a.kind() != AlgebraKind::DirectSum) return true;
  const auto& pa = a.impl_->parts;
  const auto& pb = b.impl_->parts;
  return pa.size() == pb.size() && std::equal(pa.begin(), pa.end(), pb.begin());
}

void require_same_algebra(const Algebra& a, const Algebra& b, const char* where) {
  if (a != b) {
    throw JordanError(Errc::AlgebraMismatch,
                      std::string(where) + ": " + a.name() + " vs " + b.name());
  }
}

// ---------------------------------------------------------------------------
// Element

Element::Element(Algebra algebra, Eigen::VectorXd coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim()) {
    throw JordanError(Errc::AlgebraMismatch,
                      "element of " + algebra_.name() + " needs " +
                          std::to_string(algebra_.dim()) + " coordinates, got " +
                          std::to_string(coords_.size()));
  }
  if (!coords_.allFinite()) throw JordanError(Errc::NonFinite, "element coordinates");
}

Element Element::operator-() const { return Element(algebra_, -coords_); }

Element& Element::operator+=(const Element& other) {
  require_same_algebra(algebra_, other.algebra_, "element +");
  coords_ += other.coords_;
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_algebra(algebra_, other.algebra_, "element -");
  coords_ -= other.coords_;
  return *this;
}

Element& Element::operator*=(double s) {
  coords_ *= s;
  return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(double s, Element a) { return a *= s; }
Element operator*(Element a, double s) { return a *= s; }

Element zero(const Algebra& a) { return Element(a, Eigen::VectorXd::Zero(a.dim())); }

Element unit(const Algebra& a) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(a.dim());
  const auto blocks = a.blocks();
  const auto offsets = a.offsets();
  for (size_t b = 0; b < blocks.size(); ++b) {
    const int off = offsets[b];
    switch (blocks[b].kind()) {
      case AlgebraKind::SymReal:
      case AlgebraKind::HermComplex:
        for (int i = 0; i < blocks[b].order(); ++i) c[off + i] = 1.0;
        break;
      case AlgebraKind::SpinFactor:
        c[off] = 1.0;
        break;
      case AlgebraKind::DirectSum:
        break;
    }
  }
  return Element(a, std::move(c));
}

Element basis_element(const Algebra& a, int i) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(a.dim());
  c[i] = 1.0;
  return Element(a, std::move(c));
}

// ---------------------------------------------------------------------------
// VOperator

VOperator::VOperator(Algebra algebra, Eigen::MatrixXd matrix)
    : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != algebra_.dim() || matrix_.cols() != algebra_.dim()) {
    throw JordanError(Errc::AlgebraMismatch,
                      "operator on " + algebra_.name() + " must be " +
                          std::to_string(algebra_.dim()) + "x" + std::to_string(algebra_.dim()));
  }
  if (!matrix_.allFinite()) throw JordanError(Errc::NonFinite, "operator entries");
}

VOperator VOperator::identity(const Algebra& a) {
  return VOperator(a, Eigen::MatrixXd::Identity(a.dim(), a.dim()));
}

VOperator VOperator::zero(const Algebra& a) {
  return VOperator(a, Eigen::MatrixXd::Zero(a.dim(), a.dim()));
}

Element VOperator::operator()(const Element& x) const {
  require_same_algebra(algebra_, x.algebra(), "operator apply");
  return Element(algebra_, matrix_ * x.coords());
}

VOperator VOperator::inverse() const {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(matrix_);
  if (!lu.isInvertible()) throw JordanError(Errc::SingularOperator, "operator is not invertible");
  return VOperator(algebra_, lu.inverse());
}

VOperator VOperator::operator-() const { return VOperator(algebra_, -matrix_); }

double VOperator::operator_norm() const {
  if (matrix_.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix_);
  return svd.singularValues()[0];
}

VOperator operator*(const VOperator& a, const VOperator& b) {
  require_same_algebra(a.algebra(), b.algebra(), "operator compose");
  return VOperator(a.algebra(), a.matrix() * b.matrix());
}

VOperator operator+(const VOperator& a, const VOperator& b) {
  require_same_algebra(a.algebra(), b.algebra(), "operator +");
  return VOperator(a.algebra(), a.matrix() + b.matrix());
}

VOperator operator-(const VOperator& a, const VOperator& b) {
  require_same_algebra(a.algebra(), b.algebra(), "operator -");
  return VOperator(a.algebra(), a.matrix() - b.matrix());
}

VOperator operator*(double s, const VOperator& a) { return VOperator(a.algebra(), s * a.matrix()); }

// ---------------------------------------------------------------------------
// Block conversions

namespace detail {

Eigen::MatrixXcd block_to_matrix(AlgebraKind kind, int n, const double* c) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c[i];
  const int pairs = pair_count(n);
  int q = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++q) {
      const double re = c[n + q] * kInvSqrt2;
      double im = 0.0;
      if (kind == AlgebraKind::HermComplex) im = c[n + pairs + q] * kInvSqrt2;
      m(i, j) = {re, im};
      m(j, i) = {re, -im};
    }
  }
  return m;
}

void matrix_to_block(AlgebraKind kind, int n, const Eigen::MatrixXcd& m, double* out) {
  for (int i = 0; i < n; ++i) out[i] = m(i, i).real();
  const int pairs = pair_count(n);
  int q = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++q) {
      out[n + q] = (m(i, j).real() + m(j, i).real()) * kInvSqrt2;
      if (kind == AlgebraKind::HermComplex) {
        out[n + pairs + q] = (m(i, j).imag() - m(j, i).imag()) * kInvSqrt2;
      }
    }
  }
}

Eigen::MatrixXd block_to_real_matrix(int n, const double* c) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c[i];
  int q = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++q) {
      m(i, j) = m(j, i) = c[n + q] * kInvSqrt2;
    }
  }
  return m;
}

void real_matrix_to_block(int n, const Eigen::MatrixXd& m, double* out) {
  for (int i = 0; i < n; ++i) out[i] = m(i, i);
  int q = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++q) out[n + q] = (m(i, j) + m(j, i)) * kInvSqrt2;
  }
}

}  // namespace detail

Eigen::MatrixXcd to_matrix(const Element& x) {
  const auto& a = x.algebra();
  if (a.kind() != AlgebraKind::SymReal && a.kind() != AlgebraKind::HermComplex) {
    throw JordanError(Errc::AlgebraMismatch, "to_matrix needs a matrix algebra, got " + a.name());
  }
  return detail::block_to_matrix(a.kind(), a.order(), x.coords().data());
}

Element from_matrix(const Algebra& a, const Eigen::MatrixXcd& m) {
  if (a.kind() != AlgebraKind::SymReal && a.kind() != AlgebraKind::HermComplex) {
    throw JordanError(Errc::AlgebraMismatch, "from_matrix needs a matrix algebra, got " + a.name());
  }
  if (m.rows() != a.order() || m.cols() != a.order()) {
    throw JordanError(Errc::AlgebraMismatch, "from_matrix: wrong matrix size");
  }
  Eigen::VectorXd c(a.dim());
  detail::matrix_to_block(a.kind(), a.order(), m, c.data());
  return Element(a, std::move(c));
}

// ---------------------------------------------------------------------------
// Products

namespace {

void block_product(const Algebra& block, const double* x, const double* y, double* out) {
  const int n = block.order();
  switch (block.kind()) {
    case AlgebraKind::SymReal: {
      const Eigen::MatrixXd a = detail::block_to_real_matrix(n, x);
      const Eigen::MatrixXd b = detail::block_to_real_matrix(n, y);
      const Eigen::MatrixXd p = 0.5 * (a * b + b * a);
      detail::real_matrix_to_block(n, p, out);
      return;
    }
    case AlgebraKind::HermComplex: {
      const Eigen::MatrixXcd a = detail::block_to_matrix(block.kind(), n, x);
      const Eigen::MatrixXcd b = detail::block_to_matrix(block.kind(), n, y);
      const Eigen::MatrixXcd p = 0.5 * (a * b + b * a);
      detail::matrix_to_block(block.kind(), n, p, out);
      return;
    }
    case AlgebraKind::SpinFactor: {
      // (s,u) o (t,w) = (st + <u,w>, s w + t u)
      double head = x[0] * y[0];
      for (int i = 1; i < n; ++i) head += x[i] * y[i];
      for (int i = 1; i < n; ++i) out[i] = x[0] * y[i] + y[0] * x[i];
      out[0] = head;
      return;
    }
    case AlgebraKind::DirectSum:
      break;
  }
}

}  // namespace

Element jordan_product(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra(), "jordan_product");
  const auto& a = x.algebra();
  Eigen::VectorXd out(a.dim());
  const auto blocks = a.blocks();
  const auto offsets = a.offsets();
  for (size_t b = 0; b < blocks.size(); ++b) {
    const int off = offsets[b];
    block_product(blocks[b], x.coords().data() + off, y.coords().data() + off, out.data() + off);
  }
  return Element(a, std::move(out));
}

Element square(const Element& x) { return jordan_product(x, x); }

VOperator L_op(const Element& x) {
  const auto& a = x.algebra();
  const int d = a.dim();
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i) m.col(i) = jordan_product(x, basis_element(a, i)).coords();
  return VOperator(a, std::move(m));
}

VOperator U_op(const Element& x) {
  const VOperator lx = L_op(x);
  return 2.0 * (lx * lx) - L_op(square(x));
}

VOperator U_bilinear(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra(), "U_bilinear");
  const VOperator lx = L_op(x);
  const VOperator ly = L_op(y);
  return lx * ly + ly * lx - L_op(jordan_product(x, y));
}

VOperator U_bilinear_polarized(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra(), "U_bilinear_polarized");
  return 0.5 * (U_op(x + y) - U_op(x) - U_op(y));
}

double jb_norm(const Element& x) {
  const auto ev = eigenvalues(x);
  double r = 0.0;
  for (double v : ev) r = std::max(r, std::abs(v));
  return r;
}

bool is_invertible(const Element& x) {
  const auto ev = eigenvalues(x);
  double smallest = std::numeric_limits<double>::infinity();
  double largest = 0.0;
  for (double v : ev) {
    smallest = std::min(smallest, std::abs(v));
    largest = std::max(largest, std::abs(v));
  }
  return smallest > kInvertibilityCutoff * detail::scale_of(largest);
}

Element inverse(const Element& x) {
  if (!is_invertible(x)) {
    throw JordanError(Errc::NotInvertible, "0 lies in the spectrum of the element");
  }
  const VOperator ux = U_op(x);
  Eigen::VectorXd y = ux.matrix().partialPivLu().solve(x.coords());
  return Element(x.algebra(), std::move(y));
}

double trace_form(const Element& a, const Element& b) {
  require_same_algebra(a.algebra(), b.algebra(), "trace_form");
  const auto blocks = a.algebra().blocks();
  const auto offsets = a.algebra().offsets();
  double total = 0.0;
  for (size_t k = 0; k < blocks.size(); ++k) {
    const int off = offsets[k];
    const int d = blocks[k].dim();
    const double dot = a.coords().segment(off, d).dot(b.coords().segment(off, d));
    total += blocks[k].kind() == AlgebraKind::SpinFactor ? 2.0 * dot : dot;
  }
  return total;
}

}  // namespace jordan
