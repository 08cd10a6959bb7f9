#include "jordan/isotope.hpp"

#include <algorithm>
#include <limits>

#include "detail.hpp"
#include "jordan/sampling.hpp"
#include "jordan/spectral.hpp"

namespace jordan {

namespace {

void require_isotope(const HomotopeAlgebra& h, const char* where) {
  if (!h.is_isotope()) {
    throw JordanError(Errc::NotInvertible, std::string(where) + ": u is not invertible");
  }
}

}  // namespace

HomotopeAlgebra make_homotope(const Element& u) {
  HomotopeAlgebra h{u.algebra(), u, std::nullopt};
  if (is_invertible(u)) h.unit_u = inverse(u);
  return h;
}

Element homotope_product(const HomotopeAlgebra& h, const Element& x, const Element& y) {
  require_same_algebra(h.base, x.algebra(), "homotope_product");
  require_same_algebra(h.base, y.algebra(), "homotope_product");
  return U_bilinear(x, y)(h.u);
}

Element homotope_square(const HomotopeAlgebra& h, const Element& x) {
  require_same_algebra(h.base, x.algebra(), "homotope_square");
  return U_op(x)(h.u);
}

VOperator homotope_U(const HomotopeAlgebra& h, const Element& x) {
  require_same_algebra(h.base, x.algebra(), "homotope_U");
  return U_op(x) * U_op(h.u);
}

Element isotope_inverse(const HomotopeAlgebra& h, const Element& x) {
  require_isotope(h, "isotope_inverse");
  require_same_algebra(h.base, x.algebra(), "isotope_inverse");
  if (!is_invertible(x)) throw JordanError(Errc::NotInvertible, "isotope_inverse: x is not invertible");
  return U_op(*h.unit_u)(inverse(x));
}

std::vector<double> isotope_spectrum(const VOperator& g, const Element& z, double tol) {
  require_same_algebra(g.algebra(), z.algebra(), "isotope_spectrum");
  make_str_element(g, tol);
  return eigenvalues(z);
}

bool isotope_positive(const VOperator& g, const Element& z, double tol) {
  const auto ev = isotope_spectrum(g, z, tol);
  const double radius = std::max(std::abs(ev.front()), std::abs(ev.back()));
  return ev.front() > tol * detail::scale_of(radius);
}

IsotopeIsomorphism isotope_isomorphic(const Element& u, double tol, int pairs, std::uint64_t seed) {
  if (!is_invertible(u)) throw JordanError(Errc::NotInvertible, "isotope_isomorphic: u is not invertible");
  IsotopeIsomorphism out;
  out.min_u_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& z : operator_spectrum(U_op(u))) {
    out.min_u_eigenvalue = std::min(out.min_u_eigenvalue, z.real());
  }
  UPositiveDecomposition dec{u, u};
  try {
    dec = u_positive_decompose(u, tol);
  } catch (const JordanError& e) {
    if (e.code() == Errc::UxNotPositive || e.code() == Errc::CentralityViolation) return out;
    throw;
  }
  out.isomorphic = true;
  const VOperator witness = U_op(map_spectrum(dec.v, [](double l) { return 1.0 / std::sqrt(l); })) *
                            L_op(dec.eps);
  const HomotopeAlgebra h = make_homotope(u);
  Sampler sampler(seed);
  for (int i = 0; i < pairs; ++i) {
    const Element x = sampler.element(u.algebra());
    const Element y = sampler.element(u.algebra());
    out.multiplicativity_residual =
        std::max(out.multiplicativity_residual,
                 detail::relative_gap(witness(jordan_product(x, y)).coords(),
                                      homotope_product(h, witness(x), witness(y)).coords()));
  }
  out.witness = witness;
  return out;
}

}  // namespace jordan
