#pragma once

// Homotopes V_u with x ._u y = U_{x,y}(u). They are represented by the pair
// (base algebra, u); every computation goes back to base-algebra U-operators.

#include <optional>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/structure.hpp"

namespace jordan {

struct HomotopeAlgebra {
  Algebra base;
  Element u;
  std::optional<Element> unit_u;  // u^{-1}; present when u is invertible

  bool is_isotope() const { return unit_u.has_value(); }
};

// Any u is accepted; the unit is filled in when u is invertible.
HomotopeAlgebra make_homotope(const Element& u);

Element homotope_product(const HomotopeAlgebra& h, const Element& x, const Element& y);
// x^{2_u} = U_x u.
Element homotope_square(const HomotopeAlgebra& h, const Element& x);
// U^u_x = U_x U_u.
VOperator homotope_U(const HomotopeAlgebra& h, const Element& x);

// U_u^{-1} x^{-1}. Throws NotInvertible when u or x is singular.
Element isotope_inverse(const HomotopeAlgebra& h, const Element& x);

// Spectrum of g(z) in the isotope V_{g(1)^{-1}}. Since g(z) - lambda g(1) =
// g(z - lambda 1), it coincides with sigma(z). Throws NotInStr.
std::vector<double> isotope_spectrum(const VOperator& g, const Element& z, double tol = kDefaultTol);
// g(z) lies in the positive cone of V_{g(1)^{-1}}.
bool isotope_positive(const VOperator& g, const Element& z, double tol = kDefaultTol);

struct IsotopeIsomorphism {
  bool isomorphic = false;
  // U_{v^{-1/2}} L_eps with u = v o eps; maps V onto V_u.
  std::optional<VOperator> witness;
  double min_u_eigenvalue = 0.0;
  double multiplicativity_residual = 0.0;
};

// V_u is isomorphic to V exactly when sigma(U_u) > 0. Throws NotInvertible.
IsotopeIsomorphism isotope_isomorphic(const Element& u, double tol = kDefaultTol,
                                      int pairs = 100, std::uint64_t seed = kResidualSeed);

}  // namespace jordan
