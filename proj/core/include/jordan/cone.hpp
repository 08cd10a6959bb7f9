#pragma once

#include <cstdint>

#include "jordan/algebra.hpp"

namespace jordan {

// x in Omega: min sigma(x) > tol * max(1, ||x||).
bool in_cone(const Element& x, double tol = kDefaultTol);

// x <= y in the closed order: min sigma(y - x) >= -tol * max(1, ||y - x||).
bool order_leq(const Element& x, const Element& y, double tol = kDefaultTol);

// g = U_{y^{1/2}} U_{x^{-1/2}}, an element of G(Omega) with g(x) = y.
// Throws NotInCone.
VOperator transport(const Element& x, const Element& y);

// F(g, t) = U_{exp(-t ln(g1) / 2)} g, the deformation retraction of G(Omega)
// onto Aut. Throws NotConePreserving when g is not in G(Omega).
VOperator cone_retraction(const VOperator& g, double t, double tol = kDefaultTol);

// Sampled test for g(Omega) in Omega: the unit and 32 random squares
// (x^2 + 0.1) must land in the cone.
bool preserves_cone(const VOperator& g, std::uint64_t seed = 0x5eed, double tol = kDefaultTol);

// inf{lambda : -lambda 1 <= x <= lambda 1} by bisection on order_leq.
// Independent of the spectral-radius formula used by jb_norm.
double order_unit_norm(const Element& x, double tol = 1e-12);

}  // namespace jordan
