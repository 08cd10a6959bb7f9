#include "jordan/cone.hpp"

#include <cmath>

#include "detail.hpp"
#include "jordan/sampling.hpp"
#include "jordan/spectral.hpp"
#include "jordan/structure.hpp"

namespace jordan {

bool in_cone(const Element& x, double tol) {
  const auto ev = eigenvalues(x);
  const double radius = std::max(std::abs(ev.front()), std::abs(ev.back()));
  return ev.front() > tol * detail::scale_of(radius);
}

bool order_leq(const Element& x, const Element& y, double tol) {
  require_same_algebra(x.algebra(), y.algebra(), "order_leq");
  const auto ev = eigenvalues(y - x);
  const double radius = std::max(std::abs(ev.front()), std::abs(ev.back()));
  return ev.front() >= -tol * detail::scale_of(radius);
}

VOperator transport(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra(), "transport");
  if (!in_cone(x)) throw JordanError(Errc::NotInCone, "transport source is not positive");
  if (!in_cone(y)) throw JordanError(Errc::NotInCone, "transport target is not positive");
  const Element x_inv_half = map_spectrum(x, [](double l) { return 1.0 / std::sqrt(l); });
  return U_op(sqrt(y)) * U_op(x_inv_half);
}

VOperator cone_retraction(const VOperator& g, double t, double tol) {
  const Algebra& a = g.algebra();
  const Element g1 = g(unit(a));
  if (!in_cone(g1, tol)) {
    throw JordanError(Errc::NotConePreserving, "g(1) is not positive");
  }
  const double res = str_residual(g);
  if (res > tol) {
    throw JordanError(Errc::NotConePreserving, "g is not in the structure group", res);
  }
  const Element shift = (-0.5 * t) * log(g1);
  return U_op(exp(shift)) * g;
}

bool preserves_cone(const VOperator& g, std::uint64_t seed, double tol) {
  const Algebra& a = g.algebra();
  if (!in_cone(g(unit(a)), tol)) return false;
  Sampler sampler(seed);
  for (int i = 0; i < 32; ++i) {
    if (!in_cone(g(sampler.cone_element(a)), tol)) return false;
  }
  return true;
}

double order_unit_norm(const Element& x, double tol) {
  const Element one = unit(x.algebra());
  auto bounded = [&](double lambda) {
    return order_leq(-lambda * one, x, 0.0) && order_leq(x, lambda * one, 0.0);
  };
  double hi = 1.0;
  while (!bounded(hi)) hi *= 2.0;
  double lo = 0.0;
  while (hi - lo > tol * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (bounded(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace jordan
