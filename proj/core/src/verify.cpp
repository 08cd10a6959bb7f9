#include "jordan/verify.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "detail.hpp"
#include "json_io.hpp"
#include "jordan/cone.hpp"
#include "jordan/herm.hpp"
#include "jordan/isotope.hpp"
#include "jordan/sampling.hpp"
#include "jordan/spectral.hpp"
#include "jordan/structure.hpp"

namespace jordan {

namespace {

using detail::relative_gap;
using detail::scale_of;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double rel(const Element& a, const Element& b) { return relative_gap(a.coords(), b.coords()); }
double rel(const VOperator& a, const VOperator& b) { return relative_gap(a.matrix(), b.matrix()); }

Element random_invertible(const Algebra& a, Sampler& s) {
  for (;;) {
    Element x = s.element(a);
    if (is_invertible(x)) return x;
  }
}

// v o eps with v in Omega and eps a random central symmetry.
Element twisted_cone(const Algebra& a, Sampler& s) {
  const Element v = s.cone_element(a);
  const Element p = s.central_projection(a);
  return jordan_product(v, 2.0 * p - unit(a));
}

double min_u_eigenvalue(const Element& x) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& z : operator_spectrum(U_op(x))) m = std::min(m, z.real());
  return m;
}

struct Context {
  const Algebra& a;
  Sampler& s;
  int trial;
  double tol;
};

struct CheckDef {
  const char* name;
  const char* anchor;
  // Tolerance floor; the record tolerance is max(tol, floor).
  double floor;
  bool herm_only;
  std::function<double(Context&)> run;
};

double spectral_mapping(const Element& x, const Element& fx, double (*f)(double)) {
  std::vector<double> mapped;
  double top = 1.0;
  for (double l : eigenvalues(x)) {
    mapped.push_back(f(l));
    top = std::max(top, std::abs(f(l)));
  }
  return multiset_distance(eigenvalues(fx), mapped) / top;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks = {
      {"jordan_identity", "x^2 o (x o y) = x o (x^2 o y)", 0.0, false,
       [](Context& c) {
         const Element x = c.s.element(c.a), y = c.s.element(c.a);
         const Element x2 = square(x);
         return rel(jordan_product(x2, jordan_product(x, y)), jordan_product(x, jordan_product(x2, y)));
       }},
      {"u_polarization", "U_{x,y} = L_x L_y + L_y L_x - L_{x o y} = (U_{x+y} - U_x - U_y)/2", 0.0, false,
       [](Context& c) {
         const Element x = c.s.element(c.a), y = c.s.element(c.a);
         return rel(U_bilinear(x, y), U_bilinear_polarized(x, y));
       }},
      {"fundamental_formula", "U_{U_x y} = U_x U_y U_x", 0.0, false,
       [](Context& c) {
         const Element x = c.s.element(c.a), y = c.s.element(c.a);
         const VOperator ux = U_op(x);
         return rel(U_op(ux(y)), ux * U_op(y) * ux);
       }},
      {"exp_quadratic", "e^{2 L_v} = U_{e^v}", 0.0, false,
       [](Context& c) {
         const Element v = c.s.element(c.a, 0.5);
         return rel(operator_exp(2.0 * L_op(v)), U_op(exp(v)));
       }},
      {"jb_norm_axioms", "||x o y|| <= ||x|| ||y||, ||x^2|| = ||x||^2, ||x^2|| <= ||x^2 + y^2||", 0.0, false,
       [](Context& c) {
         const Element x = c.s.element(c.a), y = c.s.element(c.a);
         const double nx = jb_norm(x), ny = jb_norm(y);
         const Element x2 = square(x), y2 = square(y);
         double r = std::max(0.0, jb_norm(jordan_product(x, y)) - nx * ny) / scale_of(nx * ny);
         r = std::max(r, std::abs(jb_norm(x2) - nx * nx) / scale_of(nx * nx));
         r = std::max(r, std::max(0.0, jb_norm(x2) - jb_norm(x2 + y2)) / scale_of(jb_norm(x2 + y2)));
         r = std::max(r, std::abs(nx - order_unit_norm(x)) / scale_of(nx));
         return r;
       }},
      {"inverse_law", "x o x^{-1} = 1, U_x x^{-1} = x", 0.0, false,
       [](Context& c) {
         const Element x = twisted_cone(c.a, c.s);
         const Element xi = inverse(x);
         return std::max(rel(jordan_product(x, xi), unit(c.a)), rel(U_op(x)(xi), x));
       }},
      {"spectral_reconstruction", "x = sum lambda_i e_i", 0.0, false,
       [](Context& c) {
         const Element x = c.s.element(c.a);
         return rel(spectral_decompose(x).reconstruct(), x);
       }},
      {"spectral_mapping_square", "sigma(x^2) = sigma(x)^2", 0.0, false,
       [](Context& c) {
         const Element x = c.s.element(c.a);
         return spectral_mapping(x, square(x), [](double l) { return l * l; });
       }},
      {"spectral_mapping_exp", "sigma(e^x) = e^{sigma(x)}", 0.0, false,
       [](Context& c) {
         const Element x = c.s.element(c.a);
         return spectral_mapping(x, exp(x), [](double l) { return std::exp(l); });
       }},
      {"hull_equality", "co sigma(L_x) = co sigma(x)", 1e-8, false,
       [](Context& c) {
         const Element x = c.s.element(c.a);
         const auto [lo, hi] = hull_check(x);
         return std::max(std::abs(lo), std::abs(hi)) / scale_of(jb_norm(x));
       }},
      {"cone_transport", "U_{y^{1/2}} U_{x^{-1/2}} x = y", 0.0, false,
       [](Context& c) {
         const Element x = c.s.cone_element(c.a), y = c.s.cone_element(c.a);
         const VOperator g = transport(x, y);
         return preserves_cone(g) ? rel(g(x), y) : 1.0;
       }},
      {"cone_retraction", "F(g,0) = g, F(g,1) in Aut, F(k,t) = k", 0.0, false,
       [](Context& c) {
         const VOperator k = c.s.automorphism(c.a);
         const VOperator g = U_op(c.s.cone_element(c.a)) * k;
         const double t = c.s.uniform(0.0, 1.0);
         const VOperator f1 = cone_retraction(g, 1.0);
         double r = rel(cone_retraction(g, 0.0), g);
         r = std::max(r, str_residual(f1));
         r = std::max(r, rel(f1(unit(c.a)), unit(c.a)));
         r = std::max(r, rel(cone_retraction(k, t), k));
         return r;
       }},
      {"str_membership", "U_{gx} = g U_x g*", 0.0, false,
       [](Context& c) {
         const auto projections = central_projections(c.a);
         const Element p = projections[static_cast<size_t>(c.trial) % projections.size()];
         const VOperator g = U_op(c.s.cone_element(c.a)) * central_symmetry_op(p) * c.s.automorphism(c.a);
         return str_residual(g);
       }},
      {"str_decompose", "g = U_v S_p k", 1e-7, false,
       [](Context& c) {
         const auto projections = central_projections(c.a);
         const Element p = projections[static_cast<size_t>(c.trial) % projections.size()];
         const Element v = c.s.cone_element(c.a);
         const VOperator k = c.s.automorphism(c.a);
         const VOperator g = U_op(v) * central_symmetry_op(p) * k;
         const StrDecomposition d = str_decompose(make_str_element(g, c.tol));
         double r = (d.v - v).coord_norm() / scale_of(v.coord_norm());
         r = std::max(r, (d.p - p).coord_norm());
         r = std::max(r, rel(d.k, k));
         r = std::max(r, str_residual(d.k));
         return r;
       }},
      {"involutive_classification", "g* = g^{-1} iff v = 1", 0.0, false,
       [](Context& c) {
         const bool trivial_v = c.s.coin();
         const Element v = trivial_v ? unit(c.a) : c.s.cone_element(c.a);
         const VOperator g = U_op(v) * central_symmetry_op(c.s.central_projection(c.a)) * c.s.automorphism(c.a);
         const StrElement se = make_str_element(g, c.tol);
         const bool involutive = rel(se.adj, g.inverse()) <= 1e-7;
         return involutive == str_decompose(se).involutive() ? 0.0 : 1.0;
       }},
      {"go_decompose", "g = U_y k, y = g(1)^{1/2}", 0.0, false,
       [](Context& c) {
         const VOperator g = U_op(c.s.cone_element(c.a)) * c.s.automorphism(c.a);
         const GODecomposition d = go_decompose(make_str_element(g, c.tol), c.tol);
         return rel(U_op(d.y) * d.k, g);
       }},
      {"u_positive", "sigma(U_x) > 0 iff x = v o eps", 0.0, false,
       [](Context& c) {
         const Element x = c.s.coin() ? twisted_cone(c.a, c.s) : random_invertible(c.a, c.s);
         const bool expected = min_u_eigenvalue(x) > 0.0;
         try {
           const UPositiveDecomposition d = u_positive_decompose(x, c.tol);
           if (!expected || !is_central((d.eps + unit(c.a)) * 0.5, c.tol)) return 1.0;
           return rel(jordan_product(d.v, d.eps), x);
         } catch (const JordanError& e) {
           if (e.code() != Errc::UxNotPositive) throw;
           return expected ? 1.0 : 0.0;
         }
       }},
      {"u_spectrum_split", "sigma(U_x) = sigma_+ u sigma_- u sigma_0, sigma_0 <= 0", 1e-7, false,
       [](Context& c) {
         const Element x = random_invertible(c.a, c.s);
         const USpectrumSplit split = u_spectrum_split(x);
         std::vector<double> all;
         for (const auto& z : operator_spectrum(U_op(x))) all.push_back(z.real());
         std::vector<double> joined = split.plus;
         joined.insert(joined.end(), split.minus.begin(), split.minus.end());
         joined.insert(joined.end(), split.zero.begin(), split.zero.end());
         const double top = scale_of(*std::max_element(all.begin(), all.end(),
                                                        [](double p, double q) { return std::abs(p) < std::abs(q); }));
         double r = multiset_distance(all, joined) / std::abs(top);
         for (double l : split.zero) r = std::max(r, std::max(0.0, l) / std::abs(top));
         return r;
       }},
      {"pierce", "U_p + U_{1-p} + 2U_{p,1-p} = Id", 0.0, false,
       [](Context& c) {
         const SpectralData sd = spectral_decompose(c.s.element(c.a));
         Element p = zero(c.a);
         for (const auto& e : sd.frame) {
           if (c.s.coin()) p += e;
         }
         const PierceDecomposition pd = pierce_decompose(p, 1e-8);
         const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(c.a.dim(), c.a.dim());
         double r = relative_gap((pd.p1 + pd.p0 + pd.phalf).matrix(), id);
         for (const VOperator* q : {&pd.p1, &pd.p0, &pd.phalf}) {
           r = std::max(r, (*q * *q - *q).norm() / scale_of(q->norm()));
         }
         if (pd.rank1 + pd.rank0 + pd.rank_half != c.a.dim()) r = 1.0;
         return r;
       }},
      {"lie_split", "str = L + der", 0.0, false,
       [](Context& c) {
         const Element u = c.s.element(c.a);
         const VOperator d = c.s.derivation(c.a);
         const LieSplit split = lie_split(L_op(u) + d, c.tol);
         double r = str_lie_residual(L_op(u) + d);
         r = std::max(r, (split.u - u).coord_norm() / scale_of(u.coord_norm()));
         r = std::max(r, (split.d - d).norm() / scale_of(d.norm()));
         return r;
       }},
      {"homotope_jordan_identity", "(x^2 ._u (x ._u y)) = (x ._u (x^2 ._u y))", 0.0, false,
       [](Context& c) {
         const Element w = c.s.element(c.a);
         // half the trials use a singular u
         const Element u = c.s.coin() ? w : map_spectrum(w, [](double l) { return std::max(l, 0.0); });
         const HomotopeAlgebra h = make_homotope(u);
         const Element x = c.s.element(c.a), y = c.s.element(c.a);
         const Element x2 = homotope_product(h, x, x);
         double r = rel(x2, homotope_square(h, x));
         r = std::max(r, rel(homotope_product(h, x2, homotope_product(h, x, y)),
                             homotope_product(h, x, homotope_product(h, x2, y))));
         return r;
       }},
      {"homotope_unit_law", "u^{-1} ._u x = x", 0.0, false,
       [](Context& c) {
         const HomotopeAlgebra h = make_homotope(twisted_cone(c.a, c.s));
         const Element x = c.s.element(c.a);
         return rel(homotope_product(h, *h.unit_u, x), x);
       }},
      {"isotope_inverse_law", "U^u_x (x^{-1_u}) = x", 0.0, false,
       [](Context& c) {
         const HomotopeAlgebra h = make_homotope(random_invertible(c.a, c.s));
         const Element x = random_invertible(c.a, c.s);
         const Element xi = isotope_inverse(h, x);
         const VOperator ux = homotope_U(h, x);
         const double bound = ux.operator_norm() * xi.coord_norm();
         return (ux(xi) - x).coord_norm() / std::max({x.coord_norm(), bound, 1e-300});
       }},
      {"isotope_isomorphic", "V_u isomorphic to V iff sigma(U_u) > 0", 0.0, false,
       [](Context& c) {
         const Element u = c.s.coin() ? twisted_cone(c.a, c.s) : random_invertible(c.a, c.s);
         const IsotopeIsomorphism iso = isotope_isomorphic(u, c.tol, 16, c.s.uniform_int(0, 1 << 30));
         if (iso.isomorphic != (min_u_eigenvalue(u) > 0.0)) return 1.0;
         return iso.multiplicativity_residual;
       }},
      {"herm_recover_implementer", "g(A) = T A T^dagger, T unique up to a phase", 1e-8, true,
       [](Context& c) {
         const int n = c.a.order();
         const Eigen::MatrixXcd t = to_matrix(c.s.cone_element(c.a)) * c.s.unitary(n);
         const bool flag = c.s.coin();
         const VOperator g = congruence_op(c.a, t, flag);
         const ImplementingMap m = recover_implementer(g, c.tol);
         // conjugation is trivial on Herm(1)
         if (m.conjugate_flag != (flag && n > 1)) return 1.0;
         return std::max(m.residual, (m.T - phase_normalize(t)).norm() / t.norm());
       }},
      {"herm_aut_component", "unitary vs antiunitary component", 0.0, true,
       [](Context& c) {
         const int n = c.a.order();
         const bool f1 = c.s.coin(), f2 = c.s.coin();
         const VOperator k1 = congruence_op(c.a, c.s.unitary(n), f1);
         const VOperator k2 = congruence_op(c.a, c.s.unitary(n), f2);
         const auto expect = [n](bool anti) {
           return anti && n > 1 ? AutComponent::Antiunitary : AutComponent::Unitary;
         };
         const bool ok = aut_component(k1) == expect(f1) && aut_component(k1 * k2) == expect(f1 != f2);
         return ok ? 0.0 : 1.0;
       }},
      {"herm_lift", "k = Ad(e^Z W)", 1e-8, true,
       [](Context& c) {
         const int n = c.a.order();
         Eigen::MatrixXcd z = c.s.skew_hermitian(n, 0.3);
         VOperator k = congruence_op(c.a, z.exp());
         while ((k - VOperator::identity(c.a)).operator_norm() >= 0.9) {
           z *= 0.5;
           k = congruence_op(c.a, z.exp());
         }
         return lift_automorphism(k, c.s.uniform_int(0, n - 1)).residual;
       }},
      {"herm_lift_one_parameter", "s(exp(t ad Z)) = exp(tZ) up to a phase", 1e-8, true,
       [](Context& c) {
         const int n = c.a.order();
         Eigen::MatrixXcd z = c.s.skew_hermitian(n, 0.3);
         while ((operator_exp(0.5 * commutator_op(c.a, z)) - VOperator::identity(c.a)).operator_norm() >= 0.9) {
           z *= 0.5;
         }
         double r = 0.0;
         for (double t : {0.1, 0.5}) {
           const Eigen::MatrixXcd etz = Eigen::MatrixXcd(t * z).exp();
           const VOperator k = operator_exp(t * commutator_op(c.a, z));
           const AutLift lift = lift_automorphism(k);
           r = std::max(r, (phase_normalize(lift.s) - phase_normalize(etz)).norm());
         }
         return r;
       }},
      {"herm_derivation_to_skew", "der = {ad Z : Z^dagger = -Z}", 0.0, true,
       [](Context& c) {
         const int n = c.a.order();
         Eigen::MatrixXcd z0 = c.s.skew_hermitian(n);
         z0 -= (z0.trace() / static_cast<double>(n)) * Eigen::MatrixXcd::Identity(n, n);
         const Eigen::MatrixXcd z = derivation_to_skew(commutator_op(c.a, z0), c.tol);
         return (z - z0).norm() / scale_of(z0.norm());
       }},
      {"herm_str_as_lr", "str = {A -> TA + AT^dagger}", 0.0, true,
       [](Context& c) {
         const int n = c.a.order();
         const Eigen::MatrixXcd t = c.s.complex_gaussian(n);
         const VOperator h = lr_op(c.a, t);
         const Eigen::MatrixXcd back = str_as_lr(h, c.tol);
         // T is determined up to i t 1
         const Eigen::MatrixXcd diff = t - back;
         const std::complex<double> shift = diff.trace() / static_cast<double>(n);
         double r = (diff - shift * Eigen::MatrixXcd::Identity(n, n)).norm() / t.norm();
         r = std::max(r, std::abs(shift.real()));
         return std::max(r, rel(lr_op(c.a, back), h));
       }},
      {"herm_two_components", "Str = G(Omega) u -G(Omega)", 0.0, true,
       [](Context& c) {
         const int n = c.a.order();
         const bool minus = c.s.coin();
         VOperator g = U_op(c.s.cone_element(c.a)) * congruence_op(c.a, c.s.unitary(n), c.s.coin());
         if (minus) g = -g;
         const StrComponent got = str_two_components(g, c.tol);
         return (got == StrComponent::Minus) == minus ? 0.0 : 1.0;
       }},
  };
  return checks;
}

bool applies(const CheckDef& def, const Algebra& a) {
  return !def.herm_only || a.kind() == AlgebraKind::HermComplex;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

std::vector<std::string> suite_checks(const Algebra& a) {
  std::vector<std::string> names;
  for (const auto& def : registry()) {
    if (applies(def, a)) names.emplace_back(def.name);
  }
  std::sort(names.begin(), names.end());
  return names;
}

VerificationReport run_suite(const Algebra& a, std::uint64_t seed, int trials, double tol) {
  if (trials < 1) throw JordanError(Errc::DomainViolation, "run_suite: trials must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report{"jordan-cone", a, seed, trials, tol, {}, 0.0};
  const auto& checks = registry();
  for (std::size_t ci = 0; ci < checks.size(); ++ci) {
    const CheckDef& def = checks[ci];
    if (!applies(def, a)) continue;
    for (int t = 0; t < trials; ++t) {
      Sampler sampler(splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(ci) << 32) | static_cast<unsigned>(t))));
      Context ctx{a, sampler, t, tol};
      CheckRecord rec{def.name, def.anchor, t, 0.0, std::max(tol, def.floor), false, {}};
      try {
        rec.residual = def.run(ctx);
        rec.pass = rec.residual <= rec.tolerance;
      } catch (const std::exception& e) {
        rec.residual = std::numeric_limits<double>::quiet_NaN();
        rec.error = e.what();
      }
      report.records.push_back(std::move(rec));
    }
  }
  std::sort(report.records.begin(), report.records.end(), [](const CheckRecord& x, const CheckRecord& y) {
    return x.check != y.check ? x.check < y.check : x.trial < y.trial;
  });
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : r.records) {
    nlohmann::json j = {{"check", rec.check},   {"anchor", rec.anchor},       {"trial", rec.trial},
                        {"tolerance", rec.tolerance}, {"pass", rec.pass}};
    if (std::isfinite(rec.residual)) {
      j["residual"] = rec.residual;
    } else {
      j["residual"] = nullptr;
    }
    if (!rec.error.empty()) j["error"] = rec.error;
    records.push_back(std::move(j));
  }
  nlohmann::json doc = {{"suite", r.suite},
                        {"algebra", detail::algebra_to_json(r.algebra)},
                        {"algebra_name", r.algebra.name()},
                        {"seed", r.seed},
                        {"trials", r.trials},
                        {"tolerance", r.tol},
                        {"passed", r.passed()},
                        {"failures", r.failures()},
                        {"records", records}};
  return doc.dump(2) + "\n";
}

}  // namespace jordan
