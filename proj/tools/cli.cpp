#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "jordan/algebra.hpp"
#include "jordan/fixture.hpp"
#include "jordan/herm.hpp"
#include "jordan/isotope.hpp"
#include "jordan/spectral.hpp"
#include "jordan/structure.hpp"
#include "jordan/verify.hpp"

namespace jordan {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Raised for user errors detected after CLI11 parsing (missing names, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string fixture;
  bool as_json = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double tol = kDefaultTol;
  int trials = 10;
  std::string element;
  std::string op;
  std::string algebra;
  int xi = 0;
};

json vec_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json mat_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r).transpose()));
  return rows;
}

json cmat_json(const Eigen::MatrixXcd& m) { return {{"re", mat_json(m.real())}, {"im", mat_json(m.imag())}}; }

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(10) << v;
  return ss.str();
}

void print_vector(std::ostream& out, const std::string& label, const Eigen::VectorXd& v) {
  out << std::left << std::setw(14) << label;
  for (int i = 0; i < v.size(); ++i) out << (i ? " " : "") << fmt(v[i]);
  out << "\n";
}

void print_matrix(std::ostream& out, const std::string& label, const Eigen::MatrixXd& m) {
  out << label << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    out << "  ";
    for (int c = 0; c < m.cols(); ++c) out << std::setw(14) << fmt(m(r, c));
    out << "\n";
  }
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  const Fixture& fixture() {
    if (!fixture_) {
      if (opt_.fixture.empty()) throw UsageError("--fixture is required");
      fixture_ = load_fixture(opt_.fixture);
    }
    return *fixture_;
  }

  const Element& element() {
    if (opt_.element.empty()) throw UsageError("--element is required");
    const auto& els = fixture().elements;
    const auto it = els.find(opt_.element);
    if (it == els.end()) throw UsageError("fixture has no element '" + opt_.element + "'");
    return it->second;
  }

  const VOperator& op() {
    if (opt_.op.empty()) throw UsageError("--operator is required");
    const auto& ops = fixture().operators;
    const auto it = ops.find(opt_.op);
    if (it == ops.end()) throw UsageError("fixture has no operator '" + opt_.op + "'");
    return it->second;
  }

  int emit(const json& doc, int code) {
    if (opt_.as_json) out_ << doc.dump(2) << "\n";
    return code;
  }

  int spectrum() {
    const Element& x = element();
    const auto ev = eigenvalues(x);
    const SpectralData sd = spectral_decompose(x);
    if (!opt_.as_json) {
      print_vector(out_, "eigenvalues", Eigen::Map<const Eigen::VectorXd>(ev.data(), ev.size()));
      print_vector(out_, "distinct", Eigen::Map<const Eigen::VectorXd>(sd.eigenvalues.data(), sd.eigenvalues.size()));
    }
    return emit({{"element", opt_.element}, {"eigenvalues", ev}, {"distinct", sd.eigenvalues}}, kExitOk);
  }

  int decompose_str() {
    const StrElement g = make_str_element(op(), opt_.tol);
    const StrDecomposition d = str_decompose(g, opt_.tol);
    const bool ok = d.recomposition_residual <= opt_.tol;
    if (!opt_.as_json) {
      print_vector(out_, "v", d.v.coords());
      print_vector(out_, "p", d.p.coords());
      print_matrix(out_, "k", d.k.matrix());
      out_ << "residual      " << fmt(d.recomposition_residual) << "\n";
      out_ << "involutive    " << (d.involutive() ? "yes" : "no") << "\n";
    }
    return emit({{"operator", opt_.op},
                 {"v", vec_json(d.v.coords())},
                 {"p", vec_json(d.p.coords())},
                 {"k", mat_json(d.k.matrix())},
                 {"residual", d.recomposition_residual},
                 {"involutive", d.involutive()},
                 {"pass", ok}},
                ok ? kExitOk : kExitFail);
  }

  int decompose_go() {
    const StrElement g = make_str_element(op(), opt_.tol);
    const GODecomposition d = go_decompose(g, opt_.tol);
    const double res = detail_gap(U_op(d.y) * d.k, g.g);
    const bool ok = res <= opt_.tol;
    if (!opt_.as_json) {
      print_vector(out_, "y", d.y.coords());
      print_matrix(out_, "k", d.k.matrix());
      out_ << "residual      " << fmt(res) << "\n";
    }
    return emit({{"operator", opt_.op},
                 {"y", vec_json(d.y.coords())},
                 {"k", mat_json(d.k.matrix())},
                 {"residual", res},
                 {"pass", ok}},
                ok ? kExitOk : kExitFail);
  }

  int upositive() {
    const Element& x = element();
    try {
      const UPositiveDecomposition d = u_positive_decompose(x, opt_.tol);
      const double res = (jordan_product(d.v, d.eps) - x).coord_norm() / std::max(1.0, x.coord_norm());
      if (!opt_.as_json) {
        print_vector(out_, "v", d.v.coords());
        print_vector(out_, "eps", d.eps.coords());
        out_ << "residual      " << fmt(res) << "\n";
      }
      return emit({{"element", opt_.element},
                   {"positive", true},
                   {"v", vec_json(d.v.coords())},
                   {"eps", vec_json(d.eps.coords())},
                   {"residual", res}},
                  kExitOk);
    } catch (const JordanError& e) {
      if (e.code() != Errc::UxNotPositive) throw;
      const double witness = e.value().value_or(0.0);
      if (!opt_.as_json) out_ << "U_x is not positive; min eigenvalue " << fmt(witness) << "\n";
      return emit({{"element", opt_.element}, {"positive", false}, {"min_u_eigenvalue", witness}}, kExitOk);
    }
  }

  int pierce() {
    const PierceDecomposition pd = pierce_decompose(element(), opt_.tol);
    if (!opt_.as_json) {
      out_ << "rank V1       " << pd.rank1 << "\n";
      out_ << "rank V1/2     " << pd.rank_half << "\n";
      out_ << "rank V0       " << pd.rank0 << "\n";
    }
    return emit({{"element", opt_.element}, {"rank1", pd.rank1}, {"rank_half", pd.rank_half}, {"rank0", pd.rank0}},
                kExitOk);
  }

  int isotope() {
    const Element& u = element();
    const IsotopeIsomorphism iso = isotope_isomorphic(u, opt_.tol);
    const bool ok = !iso.isomorphic || iso.multiplicativity_residual <= opt_.tol;
    json doc = {{"element", opt_.element},
                {"isomorphic", iso.isomorphic},
                {"min_u_eigenvalue", iso.min_u_eigenvalue},
                {"multiplicativity_residual", iso.multiplicativity_residual}};
    if (iso.witness) doc["witness"] = mat_json(iso.witness->matrix());
    if (!opt_.as_json) {
      out_ << "isomorphic    " << (iso.isomorphic ? "yes" : "no") << "\n";
      out_ << "min sigma(U)  " << fmt(iso.min_u_eigenvalue) << "\n";
      if (iso.witness) {
        print_matrix(out_, "witness", iso.witness->matrix());
        out_ << "residual      " << fmt(iso.multiplicativity_residual) << "\n";
      }
    }
    return emit(doc, ok ? kExitOk : kExitFail);
  }

  int lift_aut() {
    const AutLift lift = lift_automorphism(op(), opt_.xi);
    if (!opt_.as_json) {
      print_matrix(out_, "Z (re)", lift.Z.real());
      print_matrix(out_, "Z (im)", lift.Z.imag());
      print_matrix(out_, "s (re)", lift.s.real());
      print_matrix(out_, "s (im)", lift.s.imag());
      out_ << "conjugate     " << (lift.conjugate_flag ? "yes" : "no") << "\n";
      out_ << "residual      " << fmt(lift.residual) << "\n";
    }
    return emit({{"operator", opt_.op},
                 {"xi", lift.xi_index},
                 {"Z", cmat_json(lift.Z)},
                 {"W", cmat_json(lift.W)},
                 {"s", cmat_json(lift.s)},
                 {"conjugate", lift.conjugate_flag},
                 {"residual", lift.residual}},
                kExitOk);
  }

  int verify(std::ostream& err) {
    Algebra a = Algebra::sym_real(2);
    std::uint64_t seed = opt_.seed;
    if (!opt_.algebra.empty()) {
      a = Algebra::parse(opt_.algebra);
    } else if (!opt_.fixture.empty()) {
      a = fixture().algebra;
      if (!opt_.seed_given) seed = fixture().seed;
    } else {
      throw UsageError("verify needs --algebra or --fixture");
    }
    if (opt_.trials < 1) throw UsageError("--trials must be >= 1");
    const VerificationReport r = run_suite(a, seed, opt_.trials, opt_.tol);
    if (opt_.as_json) {
      out_ << report_to_json(r);
    } else {
      out_ << std::left << std::setw(28) << "check" << std::setw(8) << "trials" << std::setw(8) << "failed"
           << "max residual\n";
      std::size_t i = 0;
      while (i < r.records.size()) {
        std::size_t j = i;
        int failed = 0;
        double worst = 0.0;
        while (j < r.records.size() && r.records[j].check == r.records[i].check) {
          failed += r.records[j].pass ? 0 : 1;
          worst = std::max(worst, std::isnan(r.records[j].residual) ? INFINITY : r.records[j].residual);
          ++j;
        }
        out_ << std::setw(28) << r.records[i].check << std::setw(8) << (j - i) << std::setw(8) << failed
             << fmt(worst) << "\n";
        i = j;
      }
      out_ << (r.passed() ? "PASS" : "FAIL") << " " << a.name() << " seed " << seed << "\n";
    }
    err << "verify: " << r.records.size() << " records in " << fmt(r.wall_time_seconds) << " s\n";
    return r.passed() ? kExitOk : kExitFail;
  }

 private:
  static double detail_gap(const VOperator& a, const VOperator& b) {
    const double denom = std::max(a.norm(), b.norm());
    return denom == 0.0 ? 0.0 : (a.matrix() - b.matrix()).norm() / denom;
  }

  const Options& opt_;
  std::ostream& out_;
  std::optional<Fixture> fixture_;
};

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  if (const char* env = std::getenv("JORDAN_CONE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      err << "error: JORDAN_CONE_TOL must be a positive number\n";
      return kExitUsage;
    }
    opt.tol = v;
  }

  CLI::App app{"Jordan algebra structure-group toolkit", "jordan_cone"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--fixture", opt.fixture, "JSON fixture file");
  app.add_flag("--json", opt.as_json, "machine-readable output");
  app.add_option("--seed", opt.seed, "random seed")->each([&](const std::string&) { opt.seed_given = true; });
  app.add_option("--tol", opt.tol, "tolerance")->check(CLI::PositiveNumber);
  app.add_option("--trials", opt.trials, "trials per check");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a fixture element");
  auto* dstr = app.add_subcommand("decompose-str", "g = U_v S_p k");
  auto* dgo = app.add_subcommand("decompose-go", "g = U_y k");
  auto* upos = app.add_subcommand("upositive", "x = v o eps when sigma(U_x) > 0");
  auto* pierce = app.add_subcommand("pierce", "Pierce ranks of an idempotent");
  auto* iso = app.add_subcommand("isotope", "isotope isomorphism test for u");
  auto* lift = app.add_subcommand("lift-aut", "lift a Herm(n) automorphism to a unitary");
  auto* verify = app.add_subcommand("verify", "run the randomized identity suite");
  for (auto* sub : {spectrum, upos, pierce, iso}) {
    sub->add_option("--element", opt.element, "element name")->required();
  }
  for (auto* sub : {dstr, dgo, lift}) {
    sub->add_option("--operator", opt.op, "operator name")->required();
  }
  lift->add_option("--xi", opt.xi, "basis index of the unit vector xi");
  verify->add_option("--algebra", opt.algebra, "algebra, e.g. herm:3 or sym:2+sym:3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner run(opt, out);
  try {
    if (*spectrum) return run.spectrum();
    if (*dstr) return run.decompose_str();
    if (*dgo) return run.decompose_go();
    if (*upos) return run.upositive();
    if (*pierce) return run.pierce();
    if (*iso) return run.isotope();
    if (*lift) return run.lift_aut();
    if (*verify) return run.verify(err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const JordanError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    const bool usage = e.code() == Errc::ParseError;
    if (opt.as_json) out << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump(2) << "\n";
    return usage ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace jordan
