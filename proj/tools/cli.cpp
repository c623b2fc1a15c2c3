#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "io.hpp"
#include "soscert/parse.hpp"

namespace soscert::cli {

namespace {

using io::json;

struct Globals {
  bool json = false;
  double tol = 1e-6;
  int max_iter = 200;
  std::uint64_t seed = 1;
  bool exact = false;
  bool force = false;
};

struct Args {
  std::string file;
  int order = -1;  // unset
  std::string lambda;
  std::string out_file;
  std::string dump_file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SolverOptions solver_options(const Globals& g) {
  SolverOptions o;
  o.max_iterations = g.max_iter;
  return o;
}

io::ProblemFile load_problem(const std::string& path) {
  return io::problem_from_json(io::parse_json(io::read_file(path)));
}

int max_degree(const std::vector<Polynomial>& ps) {
  int d = 0;
  for (const auto& p : ps) d = std::max(d, p.degree());
  return d;
}

std::string complex_text(const ComplexVector& v) {
  std::ostringstream ss;
  ss << std::setprecision(6) << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) ss << ", ";
    ss << v[i].real();
    if (v[i].imag() != 0) ss << (v[i].imag() < 0 ? " - " : " + ") << std::abs(v[i].imag()) << "i";
  }
  return ss.str() + ")";
}

void print_assumption(std::ostream& out, const AssumptionReport& r) {
  out << "assumption at infinity: " << (r.resultant_nonzero ? "holds" : "fails") << "\n";
  if (r.witness) out << "  common zero of the top forms: " << complex_text(*r.witness) << "\n";
  out << "  degree product: " << r.bezout_product << "\n";
  if (r.bezout_dim) out << "  quotient dimension: " << *r.bezout_dim << "\n";
  for (const auto& p : r.singular_optimizers) out << "  singular optimizer: " << complex_text(p.coords) << "\n";
}

void print_bound(std::ostream& out, const DegreeBoundReport& r) {
  out << "frak n: " << r.frak_n << "\n";
  out << "hilbert coefficients:";
  for (auto c : r.c_coeffs) out << " " << c;
  out << "\nsos order: " << r.sos_order << "\n";
  out << "multiplier degree cap: " << r.multiplier_degree_cap << "\n";
  out << "h degree cap: " << r.h_degree_cap << "\n";
  out << "verified: " << (r.verified ? "yes" : "no") << "\n";
}

void print_solution(std::ostream& out, const SdpSolution& s) {
  out << "  d = " << s.order << ": f_d = " << std::setprecision(12) << s.fd << " (" << to_string(s.status)
      << ", gap " << std::setprecision(3) << s.duality_gap << ", " << s.iterations << " iterations"
      << (s.gram_trace_growth ? ", Gram trace growth" : "") << ")\n";
}

void print_notes(std::ostream& out, const std::vector<std::string>& notes) {
  for (const auto& n : notes) out << "note: " << n << "\n";
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_check(const Globals& g, const Args& a, std::ostream& out) {
  auto pf = load_problem(a.file);
  if (!pf.square()) throw UsageError("check needs as many constraints as variables");
  AssumptionOptions ao;
  ao.seed = g.seed;
  AssumptionReport rep = check_at_infinity(pf.constraints, ao);
  if (rep.resultant_nonzero) {
    VarietyOptions vo;
    vo.seed = g.seed;
    auto points = solve_variety(quotient_algebra(buchberger(pf.constraints)), pf.constraints, vo);
    if (auto m = minimize_over_real_points(pf.objective, points)) {
      rep.singular_optimizers = check_singular_optimizers(pf.objective, points, m->value);
    }
  }
  if (g.json) {
    emit(out, io::to_json(rep));
  } else {
    print_assumption(out, rep);
  }
  return rep.resultant_nonzero ? success : negative;
}

int cmd_bound(const Globals& g, const Args& a, std::ostream& out) {
  auto pf = load_problem(a.file);
  if (!pf.square()) throw UsageError("bound needs as many constraints as variables");
  DegreeBoundReport rep = sos_order(pf.objective, pf.constraints);
  if (g.json) {
    emit(out, io::to_json(rep));
  } else {
    print_bound(out, rep);
  }
  return success;
}

void write_certificate_file(const std::string& path, const Certificate& cert) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << io::to_json(cert).dump(2) << "\n";
}

int cmd_certify(const Globals& g, const Args& a, std::ostream& out) {
  auto pf = load_problem(a.file);
  const Polynomial& f = pf.objective;
  const auto& gens = pf.constraints;
  if (gens.empty()) throw UsageError("certify needs constraints; use gradient for unconstrained problems");
  io::CertifyReport rep;
  const int floor = std::max((max_degree(gens) + 1) / 2, (std::max(f.degree(), 0) + 1) / 2);
  if (a.order >= 0 && a.order < floor) {
    throw UsageError("order " + std::to_string(a.order) + " below the floor " + std::to_string(floor));
  }
  const SolverOptions so = solver_options(g);
  int code = success;

  if (!pf.square()) {
    if (g.exact) throw UsageError("--exact needs as many constraints as variables");
    rep.relax_only = true;
    rep.order = a.order >= 0 ? a.order : floor;
    rep.notes.push_back("relax-only: " + std::to_string(gens.size()) + " constraints in " +
                        std::to_string(pf.variables.size()) + " variables, no bound claims");
    rep.sweep.push_back(solve(build_relaxation(f, gens, rep.order), so));
    code = rep.sweep.back().status == SdpStatus::optimal ? success : inconclusive;
  } else {
    AssumptionOptions ao;
    ao.seed = g.seed;
    rep.assumption = check_at_infinity(gens, ao);
    const bool holds = rep.assumption->resultant_nonzero;
    if (!holds && !g.force) {
      rep.notes.push_back("assumption at infinity fails; rerun with --force to relax anyway");
      if (g.json) {
        emit(out, io::to_json(rep));
      } else {
        print_assumption(out, *rep.assumption);
        print_notes(out, rep.notes);
      }
      return negative;
    }
    rep.bound = sos_order(f, gens);
    rep.order = a.order >= 0 ? a.order : std::max(rep.bound->sos_order, floor);
    rep.sweep = hierarchy_sweep(f, gens, floor, rep.order, so);

    if (holds) {
      VarietyOptions vo;
      vo.seed = g.seed;
      auto points = solve_variety(quotient_algebra(buchberger(gens)), gens, vo);
      if (auto m = minimize_over_real_points(f, points)) {
        rep.fstar = m->value;
        rep.assumption->singular_optimizers = check_singular_optimizers(f, points, m->value);
        if (!rep.assumption->singular_optimizers.empty()) {
          rep.notes.push_back("attainment not guaranteed: singular optimizer");
        }
      } else {
        rep.notes.push_back("no real points: f_star = +inf");
      }
    } else {
      rep.notes.push_back("forced past a failed assumption: no bound claims");
    }

    const SdpSolution& last = rep.sweep.back();
    if (g.exact) {
      if (!holds) throw UsageError("--exact needs the assumption at infinity");
      CertificateOptions co;
      co.seed = g.seed;
      co.assumption_verified = true;
      rep.certificate = build_certificate(f, gens, co);
    } else if (last.status == SdpStatus::optimal && std::isfinite(last.fd)) {
      rep.certificate = gram_certificate(f, gens, last);
    } else {
      rep.notes.push_back("no certificate: solver status " + to_string(last.status));
      code = inconclusive;
    }
    if (rep.certificate) {
      rep.verification = verify_certificate(f, gens, *rep.certificate);
      rep.certificate->residual = rep.verification->residual;
      code = rep.verification->residual <= g.tol ? success : inconclusive;
      if (!a.out_file.empty()) write_certificate_file(a.out_file, *rep.certificate);
    }
  }

  if (!a.dump_file.empty()) {
    std::ofstream dump(a.dump_file);
    if (!dump) throw UsageError("cannot write " + a.dump_file);
    write_sdp(dump, build_relaxation(f, gens, rep.order));
  }

  if (g.json) {
    emit(out, io::to_json(rep));
    return code;
  }
  if (rep.assumption) print_assumption(out, *rep.assumption);
  if (rep.bound) out << "degree bound d*: " << rep.bound->sos_order << "\n";
  out << "sweep:\n";
  for (const auto& s : rep.sweep) print_solution(out, s);
  if (rep.fstar) out << "f* over real points: " << std::setprecision(12) << *rep.fstar << "\n";
  if (rep.certificate && rep.verification) {
    static const char* kinds[] = {"exact", "numeric", "gram"};
    out << "certificate: " << kinds[static_cast<int>(rep.certificate->kind)] << ", residual "
        << std::setprecision(3) << rep.verification->residual << (rep.verification->exact_zero ? " (exact zero)" : "")
        << ", degree caps " << (rep.verification->h_degree_ok && rep.verification->multiplier_degree_ok ? "met" : "not met")
        << "\n";
  }
  print_notes(out, rep.notes);
  return code;
}

int cmd_copositive(const Globals& g, const Args& a, std::ostream& out) {
  QMatrix p = io::matrix_from_json(io::parse_json(io::read_file(a.file)));
  CopositivityOptions co;
  co.solver = solver_options(g);
  co.value_tolerance = g.tol;
  co.order = std::max(a.order, 0);
  if (a.order == 0) throw UsageError("order must be positive");
  CopositivityInstance inst;
  if (a.lambda.empty()) {
    inst = certify_copositivity(p, co);
  } else {
    Rational lambda;
    try {
      lambda = parse_rational(a.lambda);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--lambda: ") + e.what());
    }
    if (lambda <= 0) throw UsageError("--lambda must be positive");
    inst = certify_copositivity(p, lambda, co);
  }
  if (g.json) {
    emit(out, io::to_json(inst));
  } else {
    out << "verdict: " << to_string(inst.verdict) << "\n";
    out << "lambda: " << to_string(inst.lambda) << ", order " << inst.order << ", F_d = " << std::setprecision(12)
        << inst.certified_value << " (" << to_string(inst.status) << ")\n";
    if (!inst.minors.all_nonzero) {
      out << "vanishing principal minor:";
      for (auto i : inst.minors.vanishing) out << " " << i;
      out << "\n";
    }
    print_notes(out, inst.notes);
  }
  switch (inst.verdict) {
    case CopositivityVerdict::copositive: return success;
    case CopositivityVerdict::not_copositive: return negative;
    case CopositivityVerdict::inconclusive: return inconclusive;
  }
  return inconclusive;
}

int cmd_gradient(const Globals& g, const Args& a, std::ostream& out) {
  auto pf = load_problem(a.file);
  io::GradientReport rep;
  if (!pf.constraints.empty()) rep.notes.push_back("constraints ignored by the gradient relaxation");
  AssumptionOptions ao;
  ao.seed = g.seed;
  GradientProblem gp = gradient_problem(pf.objective, ao);
  rep.assumption = gp.assumption;
  rep.bound = gp.bound;
  if (a.order >= 0 && 2 * a.order < pf.objective.degree()) {
    throw UsageError("order " + std::to_string(a.order) + " below the floor " +
                     std::to_string((pf.objective.degree() + 1) / 2));
  }
  if (!gp.assumption.resultant_nonzero && !g.force) {
    rep.notes.push_back("gradient assumption at infinity fails; rerun with --force to relax anyway");
    if (g.json) {
      emit(out, io::to_json(rep));
    } else {
      print_assumption(out, rep.assumption);
      print_notes(out, rep.notes);
    }
    return negative;
  }
  rep.order = a.order >= 0 ? a.order : gp.bound;
  rep.solution = gradient_relaxation(pf.objective, rep.order, solver_options(g));
  if (g.json) {
    emit(out, io::to_json(rep));
  } else {
    print_assumption(out, rep.assumption);
    out << "gradient bound: " << rep.bound << "\n";
    print_solution(out, rep.solution);
    print_notes(out, rep.notes);
  }
  return rep.solution.status == SdpStatus::optimal ? success : inconclusive;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for exact SOS relaxations of square polynomial systems", "soscert"};
  app.require_subcommand(1);
  Globals g;
  Args a;
  app.add_flag("--json", g.json, "Print reports as JSON");
  app.add_option("--tol", g.tol, "Residual and value tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", g.max_iter, "Interior-point iteration limit")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized linear combinations");
  app.add_flag("--exact", g.exact, "Build the exact certificate (certify)");
  app.add_flag("--force", g.force, "Continue past a failed assumption");

  auto* check = app.add_subcommand("check", "Check for solutions at infinity");
  auto* bound = app.add_subcommand("bound", "Degree bound report");
  auto* certify = app.add_subcommand("certify", "Relax up to the degree bound and certify");
  auto* copositive = app.add_subcommand("copositive", "Copositivity of a symmetric matrix");
  auto* gradient = app.add_subcommand("gradient", "Gradient-ideal relaxation of an unconstrained objective");
  for (auto* sub : {check, bound, certify, gradient}) {
    sub->add_option("file", a.file, "Problem JSON")->required();
    sub->fallthrough();
  }
  copositive->add_option("file", a.file, "Matrix JSON")->required();
  copositive->add_option("--lambda", a.lambda, "Single lambda (rational); default escalates");
  copositive->fallthrough();
  for (auto* sub : {certify, copositive, gradient}) sub->add_option("--order", a.order, "Relaxation order");
  certify->add_option("--out", a.out_file, "Write the certificate JSON here");
  certify->add_option("--dump-sdp", a.dump_file, "Write the final relaxation in SDPA sparse format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : usage;
  }

  try {
    if (*check) return cmd_check(g, a, out);
    if (*bound) return cmd_bound(g, a, out);
    if (*certify) return cmd_certify(g, a, out);
    if (*copositive) return cmd_copositive(g, a, out);
    if (*gradient) return cmd_gradient(g, a, out);
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return inconclusive;
  }
  return usage;
}

}  // namespace soscert::cli
