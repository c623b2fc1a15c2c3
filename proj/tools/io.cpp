#include "io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "soscert/parse.hpp"

namespace soscert::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) return exact_from_double(j.get<double>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad rational: ") + e.what());
  }
  throw InputError("rational must be a string or a number, got " + j.dump());
}

json complex_to_json(const Complex& z) { return json::array({number_to_json(z.real()), number_to_json(z.imag())}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("complex number must be [re, im]");
  return {number_from_json(j[0]), number_from_json(j[1])};
}

json complex_vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

ComplexVector complex_vector_from_json(const json& j) {
  ComplexVector v;
  for (const auto& z : j) v.push_back(complex_from_json(z));
  return v;
}

json exponents_to_json(const Monomial& m) {
  json e = json::array();
  for (int k : m.exponents()) e.push_back(k);
  return e;
}

Monomial monomial_from_json(const json& j, std::size_t nvars) {
  if (!j.is_array()) throw InputError("exponent vector must be an array");
  std::vector<int> e;
  for (const auto& k : j) {
    if (!k.is_number_integer() || k.get<long>() < 0) throw InputError("exponents must be nonnegative integers");
    e.push_back(k.get<int>());
  }
  if (e.size() != nvars) {
    throw InputError("exponent vector of length " + std::to_string(e.size()) + ", expected " + std::to_string(nvars));
  }
  return Monomial(std::move(e));
}

json dense_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(number_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd dense_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols) throw InputError("ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = number_from_json(j[i][k]);
  }
  return m;
}

json basis_to_json(const std::vector<Monomial>& basis) {
  json out = json::array();
  for (const auto& m : basis) out.push_back(exponents_to_json(m));
  return out;
}

std::vector<Monomial> basis_from_json(const json& j, std::size_t nvars) {
  std::vector<Monomial> out;
  for (const auto& e : j) out.push_back(monomial_from_json(e, nvars));
  return out;
}

json variety_point_to_json(const VarietyPoint& p) {
  json j{{"coords", complex_vector_to_json(p.coords)},
         {"multiplicity", p.multiplicity},
         {"singular", p.singular},
         {"real", p.real}};
  if (p.exact) {
    json e = json::array();
    for (const auto& q : *p.exact) e.push_back(to_string(q));
    j["exact"] = e;
  }
  return j;
}

VarietyPoint variety_point_from_json(const json& j) {
  VarietyPoint p;
  p.coords = complex_vector_from_json(j.at("coords"));
  p.multiplicity = field<int>(j, "multiplicity");
  p.singular = field<bool>(j, "singular");
  p.real = field<bool>(j, "real");
  if (j.contains("exact")) {
    std::vector<Rational> e;
    for (const auto& q : j["exact"]) e.push_back(rational_from_json(q));
    p.exact = std::move(e);
  }
  return p;
}

json polynomials_to_json(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(polynomial_to_json(p));
  return out;
}

std::vector<Polynomial> polynomials_from_json(const json& j, const std::vector<std::string>& names) {
  std::vector<Polynomial> out;
  for (const auto& p : j) out.push_back(polynomial_from_json(p, names));
  return out;
}

std::size_t nvars_field(const json& j) { return j.contains("nvars") ? j["nvars"].get<std::size_t>() : 0; }

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InputError("expected a number, got " + j.dump());
}

Polynomial polynomial_from_json(const json& j, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  if (j.is_string()) {
    try {
      return parse_polynomial(j.get<std::string>(), names);
    } catch (const ParseError& e) {
      throw InputError(std::string("polynomial: ") + e.what());
    }
  }
  if (!j.is_array()) throw InputError("polynomial must be a string or a list of terms");
  Polynomial p(n);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("c") || !t.contains("e")) throw InputError("term needs \"c\" and \"e\"");
    p.add_term(monomial_from_json(t["e"], n), rational_from_json(t["c"]));
  }
  return p;
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"c", to_string(c)}, {"e", exponents_to_json(m)}});
  return out;
}

json real_polynomial_to_json(const RealPolynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"c", number_to_json(c)}, {"e", exponents_to_json(m)}});
  return out;
}

RealPolynomial real_polynomial_from_json(const json& j, std::size_t nvars) {
  RealPolynomial p(nvars);
  for (const auto& t : j) p.add_term(monomial_from_json(t.at("e"), nvars), number_from_json(t.at("c")));
  return p;
}

ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) throw InputError("problem file must be a JSON object");
  ProblemFile pf;
  pf.variables = field<std::vector<std::string>>(j, "variables");
  if (pf.variables.empty()) throw InputError("no variables");
  if (!j.contains("objective")) throw InputError("missing field \"objective\"");
  try {
    pf.objective = polynomial_from_json(j["objective"], pf.variables);
  } catch (const InputError& e) {
    throw InputError(std::string("objective: ") + e.what());
  }
  if (j.contains("constraints")) {
    if (!j["constraints"].is_array()) throw InputError("\"constraints\" must be a list");
    std::size_t i = 0;
    for (const auto& g : j["constraints"]) {
      try {
        pf.constraints.push_back(polynomial_from_json(g, pf.variables));
      } catch (const InputError& e) {
        throw InputError("constraints[" + std::to_string(i) + "]: " + e.what());
      }
      ++i;
    }
  }
  return pf;
}

json problem_to_json(const ProblemFile& problem) {
  return {{"variables", problem.variables},
          {"objective", polynomial_to_json(problem.objective)},
          {"constraints", polynomials_to_json(problem.constraints)}};
}

QMatrix matrix_from_json(const json& j) {
  if (j.is_object() && !j.contains("matrix")) throw InputError("missing field \"matrix\"");
  const json& rows = j.is_object() ? j["matrix"] : j;
  if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a nonempty list of rows");
  const std::size_t n = rows.size();
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw InputError("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(rows[i][k]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (m(i, k) != m(k, i)) throw InputError("matrix must be symmetric");
    }
  }
  return m;
}

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const AssumptionReport& r) {
  json j{{"resultantNonzero", r.resultant_nonzero}, {"bezoutProduct", r.bezout_product}};
  j["witness"] = r.witness ? complex_vector_to_json(*r.witness) : json(nullptr);
  j["bezoutDim"] = r.bezout_dim ? json(*r.bezout_dim) : json(nullptr);
  json sing = json::array();
  for (const auto& p : r.singular_optimizers) sing.push_back(variety_point_to_json(p));
  j["singularOptimizers"] = sing;
  return j;
}

AssumptionReport assumption_report_from_json(const json& j) {
  AssumptionReport r;
  r.resultant_nonzero = field<bool>(j, "resultantNonzero");
  r.bezout_product = field<std::uint64_t>(j, "bezoutProduct");
  if (j.contains("witness") && !j["witness"].is_null()) r.witness = complex_vector_from_json(j["witness"]);
  if (j.contains("bezoutDim") && !j["bezoutDim"].is_null()) r.bezout_dim = j["bezoutDim"].get<std::size_t>();
  if (j.contains("singularOptimizers")) {
    for (const auto& p : j["singularOptimizers"]) r.singular_optimizers.push_back(variety_point_from_json(p));
  }
  return r;
}

json to_json(const DegreeBoundReport& r) {
  return {{"frakN", r.frak_n},
          {"hilbertCoefficients", r.c_coeffs},
          {"sosOrder", r.sos_order},
          {"multiplierDegreeCap", r.multiplier_degree_cap},
          {"hDegreeCap", r.h_degree_cap},
          {"verified", r.verified}};
}

DegreeBoundReport degree_bound_report_from_json(const json& j) {
  DegreeBoundReport r;
  r.frak_n = field<int>(j, "frakN");
  r.c_coeffs = field<std::vector<std::int64_t>>(j, "hilbertCoefficients");
  r.sos_order = field<int>(j, "sosOrder");
  r.multiplier_degree_cap = field<int>(j, "multiplierDegreeCap");
  r.h_degree_cap = field<int>(j, "hDegreeCap");
  r.verified = field<bool>(j, "verified");
  return r;
}

json to_json(const SdpSolution& s) {
  std::size_t nvars = 0;
  if (!s.gram_basis.empty()) nvars = s.gram_basis.front().exponents().size();
  json mult = json::array();
  for (const auto& m : s.multipliers) {
    nvars = m.nvars();
    mult.push_back(real_polynomial_to_json(m));
  }
  json trace = json::array();
  for (double t : s.trace_history) trace.push_back(number_to_json(t));
  return {{"status", to_string(s.status)},
          {"order", s.order},
          {"fd", number_to_json(s.fd)},
          {"dualValue", number_to_json(s.dual_value)},
          {"dualityGap", number_to_json(s.duality_gap)},
          {"primalInfeasibility", number_to_json(s.primal_infeasibility)},
          {"dualInfeasibility", number_to_json(s.dual_infeasibility)},
          {"iterations", s.iterations},
          {"nvars", nvars},
          {"gram", dense_to_json(s.gram)},
          {"gramBasis", basis_to_json(s.gram_basis)},
          {"multipliers", mult},
          {"traceHistory", trace},
          {"gramTraceGrowth", s.gram_trace_growth}};
}

SdpSolution sdp_solution_from_json(const json& j) {
  SdpSolution s;
  try {
    s.status = sdp_status_from_string(field<std::string>(j, "status"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::size_t n = nvars_field(j);
  s.order = field<int>(j, "order");
  s.fd = number_from_json(j.at("fd"));
  s.dual_value = number_from_json(j.at("dualValue"));
  s.duality_gap = number_from_json(j.at("dualityGap"));
  s.primal_infeasibility = number_from_json(j.at("primalInfeasibility"));
  s.dual_infeasibility = number_from_json(j.at("dualInfeasibility"));
  s.iterations = field<int>(j, "iterations");
  if (j.contains("gram")) s.gram = dense_from_json(j["gram"]);
  if (j.contains("gramBasis")) s.gram_basis = basis_from_json(j["gramBasis"], n);
  if (j.contains("multipliers")) {
    for (const auto& m : j["multipliers"]) s.multipliers.push_back(real_polynomial_from_json(m, n));
  }
  if (j.contains("traceHistory")) {
    for (const auto& t : j["traceHistory"]) s.trace_history.push_back(number_from_json(t));
  }
  s.gram_trace_growth = field<bool>(j, "gramTraceGrowth");
  return s;
}

json to_json(const Certificate& c) {
  static const char* kinds[] = {"exact", "numeric", "gram"};
  std::size_t nvars = c.h.nvars();
  if (!c.gram_basis.empty()) nvars = c.gram_basis.front().exponents().size();
  json nm = json::array();
  for (const auto& m : c.numeric_multipliers) nm.push_back(real_polynomial_to_json(m));
  return {{"kind", kinds[static_cast<int>(c.kind)]},
          {"nvars", nvars},
          {"fstar", to_string(c.fstar)},
          {"radicand", c.radicand.get_str()},
          {"h", polynomial_to_json(c.h)},
          {"hRadical", polynomial_to_json(c.h_radical)},
          {"multipliers", polynomials_to_json(c.multipliers)},
          {"multipliersRadical", polynomials_to_json(c.multipliers_radical)},
          {"fstarValue", number_to_json(c.fstar_value)},
          {"gram", dense_to_json(c.gram)},
          {"gramBasis", basis_to_json(c.gram_basis)},
          {"numericMultipliers", nm},
          {"residual", number_to_json(c.residual)},
          {"degreeContractMet", c.degree_contract_met},
          {"notes", c.notes}};
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  const auto kind = field<std::string>(j, "kind");
  if (kind == "exact") {
    c.kind = Certificate::Kind::exact;
  } else if (kind == "numeric") {
    c.kind = Certificate::Kind::numeric;
  } else if (kind == "gram") {
    c.kind = Certificate::Kind::gram;
  } else {
    throw InputError("unknown certificate kind " + kind);
  }
  const std::size_t n = nvars_field(j);
  const auto names = default_variable_names(n);
  c.fstar = rational_from_json(j.at("fstar"));
  c.radicand = Integer(field<std::string>(j, "radicand"));
  c.h = polynomial_from_json(j.at("h"), names);
  c.h_radical = polynomial_from_json(j.at("hRadical"), names);
  c.multipliers = polynomials_from_json(j.at("multipliers"), names);
  c.multipliers_radical = polynomials_from_json(j.at("multipliersRadical"), names);
  c.fstar_value = number_from_json(j.at("fstarValue"));
  c.gram = dense_from_json(j.at("gram"));
  c.gram_basis = basis_from_json(j.at("gramBasis"), n);
  for (const auto& m : j.at("numericMultipliers")) c.numeric_multipliers.push_back(real_polynomial_from_json(m, n));
  c.residual = number_from_json(j.at("residual"));
  c.degree_contract_met = field<bool>(j, "degreeContractMet");
  c.notes = field<std::vector<std::string>>(j, "notes");
  return c;
}

json to_json(const VerificationReport& r) {
  return {{"residual", number_to_json(r.residual)},
          {"exactZero", r.exact_zero},
          {"hDegreeOk", r.h_degree_ok},
          {"multiplierDegreeOk", r.multiplier_degree_ok},
          {"hDegree", r.h_degree},
          {"maxMultiplierProductDegree", r.max_multiplier_product_degree}};
}

VerificationReport verification_report_from_json(const json& j) {
  VerificationReport r;
  r.residual = number_from_json(j.at("residual"));
  r.exact_zero = field<bool>(j, "exactZero");
  r.h_degree_ok = field<bool>(j, "hDegreeOk");
  r.multiplier_degree_ok = field<bool>(j, "multiplierDegreeOk");
  r.h_degree = field<int>(j, "hDegree");
  r.max_multiplier_product_degree = field<int>(j, "maxMultiplierProductDegree");
  return r;
}

json to_json(const CopositivityInstance& c) {
  json lambdas = json::array();
  for (const auto& l : c.tried_lambdas) lambdas.push_back(to_string(l));
  return {{"P", matrix_to_json(c.P)},
          {"lambda", to_string(c.lambda)},
          {"Flambda", polynomial_to_json(c.F_lambda)},
          {"verdict", to_string(c.verdict)},
          {"certifiedValue", number_to_json(c.certified_value)},
          {"order", c.order},
          {"status", to_string(c.status)},
          {"minors",
           {{"allNonzero", c.minors.all_nonzero}, {"vanishing", c.minors.vanishing}, {"checked", c.minors.checked}}},
          {"triedLambdas", lambdas},
          {"notes", c.notes}};
}

CopositivityInstance copositivity_instance_from_json(const json& j) {
  CopositivityInstance c;
  c.P = matrix_from_json(j.at("P"));
  c.lambda = rational_from_json(j.at("lambda"));
  c.F_lambda = polynomial_from_json(j.at("Flambda"), default_variable_names(c.P.rows()));
  try {
    c.verdict = copositivity_verdict_from_string(field<std::string>(j, "verdict"));
    c.status = sdp_status_from_string(field<std::string>(j, "status"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  c.certified_value = number_from_json(j.at("certifiedValue"));
  c.order = field<int>(j, "order");
  const json& m = j.at("minors");
  c.minors.all_nonzero = field<bool>(m, "allNonzero");
  c.minors.vanishing = field<std::vector<std::size_t>>(m, "vanishing");
  c.minors.checked = field<std::size_t>(m, "checked");
  for (const auto& l : j.at("triedLambdas")) c.tried_lambdas.push_back(rational_from_json(l));
  c.notes = field<std::vector<std::string>>(j, "notes");
  return c;
}

json to_json(const CertifyReport& r) {
  json sweep = json::array();
  for (const auto& s : r.sweep) sweep.push_back(to_json(s));
  json j{{"relaxOnly", r.relax_only}, {"order", r.order}, {"sweep", sweep}, {"notes", r.notes}};
  j["assumption"] = r.assumption ? to_json(*r.assumption) : json(nullptr);
  j["bound"] = r.bound ? to_json(*r.bound) : json(nullptr);
  j["fstar"] = r.fstar ? number_to_json(*r.fstar) : json(nullptr);
  j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  j["verification"] = r.verification ? to_json(*r.verification) : json(nullptr);
  return j;
}

CertifyReport certify_report_from_json(const json& j) {
  CertifyReport r;
  r.relax_only = field<bool>(j, "relaxOnly");
  r.order = field<int>(j, "order");
  for (const auto& s : j.at("sweep")) r.sweep.push_back(sdp_solution_from_json(s));
  r.notes = field<std::vector<std::string>>(j, "notes");
  auto present = [&](const char* key) { return j.contains(key) && !j[key].is_null(); };
  if (present("assumption")) r.assumption = assumption_report_from_json(j["assumption"]);
  if (present("bound")) r.bound = degree_bound_report_from_json(j["bound"]);
  if (present("fstar")) r.fstar = number_from_json(j["fstar"]);
  if (present("certificate")) r.certificate = certificate_from_json(j["certificate"]);
  if (present("verification")) r.verification = verification_report_from_json(j["verification"]);
  return r;
}

json to_json(const GradientReport& r) {
  return {{"assumption", to_json(r.assumption)},
          {"bound", r.bound},
          {"order", r.order},
          {"solution", to_json(r.solution)},
          {"notes", r.notes}};
}

GradientReport gradient_report_from_json(const json& j) {
  GradientReport r;
  r.assumption = assumption_report_from_json(j.at("assumption"));
  r.bound = field<int>(j, "bound");
  r.order = field<int>(j, "order");
  r.solution = sdp_solution_from_json(j.at("solution"));
  r.notes = field<std::vector<std::string>>(j, "notes");
  return r;
}

}  // namespace soscert::io
