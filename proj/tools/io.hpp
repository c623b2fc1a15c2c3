#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "soscert/assumption.hpp"
#include "soscert/certgen.hpp"
#include "soscert/degbound.hpp"
#include "soscert/gradpipe.hpp"
#include "soscert/sdp.hpp"

namespace soscert::io {

using nlohmann::json;

/// Bad input file: malformed JSON, missing fields, unparsable polynomials.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemFile {
  std::vector<std::string> variables;
  Polynomial objective;
  std::vector<Polynomial> constraints;

  bool square() const { return constraints.size() == variables.size(); }
};

/// Parses JSON text; errors carry line and column of the offending byte.
json parse_json(const std::string& text);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

/// A polynomial is either a text expression or a list of {"c": "p/q", "e": [..]} terms.
Polynomial polynomial_from_json(const json& j, const std::vector<std::string>& names);
json polynomial_to_json(const Polynomial& p);
json real_polynomial_to_json(const RealPolynomial& p);
RealPolynomial real_polynomial_from_json(const json& j, std::size_t nvars);

ProblemFile problem_from_json(const json& j);
json problem_to_json(const ProblemFile& problem);

/// Dense symmetric matrix of rationals, either a bare array of rows or {"matrix": rows}.
QMatrix matrix_from_json(const json& j);
json matrix_to_json(const QMatrix& m);

/// Non-finite doubles are written as the strings "inf", "-inf", "nan".
json number_to_json(double x);
double number_from_json(const json& j);

json to_json(const AssumptionReport& r);
AssumptionReport assumption_report_from_json(const json& j);

json to_json(const DegreeBoundReport& r);
DegreeBoundReport degree_bound_report_from_json(const json& j);

json to_json(const SdpSolution& s);
SdpSolution sdp_solution_from_json(const json& j);

json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const json& j);

json to_json(const CopositivityInstance& c);
CopositivityInstance copositivity_instance_from_json(const json& j);

/// Output of `certify`.
struct CertifyReport {
  bool relax_only = false;
  std::optional<AssumptionReport> assumption;
  std::optional<DegreeBoundReport> bound;
  int order = 0;
  std::vector<SdpSolution> sweep;
  std::optional<double> fstar;        // minimum over the real variety points
  std::optional<Certificate> certificate;
  std::optional<VerificationReport> verification;
  std::vector<std::string> notes;
};

json to_json(const CertifyReport& r);
CertifyReport certify_report_from_json(const json& j);

/// Output of `gradient`.
struct GradientReport {
  AssumptionReport assumption;
  int bound = 0;
  int order = 0;
  SdpSolution solution;
  std::vector<std::string> notes;
};

json to_json(const GradientReport& r);
GradientReport gradient_report_from_json(const json& j);

}  // namespace soscert::io
