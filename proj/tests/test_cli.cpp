#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "io.hpp"
#include "soscert/parse.hpp"

using namespace soscert;
using soscert::testing::P;
using io::json;

namespace {

std::string data(const std::string& name) { return std::string(SOSCERT_TEST_DATA) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "soscert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("soscert_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(CliCheck, Example31Holds) {
  auto r = run({"check", data("example31.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
}

TEST(CliCheck, Example32WithAZeroFailsWithWitness) {
  auto r = run({"--json", "check", data("example32_a0.json")});
  EXPECT_EQ(r.code, 1);
  auto rep = io::assumption_report_from_json(json::parse(r.out));
  EXPECT_FALSE(rep.resultant_nonzero);
  ASSERT_TRUE(rep.witness);
  // top forms -2 x1 x2 and x1 (x1 + x2) vanish on x1 = 0
  EXPECT_NEAR(std::abs((*rep.witness)[0]), 0.0, 1e-9);
  EXPECT_NEAR(std::abs((*rep.witness)[1]), 1.0, 1e-9);
}

TEST(CliCheck, MalformedJsonReportsPosition) {
  auto r = run({"check", data("malformed.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 5"), std::string::npos);
}

TEST(CliCheck, BadPolynomialReportsColumn) {
  auto path = write_temp("badpoly.json", R"({"variables": ["x"], "objective": "x", "constraints": ["x^2 + * 1"]})");
  auto r = run({"check", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("constraints[0]"), std::string::npos);
  EXPECT_NE(r.err.find("column"), std::string::npos);
}

TEST(CliCheck, MissingFileAndUnknownCommand) {
  EXPECT_EQ(run({"check", data("nope.json")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliCheck, NonSquareIsUsageError) {
  EXPECT_EQ(run({"check", data("relax_only.json")}).code, 2);
}

TEST(CliBound, Binary3) {
  auto r = run({"--json", "bound", data("binary3.json")});
  ASSERT_EQ(r.code, 0);
  auto rep = io::degree_bound_report_from_json(json::parse(r.out));
  EXPECT_EQ(rep.frak_n, 3);
  EXPECT_EQ(rep.sos_order, 3);
  EXPECT_TRUE(rep.verified);
}

TEST(CliBound, Example32) {
  auto rep = io::degree_bound_report_from_json(json::parse(run({"--json", "bound", data("example32.json")}).out));
  EXPECT_EQ(rep.sos_order, 2);
}

TEST(CliBound, GridDegreesThreeThreeWithDegreeTen) {
  auto path = write_temp("grid.json", R"({"variables": ["x", "y"], "objective": "x^10 + y",
    "constraints": ["x^3 - x", "y^3 - y"]})");
  auto rep = io::degree_bound_report_from_json(json::parse(run({"--json", "bound", path}).out));
  EXPECT_EQ(rep.frak_n, 4);
  EXPECT_EQ(rep.sos_order, 5);
}

TEST(CliCertify, Example31ExactResidualZero) {
  const std::string cert_path = temp_path("cert31.json");
  auto r = run({"--json", "--exact", "certify", data("example31.json"), "--out", cert_path});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rep = io::certify_report_from_json(json::parse(r.out));
  ASSERT_TRUE(rep.verification);
  EXPECT_TRUE(rep.verification->exact_zero);
  EXPECT_EQ(rep.verification->residual, 0.0);
  ASSERT_TRUE(rep.fstar);
  EXPECT_EQ(*rep.fstar, 0.0);

  // the written certificate verifies on its own
  auto cert = io::certificate_from_json(json::parse(io::read_file(cert_path)));
  auto problem = io::problem_from_json(json::parse(io::read_file(data("example31.json"))));
  auto v = verify_certificate(problem.objective, problem.constraints, cert);
  EXPECT_TRUE(v.exact_zero);
  EXPECT_TRUE(v.h_degree_ok);
  EXPECT_TRUE(v.multiplier_degree_ok);
}

TEST(CliCertify, Example32NumericWithSingularNote) {
  auto r = run({"--json", "certify", data("example32.json")});
  auto rep = io::certify_report_from_json(json::parse(r.out));
  EXPECT_EQ(rep.order, 2);
  ASSERT_FALSE(rep.sweep.empty());
  EXPECT_NEAR(rep.sweep.back().fd, -1.0, 1e-6);
  EXPECT_NE(std::find(rep.notes.begin(), rep.notes.end(), "attainment not guaranteed: singular optimizer"),
            rep.notes.end());
}

TEST(CliCertify, OrderBelowFloor) {
  EXPECT_EQ(run({"certify", data("example32.json"), "--order", "0"}).code, 2);
}

TEST(CliCertify, AssumptionFailureNeedsForce) {
  EXPECT_EQ(run({"certify", data("example32_a0.json")}).code, 1);
  EXPECT_NE(run({"--max-iter", "30", "--force", "certify", data("example32_a0.json")}).code, 1);
}

TEST(CliCertify, RelaxOnlyForNonSquare) {
  auto r = run({"--json", "certify", data("relax_only.json")});
  EXPECT_EQ(r.code, 0);
  auto rep = io::certify_report_from_json(json::parse(r.out));
  EXPECT_TRUE(rep.relax_only);
  EXPECT_FALSE(rep.bound);
  EXPECT_NEAR(rep.sweep.back().fd, -std::sqrt(2.0), 1e-6);
  EXPECT_EQ(run({"--exact", "certify", data("relax_only.json")}).code, 2);
}

TEST(CliCertify, DumpSdp) {
  const std::string path = temp_path("dump31.dat-s");
  ASSERT_EQ(run({"certify", data("example31.json"), "--dump-sdp", path}).code, 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.front(), '*');
}

TEST(CliCopositive, Verdicts) {
  EXPECT_EQ(run({"copositive", data("identity.json"), "--lambda", "1"}).code, 0);
  EXPECT_EQ(run({"copositive", data("not_copositive.json"), "--lambda", "2"}).code, 1);
  EXPECT_EQ(run({"copositive", data("vanishing_minor.json"), "--lambda", "2"}).code, 3);
  EXPECT_EQ(run({"copositive", data("identity.json")}).code, 0);
}

TEST(CliCopositive, BadInput) {
  EXPECT_EQ(run({"copositive", data("identity.json"), "--lambda", "-1"}).code, 2);
  EXPECT_EQ(run({"copositive", data("identity.json"), "--lambda", "x"}).code, 2);
  auto path = write_temp("asym.json", R"([["1", "2"], ["3", "1"]])");
  EXPECT_EQ(run({"copositive", path}).code, 2);
}

TEST(CliCopositive, JsonRoundTrip) {
  auto r = run({"--json", "copositive", data("vanishing_minor.json"), "--lambda", "2"});
  auto inst = io::copositivity_instance_from_json(json::parse(r.out));
  EXPECT_EQ(inst.verdict, CopositivityVerdict::inconclusive);
  EXPECT_EQ(inst.minors.vanishing, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(io::to_json(inst), json::parse(r.out));
}

TEST(CliGradient, DoubleWell) {
  auto r = run({"--json", "gradient", data("double_well.json")});
  ASSERT_EQ(r.code, 0);
  auto rep = io::gradient_report_from_json(json::parse(r.out));
  EXPECT_TRUE(rep.assumption.resultant_nonzero);
  EXPECT_NEAR(rep.solution.fd, 0.0, 1e-6);
  EXPECT_EQ(io::to_json(rep), json::parse(r.out));
}

TEST(CliGradient, AssumptionFailure) {
  auto path = write_temp("grad_bad.json", R"({"variables": ["x", "y"], "objective": "(x - y)^4 + x^2"})");
  EXPECT_EQ(run({"gradient", path}).code, 1);
}

TEST(CliJson, EveryReportReparses) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "check", data("example31.json")},
           {"--json", "check", data("example32.json")},
           {"--json", "bound", data("binary3.json")},
           {"--json", "certify", data("example32.json")},
           {"--json", "--exact", "certify", data("binary3.json")},
           {"--json", "certify", data("relax_only.json")}}) {
    auto r = run(args);
    const json j = json::parse(r.out);
    if (args[1] == "check") {
      EXPECT_EQ(io::to_json(io::assumption_report_from_json(j)), j);
    } else if (args[1] == "bound") {
      EXPECT_EQ(io::to_json(io::degree_bound_report_from_json(j)), j);
    } else {
      EXPECT_EQ(io::to_json(io::certify_report_from_json(j)), j);
    }
  }
}

TEST(Io, PolynomialTermsAndText) {
  const std::vector<std::string> names{"x", "y"};
  auto a = io::polynomial_from_json(json::parse(R"([{"c": "3/4", "e": [2, 0]}, {"c": -1, "e": [0, 0]}])"), names);
  EXPECT_EQ(a, parse_polynomial("3/4*x^2 - 1", names));
  EXPECT_EQ(io::polynomial_from_json(io::polynomial_to_json(a), names), a);
  EXPECT_THROW(io::polynomial_from_json(json::parse(R"([{"c": "1", "e": [1]}])"), names), io::InputError);
  EXPECT_THROW(io::polynomial_from_json(json::parse(R"([{"c": "1/0", "e": [1, 0]}])"), names), io::InputError);
}

TEST(Io, NonFiniteNumbers) {
  for (double x : {1.5, -0.0, HUGE_VAL, -HUGE_VAL}) {
    EXPECT_EQ(io::number_from_json(json::parse(io::number_to_json(x).dump())), x);
  }
  EXPECT_TRUE(std::isnan(io::number_from_json(io::number_to_json(NAN))));
}

TEST(Io, ProblemRoundTrip) {
  auto pf = io::problem_from_json(json::parse(io::read_file(data("binary3.json"))));
  EXPECT_EQ(pf.variables.size(), 3u);
  EXPECT_TRUE(pf.square());
  auto again = io::problem_from_json(io::problem_to_json(pf));
  EXPECT_EQ(again.objective, pf.objective);
  EXPECT_EQ(again.constraints, pf.constraints);
}

TEST(Io, MatrixForms) {
  auto a = io::matrix_from_json(json::parse(R"([["1/2", 3], [3, "-1"]])"));
  EXPECT_EQ(a(0, 0), Rational(1, 2));
  EXPECT_EQ(io::matrix_from_json(json::parse(R"({"matrix": [["1/2", 3], [3, "-1"]]})")), a);
  EXPECT_EQ(io::matrix_from_json(io::matrix_to_json(a)), a);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"([["1", "2"]])")), io::InputError);
}

TEST(Io, SolutionRoundTripKeepsGramAndMultipliers) {
  auto sol = solve(build_relaxation(P("x1 - x2"), soscert::testing::example32(2, 3), 2));
  const json j = io::to_json(sol);
  auto back = io::sdp_solution_from_json(j);
  EXPECT_EQ(back.status, sol.status);
  EXPECT_EQ(back.fd, sol.fd);
  EXPECT_EQ(back.gram, sol.gram);
  EXPECT_EQ(back.gram_basis, sol.gram_basis);
  ASSERT_EQ(back.multipliers.size(), sol.multipliers.size());
  for (std::size_t i = 0; i < sol.multipliers.size(); ++i) EXPECT_EQ(back.multipliers[i], sol.multipliers[i]);
  EXPECT_EQ(io::to_json(back), j);
}
