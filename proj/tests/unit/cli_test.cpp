#include <gtest/gtest.h>

#include <bsurf/parallel.hpp>

#include "cli/runner.hpp"

using namespace bsurf;
using namespace bsurf::cli;

namespace {

int spec_error_line(const std::string& text) {
  try {
    parse_run_spec(text);
  } catch (const SpecError& e) {
    return e.line();
  }
  return 0;
}

RunResult run_text(const std::string& text) { return run(parse_run_spec(text)); }

}  // namespace

TEST(ParseRunSpec, AcceptsMinimalSpec) {
  const auto s = parse_run_spec(R"({"command": "rh", "seed": 7, "output": "x"})");
  EXPECT_EQ(s.command, "rh");
  EXPECT_EQ(s.seed, 7u);
  EXPECT_EQ(s.output, "x");
  EXPECT_TRUE(s.params.empty());
}

TEST(ParseRunSpec, UnknownFieldReportsItsLine) {
  EXPECT_EQ(spec_error_line("{\n  \"command\": \"rh\",\n  \"colour\": 3\n}"), 3);
}

TEST(ParseRunSpec, UnknownParameterReportsItsLine) {
  EXPECT_EQ(spec_error_line("{\n  \"command\": \"rh\",\n  \"params\": {\n    \"modez\": 3\n  }\n}"), 4);
}

TEST(ParseRunSpec, MalformedJsonReportsItsLine) {
  EXPECT_EQ(spec_error_line("{\n  \"command\": \"rh\",\n  \"seed\": ,\n}"), 3);
}

TEST(ParseRunSpec, MissingRequiredParameter) {
  EXPECT_EQ(spec_error_line("{\n  \"command\": \"obstruction\",\n  \"params\": {}\n}"), 3);
}

TEST(ParseRunSpec, RejectsBadTypes) {
  EXPECT_THROW(parse_run_spec(R"({"command": "rh", "seed": -1})"), SpecError);
  EXPECT_THROW(parse_run_spec(R"({"command": "nope"})"), SpecError);
  EXPECT_THROW(parse_run_spec(R"({"params": {}})"), SpecError);
  EXPECT_THROW(parse_run_spec("[1, 2]"), SpecError);
}

TEST(Run, RhDiscExample) {
  const auto r = run_text(R"({"command": "rh", "params": {"domain": "disc", "aDegree": 2, "modes": 16}})");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.result["kernelDimension"], 5);
  EXPECT_EQ(r.result["status"], "ok");
}

TEST(Run, ObstructionConstantExample) {
  const auto r = run_text(R"({"command": "obstruction", "params": {"alphaCoeffs": [[2, 0]], "r": 0.9}})");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.result["intersections"]["hyperbola"]["count"], 1);
}

TEST(Run, HyperellipticExample) {
  const auto r = run_text(
      R"({"command": "hyperelliptic", "params": {"branchPoints": [[0.3, 0], [-0.4, 0], [0, 0.5]]}})");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.result["topology"]["genus"], 1);
  EXPECT_EQ(r.result["topology"]["boundaryComponents"], 1);
  EXPECT_EQ(r.result["report"]["degF"], 3);
  EXPECT_EQ(r.result["report"]["classF"], true);
  EXPECT_FALSE(r.curves.empty());
}

TEST(Run, DegenerateCurveIsAnInputError) {
  const auto r = run_text(R"({"command": "hyperelliptic", "params": {"branchPoints": [[0.3, 0], [0.3, 0]]}})");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.result["status"], "input-error");
  EXPECT_EQ(r.result["error"]["code"], "DegenerateCurve");
}

TEST(Run, NoConvergenceIsAVerificationFailure) {
  const auto r = run_text(
      R"({"command": "deform", "params": {"family": "radial", "epsilon": 0.02, "f0Zeros": [[0.2, 0], [0, -0.3]], "maxIter": 1}})");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.result["error"]["code"], "NoConvergence");
  EXPECT_EQ(r.result["trace"].size(), 2u);
}

TEST(Run, UnknownFamilyIsAnInputError) {
  const auto r = run_text(R"({"command": "deform", "params": {"family": "cubic", "f0Zeros": [[0.2, 0]]}})");
  EXPECT_EQ(r.exit_code, 1);
}

TEST(Run, DeformWritesResidualTrace) {
  const auto r = run_text(
      R"({"command": "deform", "params": {"family": "mixed", "epsilon": 0.01, "f0Zeros": [[0.2, 0], [0, -0.3]]}})");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.result["continuation"]["kernelDimension"], 5);
  EXPECT_TRUE(std::any_of(r.curves.begin(), r.curves.end(), [](const CurveRow& c) { return c.series == "residual"; }));
}

TEST(Run, SigmaWorkedExample) {
  const auto r = run_text(
      R"({"command": "sigma", "seed": 3, "params": {"blaschkeZeros": [[0, 0], [0, 0]], "g1Coeffs": [[0, 0], [1, 0], [0, 0], [-1, 0]], "g2Coeffs": [[0, 0], [0, 0], [0, 0], [1, 0]], "pairs": 2000}})");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_GT(r.result["embedding"]["minSeparationRatio"].get<double>(), 0.0);
}

TEST(Run, IdenticalSpecGivesIdenticalBytes) {
  const std::string text =
      R"({"command": "hyperelliptic", "seed": 11, "params": {"branchPoints": [[0.3, 0], [-0.4, 0], [0, 0.5], [0.1, -0.6]], "samples": 60}})";
  EXPECT_EQ(run_text(text).result.dump(2), run_text(text).result.dump(2));
}

TEST(Run, ThreadCountDoesNotChangeResults) {
  const std::string text =
      R"({"command": "rh", "params": {"domain": "annulus", "aDegree": 2, "modes": 16}})";
  set_max_threads(1);
  const auto a = run_text(text);
  set_max_threads(8);
  const auto b = run_text(text);
  set_max_threads(0);
  EXPECT_EQ(a.result.dump(), b.result.dump());
  EXPECT_EQ(curves_csv(a.curves), curves_csv(b.curves));
}

TEST(CurvesCsv, HasHeaderAndFullPrecision) {
  const auto s = curves_csv({{"f", 0.5, 1.0 / 3.0, -2.0}});
  EXPECT_EQ(s.substr(0, s.find('\n')), "series,t,re,im");
  EXPECT_NE(s.find("f,0.5,0.33333333333333331,-2"), std::string::npos);
}

TEST(JsonRoundTrip, RealSentinels) {
  EXPECT_EQ(real_to_json(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(real_from_json(real_to_json(-std::numeric_limits<double>::infinity())),
            -std::numeric_limits<double>::infinity());
  EXPECT_EQ(real_from_json(real_to_json(0.25)), 0.25);
}

TEST(JsonRoundTrip, Complex) {
  const Complex z(0.1, -1e-300);
  EXPECT_EQ(complex_from_json(complex_to_json(z)), z);
}

TEST(JsonRoundTrip, RHSolution) {
  const BoundaryData d{PlanarDomain::annulus(0.5), [](std::size_t l, Complex z) { return l == 0 ? z * z : Complex(1); },
                       [](std::size_t, Complex z) { return z.real(); }};
  const auto sol = rh_solve(d.sample(64), 16);
  const json j = sol;
  const auto back = j.get<RHSolution>();
  EXPECT_EQ(json(back), j);
  EXPECT_EQ(back.kernel_dimension(), sol.kernel_dimension());
  EXPECT_EQ(back.particular, sol.particular);
}

TEST(JsonRoundTrip, ModuleReports) {
  const HyperellipticCurve curve({0.3, -0.4, Complex(0, 0.5)});
  const auto rep = verify_class_F(curve, 100, 1);
  EXPECT_EQ(json(json(rep).get<ClassFReport>()), json(rep));
  const auto top = topology(curve);
  EXPECT_EQ(json(json(top).get<Topology>()), json(top));

  const Polynomial alpha{1.0, Complex(0.5, -1)};
  const auto cert = minimal_blocking_k(alpha, 0.9);
  EXPECT_EQ(json(json(cert).get<BlockingCertificate>()), json(cert));
  const auto ir = graph_intersections(alpha, cert.k0, 0.9);
  EXPECT_EQ(json(json(ir).get<IntersectionReport>()), json(ir));

  const BlaschkeProduct f0({0.2, Complex(0, -0.3)});
  const auto cr = newton_continue({RhoFamily::WCoupled, 0.01}, f0, Polynomial{0.0, 0.5});
  const json cj = continuation_to_json(cr);
  EXPECT_EQ(continuation_to_json(continuation_from_json(cj)), cj);
  const auto hr = verify_on_hypersurface(cr.state, {RhoFamily::WCoupled, 0.01}, 4);
  EXPECT_EQ(json(json(hr).get<HypersurfaceReport>()), json(hr));
}

TEST(JsonRoundTrip, SigmaReports) {
  const BlaschkeProduct f({0.0, 0.0});
  const SigmaVariety v(make_separating_data(f, Polynomial{0.0, 1.0, 0.0, -1.0}, Polynomial{0.0, 0.0, 0.0, 1.0}));
  const auto choice = choose_alpha(v);
  const json j = choice;
  EXPECT_EQ(json(j.get<AlphaChoice>()), j);
  const auto emb = assemble_embedding(v, choice.alpha, choice.d0, 1, 500);
  EXPECT_EQ(json(json(emb).get<EmbeddingReport>()), json(emb));
  const RoundDisc d{Complex(0.1, 0.2), 0.3};
  EXPECT_EQ(json(json(d).get<RoundDisc>()), json(d));
}

TEST(Run, DeformConvergenceScanIsReported) {
  const auto r = run_text(
      R"({"command": "deform", "params": {"family": "wcoupled", "epsilon": 0.01, "f0Zeros": [[0.2, 0], [0, -0.3]], "scanRadius": true}})");
  EXPECT_EQ(r.exit_code, 0);
  const auto scan = r.result["convergenceScan"].get<ConvergenceScan>();
  EXPECT_GE(scan.radius, 0.005);
  EXPECT_EQ(json(scan), r.result["convergenceScan"]);
}
