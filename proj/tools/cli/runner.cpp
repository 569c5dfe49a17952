#include "cli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <set>

namespace bsurf::cli {

namespace {

int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

int line_of_key(const std::string& text, const std::string& key) {
  const auto pos = text.find('"' + key + '"');
  return pos == std::string::npos ? 1 : line_of_offset(text, pos);
}

const std::map<std::string, std::set<std::string>>& allowed_params() {
  static const std::map<std::string, std::set<std::string>> table{
      {"hyperelliptic", {"branchPoints", "samples", "boundarySamples"}},
      {"sigma", {"blaschkeZeros", "phase", "g1Coeffs", "g2Coeffs", "pairs"}},
      {"obstruction", {"alphaCoeffs", "r", "k"}},
      {"rh", {"domain", "innerRadius", "aDegree", "aInner", "aZeros", "modes", "samples", "c", "svdTol"}},
      {"deform", {"family", "epsilon", "f0Zeros", "g0Scale", "modes", "samples", "maxIter", "tol",
                  "finerFactor", "scanRadius"}},
  };
  return table;
}

const std::set<std::string>& required_params(const std::string& command) {
  static const std::map<std::string, std::set<std::string>> table{
      {"hyperelliptic", {"branchPoints"}},
      {"sigma", {"blaschkeZeros", "g1Coeffs"}},
      {"obstruction", {"alphaCoeffs"}},
      {"rh", {}},
      {"deform", {"family", "f0Zeros"}},
  };
  return table.at(command);
}

template <class T>
T param(const json& p, const char* key, T fallback) {
  return p.contains(key) ? p.at(key).get<T>() : fallback;
}

std::vector<Complex> complex_param(const json& p, const char* key) {
  return p.contains(key) ? complex_list_from_json(p.at(key)) : std::vector<Complex>{};
}

void add_curve(RunResult& r, const std::string& series, const std::vector<Complex>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    r.curves.push_back({series, n > 1 ? static_cast<double>(i) / static_cast<double>(n - 1) : 0.0,
                        pts[i].real(), pts[i].imag()});
}

RunResult run_hyperelliptic(const RunSpec& spec) {
  const auto& p = spec.params;
  const HyperellipticCurve curve(complex_param(p, "branchPoints"));
  const int samples = param(p, "samples", 200);
  const int boundary = param(p, "boundarySamples", 512);
  const ClassFReport rep = verify_class_F(curve, samples, spec.seed, boundary);
  RunResult r;
  r.result["report"] = rep;
  r.result["topology"] = topology(curve, boundary);
  r.result["branchPoints"] = complex_list_to_json(curve.branch_points());
  const auto lifts = boundary_lifts(curve, boundary);
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    std::vector<Complex> img;
    for (const auto& sp : lifts[i]) img.push_back(inner_pair(curve, sp).f);
    add_curve(r, "boundary_f_" + std::to_string(i), img);
  }
  r.exit_code = rep.class_f ? 0 : 2;
  return r;
}

RunResult run_sigma(const RunSpec& spec) {
  const auto& p = spec.params;
  const BlaschkeProduct f(complex_param(p, "blaschkeZeros"),
                          p.contains("phase") ? complex_from_json(p.at("phase")) : Complex(1.0));
  const Polynomial g1(complex_param(p, "g1Coeffs"));
  const Polynomial g2 = p.contains("g2Coeffs") ? Polynomial(complex_param(p, "g2Coeffs")) : build_g2(f, g1);
  const SigmaVariety v(make_separating_data(f, g1, g2));
  const AlphaChoice choice = choose_alpha(v);
  const EmbeddingReport emb = assemble_embedding(v, choice.alpha, choice.d0, spec.seed, param(p, "pairs", 10000));

  RunResult r;
  json colliding = json::array();
  for (const auto& cp : colliding_pairs(f, g1)) colliding.push_back(cp);
  r.result["g2"] = complex_list_to_json(g2.coeffs());
  r.result["criticalValues"] = complex_list_to_json(v.data().critical_values);
  r.result["criticalFiber"] = complex_list_to_json(v.data().critical_fiber);
  r.result["collidingPairs"] = colliding;
  r.result["alpha"] = choice;
  r.result["embedding"] = emb;

  add_curve(r, "arc", choice.arc);
  std::vector<Complex> alpha_arc;
  for (Complex z : choice.arc) alpha_arc.push_back(choice.alpha(z));
  add_curve(r, "alpha_arc", alpha_arc);
  for (int ray = 0; ray < 4; ++ray) {
    const std::string name = "sigma_ray_" + std::to_string(ray);
    for (int s = 0; s <= 64; ++s) {
      const double t = s / 64.0;
      for (Complex a : v.fiber(std::polar(t, ray * std::numbers::pi / 2.0)))
        r.curves.push_back({name, t, a.real(), a.imag()});
    }
  }
  r.exit_code = emb.max_boundary_deviation < 1e-9 ? 0 : 2;
  return r;
}

RunResult run_obstruction(const RunSpec& spec) {
  const auto& p = spec.params;
  const Polynomial alpha(complex_param(p, "alphaCoeffs"));
  const double radius = param(p, "r", 0.9);
  const BlockingCertificate cert = minimal_blocking_k(alpha, radius);
  const int k = param(p, "k", cert.k0);
  const IntersectionReport rep = graph_intersections(alpha, k, radius);
  RunResult r;
  r.result["certificate"] = cert;
  r.result["intersections"] = rep;
  std::vector<Complex> img;
  for (int s = 0; s <= 256; ++s) img.push_back(alpha(std::polar(rep.radius, 2.0 * std::numbers::pi * s / 256)));
  add_curve(r, "alpha_circle", img);
  r.exit_code = cert.winding == 1 ? 0 : 2;
  return r;
}

RunResult run_rh(const RunSpec& spec) {
  const auto& p = spec.params;
  const std::string domain_name = param<std::string>(p, "domain", "disc");
  if (domain_name != "disc" && domain_name != "annulus")
    throw Error(ErrorCode::InvalidArgument, "domain must be \"disc\" or \"annulus\"");
  const bool disc = domain_name == "disc";
  const PlanarDomain domain = disc ? PlanarDomain::disc() : PlanarDomain::annulus(param(p, "innerRadius", 0.5));
  const int a_degree = param(p, "aDegree", 0);
  const int a_inner = param(p, "aInner", 0);
  const auto zeros = complex_param(p, "aZeros");
  const double c = param(p, "c", 0.0);
  const double svd_tol = param(p, "svdTol", kDefaultSvdTolerance);

  BoundaryData data{domain,
                    [&](std::size_t loop, Complex z) -> Complex {
                      if (!zeros.empty()) return Polynomial::from_roots(zeros)(z);
                      return std::pow(z, loop == 0 ? a_degree : a_inner);
                    },
                    [c](std::size_t, Complex) { return c; }};
  const int index = rh_index(data.sample(kDefaultLoopSamples));
  const int modes = param(p, "modes", 4 * std::abs(index) + 8);
  const int samples = param(p, "samples", 4 * modes);
  const RHSolution sol = rh_solve(data.sample(samples), modes, svd_tol);

  RunResult r;
  r.result["solution"] = sol;
  r.result["koppelmanDimension"] = koppelman_dimension(sol.index, domain);
  r.result["kernelDimension"] = sol.kernel_dimension();
  try {
    const KernelDimension kd = kernel_dimension(data, modes, svd_tol);
    r.result["kernelCheck"] = kd;
  } catch (const Error& e) {
    r.result["kernelCheck"] = {{"error", e.what()}};
    r.exit_code = 2;
  }
  for (std::size_t l = 0; l < domain.loops().size(); ++l) {
    const auto pts = domain.resampled(samples).loops()[l].points();
    std::vector<Complex> av, kv;
    for (Complex z : pts) {
      av.push_back(data.a(l, z));
      kv.push_back(sol.evaluate(z));
    }
    add_curve(r, "a_loop_" + std::to_string(l), av);
    add_curve(r, "particular_loop_" + std::to_string(l), kv);
  }
  if (sol.solvability_guaranteed &&
      (!sol.solved || sol.kernel_dimension() != koppelman_dimension(sol.index, domain)))
    r.exit_code = 2;
  return r;
}

RhoFamily parse_family(const std::string& s) {
  if (s == "radial") return RhoFamily::Radial;
  if (s == "wcoupled") return RhoFamily::WCoupled;
  if (s == "mixed") return RhoFamily::Mixed;
  throw Error(ErrorCode::InvalidArgument, "family must be radial, wcoupled or mixed");
}

RunResult run_deform(const RunSpec& spec) {
  const auto& p = spec.params;
  const DefectFunctional rho{parse_family(p.at("family").get<std::string>()), param(p, "epsilon", 0.0)};
  const BlaschkeProduct f0(complex_param(p, "f0Zeros"));
  const Polynomial g0{0.0, param(p, "g0Scale", 0.5)};
  NewtonOptions opt;
  opt.modes = param(p, "modes", opt.modes);
  opt.samples = param(p, "samples", opt.samples);
  opt.max_iter = param(p, "maxIter", opt.max_iter);
  opt.tol = param(p, "tol", opt.tol);
  const ContinuationResult res = newton_continue(rho, f0, g0, opt);
  const HypersurfaceReport rep = verify_on_hypersurface(res.state, rho, param(p, "finerFactor", 4), opt, spec.seed);

  RunResult r;
  r.result["continuation"] = continuation_to_json(res);
  r.result["verification"] = rep;
  if (param(p, "scanRadius", false)) r.result["convergenceScan"] = convergence_radius(rho.family, f0, g0, opt);
  for (std::size_t i = 0; i < res.trace.size(); ++i)
    r.curves.push_back({"residual", static_cast<double>(i), res.trace[i], 0.0});
  std::vector<Complex> img;
  for (int s = 0; s <= 256; ++s) img.push_back(res.state.f(std::polar(1.0, 2.0 * std::numbers::pi * s / 256)));
  add_curve(r, "f_boundary", img);
  return r;
}

}  // namespace

RunSpec parse_run_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
  }
  if (!doc.is_object()) throw SpecError(1, "run specification must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "command" && key != "params" && key != "seed" && key != "output")
      throw SpecError(line_of_key(text, key), "unknown field \"" + key + "\"");

  RunSpec spec;
  if (!doc.contains("command") || !doc["command"].is_string())
    throw SpecError(line_of_key(text, "command"), "\"command\" must be a string");
  spec.command = doc["command"].get<std::string>();
  const auto& table = allowed_params();
  if (!table.contains(spec.command))
    throw SpecError(line_of_key(text, "command"), "unknown command \"" + spec.command + "\"");
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) throw SpecError(line_of_key(text, "params"), "\"params\" must be an object");
    spec.params = doc["params"];
  }
  for (const auto& [key, _] : spec.params.items())
    if (!table.at(spec.command).contains(key))
      throw SpecError(line_of_key(text, key), "unknown parameter \"" + key + "\" for " + spec.command);
  for (const auto& key : required_params(spec.command))
    if (!spec.params.contains(key))
      throw SpecError(line_of_key(text, "params"), "missing parameter \"" + key + "\"");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned())
      throw SpecError(line_of_key(text, "seed"), "\"seed\" must be a non-negative integer");
    spec.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) throw SpecError(line_of_key(text, "output"), "\"output\" must be a string");
    spec.output = doc["output"].get<std::string>();
  }
  return spec;
}

RunResult run(const RunSpec& spec) {
  RunResult r;
  try {
    if (spec.command == "hyperelliptic") r = run_hyperelliptic(spec);
    else if (spec.command == "sigma") r = run_sigma(spec);
    else if (spec.command == "obstruction") r = run_obstruction(spec);
    else if (spec.command == "rh") r = run_rh(spec);
    else if (spec.command == "deform") r = run_deform(spec);
    else throw Error(ErrorCode::InvalidArgument, "unknown command " + spec.command);
  } catch (const NoConvergenceError& e) {
    r = {2, {{"error", {{"code", "NoConvergence"}, {"message", e.what()}}}, {"trace", e.trace()}}, {}};
  } catch (const Error& e) {
    r = {is_verification_failure(e.code()) ? 2 : 1,
         {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}},
         {}};
  } catch (const json::exception& e) {
    r = {1, {{"error", {{"code", "InvalidArgument"}, {"message", e.what()}}}}, {}};
  }
  json out = {{"command", spec.command}, {"seed", spec.seed}, {"params", spec.params},
              {"status", r.exit_code == 0 ? "ok" : (r.exit_code == 1 ? "input-error" : "verification-failure")}};
  out.update(r.result);
  r.result = std::move(out);
  return r;
}

std::string curves_csv(const std::vector<CurveRow>& rows) {
  std::string s = "series,t,re,im\n";
  char buf[128];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g\n", row.t, row.re, row.im);
    s += row.series;
    s += buf;
  }
  return s;
}

void write_artifacts(const RunResult& result, const std::string& prefix) {
  std::ofstream(prefix + ".result.json") << result.result.dump(2) << '\n';
  if (!result.curves.empty()) std::ofstream(prefix + ".curves.csv") << curves_csv(result.curves);
}

}  // namespace bsurf::cli
