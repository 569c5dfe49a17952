#include "cli/json_io.hpp"

#include <cmath>
#include <limits>

namespace bsurf {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::InvalidArgument, "complex numbers are [re, im] pairs, got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_list_to_json(const std::vector<Complex>& zs) {
  json out = json::array();
  for (Complex z : zs) out.push_back(complex_to_json(z));
  return out;
}

std::vector<Complex> complex_list_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected a list of [re, im] pairs");
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

json real_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  return j.get<double>();
}

void to_json(json& j, const ClassFReport& r) {
  j = {{"hatGenus", r.hat_genus},
       {"genus", r.genus},
       {"boundaryComponents", r.boundary_components},
       {"liftCount", r.lift_count},
       {"degF", r.deg_f},
       {"degreeBound", r.degree_bound},
       {"degreeCondition", r.degree_condition},
       {"maxBoundaryDeviation", r.max_boundary_deviation},
       {"maxSquareIdentityResidual", r.max_square_identity_residual},
       {"minImageDistance", r.min_image_distance},
       {"minImmersionNorm", r.min_immersion_norm},
       {"samples", r.samples},
       {"classF", r.class_f}};
}

void from_json(const json& j, ClassFReport& r) {
  j.at("hatGenus").get_to(r.hat_genus);
  j.at("genus").get_to(r.genus);
  j.at("boundaryComponents").get_to(r.boundary_components);
  j.at("liftCount").get_to(r.lift_count);
  j.at("degF").get_to(r.deg_f);
  j.at("degreeBound").get_to(r.degree_bound);
  j.at("degreeCondition").get_to(r.degree_condition);
  j.at("maxBoundaryDeviation").get_to(r.max_boundary_deviation);
  j.at("maxSquareIdentityResidual").get_to(r.max_square_identity_residual);
  j.at("minImageDistance").get_to(r.min_image_distance);
  j.at("minImmersionNorm").get_to(r.min_immersion_norm);
  j.at("samples").get_to(r.samples);
  j.at("classF").get_to(r.class_f);
}

void to_json(json& j, const Topology& t) {
  j = {{"genus", t.genus},
       {"boundaryComponents", t.boundary_components},
       {"rhsWinding", t.rhs_winding},
       {"liftCount", t.lift_count}};
}

void from_json(const json& j, Topology& t) {
  j.at("genus").get_to(t.genus);
  j.at("boundaryComponents").get_to(t.boundary_components);
  j.at("rhsWinding").get_to(t.rhs_winding);
  j.at("liftCount").get_to(t.lift_count);
}

void to_json(json& j, const ComponentCount& c) {
  j = {{"count", c.count ? json(*c.count) : json(nullptr)}, {"identicallyZero", c.identically_zero}};
}

void from_json(const json& j, ComponentCount& c) {
  c.count = j.at("count").is_null() ? std::nullopt : std::optional<int>(j.at("count").get<int>());
  j.at("identicallyZero").get_to(c.identically_zero);
}

void to_json(json& j, const IntersectionReport& r) {
  j = {{"k", r.k},
       {"radiusRequested", r.radius_requested},
       {"radius", r.radius},
       {"hyperbola", r.hyperbola},
       {"lineOne", r.line_one},
       {"lines", r.lines},
       {"totalHits", r.total_hits()}};
}

void from_json(const json& j, IntersectionReport& r) {
  j.at("k").get_to(r.k);
  j.at("radiusRequested").get_to(r.radius_requested);
  j.at("radius").get_to(r.radius);
  j.at("hyperbola").get_to(r.hyperbola);
  j.at("lineOne").get_to(r.line_one);
  j.at("lines").get_to(r.lines);
}

void to_json(json& j, const BlockingCertificate& c) {
  j = {{"k0", c.k0}, {"radius", c.radius}, {"maxModulus", c.max_modulus}, {"winding", c.winding}};
}

void from_json(const json& j, BlockingCertificate& c) {
  j.at("k0").get_to(c.k0);
  j.at("radius").get_to(c.radius);
  j.at("maxModulus").get_to(c.max_modulus);
  j.at("winding").get_to(c.winding);
}

void to_json(json& j, const SeriesLayout& l) {
  j = {{"kind", l.kind == DomainKind::Disc ? "disc" : "annulus"},
       {"innerRadius", l.inner_radius},
       {"modes", l.modes}};
}

void from_json(const json& j, SeriesLayout& l) {
  l.kind = j.at("kind").get<std::string>() == "disc" ? DomainKind::Disc : DomainKind::Annulus;
  j.at("innerRadius").get_to(l.inner_radius);
  j.at("modes").get_to(l.modes);
}

void to_json(json& j, const RHSolution& s) {
  json kernel = json::array();
  for (const auto& k : s.kernel_basis) kernel.push_back(complex_list_to_json(k));
  j = {{"layout", s.layout},
       {"index", s.index},
       {"kernelDimension", s.kernel_dimension()},
       {"residual", s.residual},
       {"kernelResidual", s.kernel_residual},
       {"solvabilityGuaranteed", s.solvability_guaranteed},
       {"solved", s.solved},
       {"singularValues", s.singular_values},
       {"particular", complex_list_to_json(s.particular)},
       {"kernelBasis", kernel}};
}

void from_json(const json& j, RHSolution& s) {
  j.at("layout").get_to(s.layout);
  j.at("index").get_to(s.index);
  j.at("residual").get_to(s.residual);
  j.at("kernelResidual").get_to(s.kernel_residual);
  j.at("solvabilityGuaranteed").get_to(s.solvability_guaranteed);
  j.at("solved").get_to(s.solved);
  j.at("singularValues").get_to(s.singular_values);
  s.particular = complex_list_from_json(j.at("particular"));
  s.kernel_basis.clear();
  for (const auto& k : j.at("kernelBasis")) s.kernel_basis.push_back(complex_list_from_json(k));
}

void to_json(json& j, const KernelDimension& k) {
  j = {{"dimension", k.dimension}, {"refinedDimension", k.refined_dimension}, {"modes", k.modes}};
}

void from_json(const json& j, KernelDimension& k) {
  j.at("dimension").get_to(k.dimension);
  j.at("refinedDimension").get_to(k.refined_dimension);
  j.at("modes").get_to(k.modes);
}

void to_json(json& j, const RoundDisc& d) {
  j = {{"center", complex_to_json(d.center)}, {"radius", d.radius}};
}

void from_json(const json& j, RoundDisc& d) {
  d.center = complex_from_json(j.at("center"));
  j.at("radius").get_to(d.radius);
}

void to_json(json& j, const CollidingPair& p) {
  j = {{"z", complex_to_json(p.z)}, {"x", complex_to_json(p.x)}, {"y", complex_to_json(p.y)}};
}

void from_json(const json& j, CollidingPair& p) {
  p.z = complex_from_json(j.at("z"));
  p.x = complex_from_json(j.at("x"));
  p.y = complex_from_json(j.at("y"));
}

void to_json(json& j, const AlphaChoice& a) {
  j = {{"alpha", complex_list_to_json(a.alpha.coeffs())},
       {"arcVertices", complex_list_to_json(a.arc_vertices)},
       {"arc", complex_list_to_json(a.arc)},
       {"arcMargin", real_to_json(a.arc_margin)},
       {"region", complex_list_to_json(a.region)},
       {"gridSpacing", a.grid_spacing},
       {"tubeRadius", a.tube_radius},
       {"d0", a.d0},
       {"margin", real_to_json(a.margin)},
       {"fitDegree", a.fit_degree},
       {"sigmaEmpty", a.sigma_empty}};
}

void from_json(const json& j, AlphaChoice& a) {
  a.alpha = Polynomial(complex_list_from_json(j.at("alpha")));
  a.arc_vertices = complex_list_from_json(j.at("arcVertices"));
  a.arc = complex_list_from_json(j.at("arc"));
  a.arc_margin = real_from_json(j.at("arcMargin"));
  a.region = complex_list_from_json(j.at("region"));
  j.at("gridSpacing").get_to(a.grid_spacing);
  j.at("tubeRadius").get_to(a.tube_radius);
  j.at("d0").get_to(a.d0);
  a.margin = real_from_json(j.at("margin"));
  j.at("fitDegree").get_to(a.fit_degree);
  j.at("sigmaEmpty").get_to(a.sigma_empty);
}

void to_json(json& j, const EmbeddingReport& r) {
  j = {{"samples", r.samples},
       {"pairs", r.pairs},
       {"minImageDistance", r.min_image_distance},
       {"minSeparationRatio", r.min_separation_ratio},
       {"minImmersionNorm", r.min_immersion_norm},
       {"maxBoundaryDeviation", r.max_boundary_deviation},
       {"worstX", complex_to_json(r.worst_x)},
       {"worstY", complex_to_json(r.worst_y)}};
}

void from_json(const json& j, EmbeddingReport& r) {
  j.at("samples").get_to(r.samples);
  j.at("pairs").get_to(r.pairs);
  j.at("minImageDistance").get_to(r.min_image_distance);
  j.at("minSeparationRatio").get_to(r.min_separation_ratio);
  j.at("minImmersionNorm").get_to(r.min_immersion_norm);
  j.at("maxBoundaryDeviation").get_to(r.max_boundary_deviation);
  r.worst_x = complex_from_json(j.at("worstX"));
  r.worst_y = complex_from_json(j.at("worstY"));
}

void to_json(json& j, const HypersurfaceReport& r) {
  j = {{"boundarySamples", r.boundary_samples},
       {"outOfSampleResidual", r.out_of_sample_residual},
       {"interiorSamples", r.interior_samples},
       {"interiorMax", r.interior_max},
       {"pairs", r.pairs},
       {"minImageDistance", r.min_image_distance},
       {"minImageRatio", r.min_image_ratio}};
}

void from_json(const json& j, HypersurfaceReport& r) {
  j.at("boundarySamples").get_to(r.boundary_samples);
  j.at("outOfSampleResidual").get_to(r.out_of_sample_residual);
  j.at("interiorSamples").get_to(r.interior_samples);
  j.at("interiorMax").get_to(r.interior_max);
  j.at("pairs").get_to(r.pairs);
  j.at("minImageDistance").get_to(r.min_image_distance);
  j.at("minImageRatio").get_to(r.min_image_ratio);
}

void to_json(json& j, const ConvergenceScan& s) {
  j = {{"radius", s.radius}, {"failedAt", real_to_json(s.failed_at)}, {"probes", s.probes}};
}

void from_json(const json& j, ConvergenceScan& s) {
  j.at("radius").get_to(s.radius);
  s.failed_at = real_from_json(j.at("failedAt"));
  j.at("probes").get_to(s.probes);
}

json continuation_to_json(const ContinuationResult& r) {
  return {{"f0Zeros", complex_list_to_json(r.state.f0().zeros())},
          {"f0Phase", complex_to_json(r.state.f0().phase())},
          {"g0", complex_list_to_json(r.state.g0().coeffs())},
          {"correction", complex_list_to_json(r.state.correction().coeffs())},
          {"trace", r.trace},
          {"halvings", r.halvings},
          {"iterations", r.iterations},
          {"kernelDimension", r.kernel_dimension}};
}

ContinuationResult continuation_from_json(const json& j) {
  ContinuationResult r{
      BoundaryMapState(BlaschkeProduct(complex_list_from_json(j.at("f0Zeros")),
                                       complex_from_json(j.at("f0Phase"))),
                       Polynomial(complex_list_from_json(j.at("g0"))),
                       Polynomial(complex_list_from_json(j.at("correction")))),
      j.at("trace").get<std::vector<double>>(),
      j.at("halvings").get<std::vector<int>>(),
      j.at("iterations").get<int>(),
      j.at("kernelDimension").get<int>()};
  return r;
}

}  // namespace bsurf
