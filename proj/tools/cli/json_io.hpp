#pragma once

#include <nlohmann/json.hpp>

#include <bsurf/deform.hpp>
#include <bsurf/hyperelliptic.hpp>
#include <bsurf/obstruction.hpp>
#include <bsurf/rh.hpp>
#include <bsurf/sigma.hpp>

namespace bsurf {

using nlohmann::json;

/// [re, im]
json complex_to_json(Complex z);
Complex complex_from_json(const json& j);
json complex_list_to_json(const std::vector<Complex>& zs);
std::vector<Complex> complex_list_from_json(const json& j);

/// Finite values as numbers, infinities as the strings "inf" / "-inf".
json real_to_json(double x);
double real_from_json(const json& j);

void to_json(json& j, const ClassFReport& r);
void from_json(const json& j, ClassFReport& r);
void to_json(json& j, const Topology& t);
void from_json(const json& j, Topology& t);

void to_json(json& j, const ComponentCount& c);
void from_json(const json& j, ComponentCount& c);
void to_json(json& j, const IntersectionReport& r);
void from_json(const json& j, IntersectionReport& r);
void to_json(json& j, const BlockingCertificate& c);
void from_json(const json& j, BlockingCertificate& c);

void to_json(json& j, const SeriesLayout& l);
void from_json(const json& j, SeriesLayout& l);
void to_json(json& j, const RHSolution& s);
void from_json(const json& j, RHSolution& s);
void to_json(json& j, const KernelDimension& k);
void from_json(const json& j, KernelDimension& k);

void to_json(json& j, const RoundDisc& d);
void from_json(const json& j, RoundDisc& d);
void to_json(json& j, const CollidingPair& p);
void from_json(const json& j, CollidingPair& p);
void to_json(json& j, const AlphaChoice& a);
void from_json(const json& j, AlphaChoice& a);
void to_json(json& j, const EmbeddingReport& r);
void from_json(const json& j, EmbeddingReport& r);

void to_json(json& j, const HypersurfaceReport& r);
void from_json(const json& j, HypersurfaceReport& r);
void to_json(json& j, const ConvergenceScan& s);
void from_json(const json& j, ConvergenceScan& s);
json continuation_to_json(const ContinuationResult& r);
ContinuationResult continuation_from_json(const json& j);

}  // namespace bsurf
