#pragma once

#include <string>

#include <json.hpp>

#include "heyde/continuum.hpp"
#include "heyde/distribution.hpp"
#include "heyde/engine.hpp"
#include "heyde/group.hpp"
#include "heyde/polyfd.hpp"

namespace heyde::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Rationals travel as canonical "p/q" (or "p") strings.
mpq_class rational_from_string(const std::string& s);
std::string rational_to_string(const mpq_class& q);
/// Accepts a JSON number, a rational string ("1/2"), or a decimal string.
double number_from_json(const json& j);

GroupElement element_from_string(const FiniteAbelianGroup& g, const std::string& s);

FiniteAbelianGroup group_from_json(const json& j);
json group_to_json(const FiniteAbelianGroup& g);

Endomorphism endo_from_json(const FiniteAbelianGroup& g, const json& j);
json endo_to_json(const Endomorphism& e);

GroupDistribution distribution_from_json(const FiniteAbelianGroup& g, const json& j);
json distribution_to_json(const GroupDistribution& d);

/// Full instance document: {"group":..., "alpha":..., "mu1":..., "mu2":...}.
HeydeInstance instance_from_json(const json& j);
json instance_to_json(const HeydeInstance& inst);

json subgroup_to_json(const Subgroup& s);
json decomposition_to_json(const Decomposition& d);
json fuzz_report_to_json(const FuzzReport& r);
json reduction_report_to_json(const ReductionReport& r, const FiniteAbelianGroup& g);

ThetaParams theta_from_json(const json& j);
json theta_to_json(const ThetaParams& p);

GaussianParams gaussian_from_json(const json& j);
StructuredDistribution structured_from_json(const FiniteAbelianGroup& g, const json& j);

/// Validates the optional "schema" field ("1" when present).
void check_schema(const json& j);

/// Loads and parses a config file; ConfigError on unreadable or invalid JSON.
json load_config(const std::string& path);

}  // namespace heyde::io
