#pragma once

#include "tropdisc/hornkapranov.hpp"
#include "tropdisc/polytope.hpp"
#include "tropdisc/system.hpp"
#include "tropdisc/tropical.hpp"

#include <json.hpp>

#include <string>

namespace tropdisc {

// Reports preserve insertion order so that structured output is byte-stable.
using Json = nlohmann::ordered_json;

Json system_to_json(const SystemSpec& spec);
SystemSpec system_from_json(const Json& j);

// Reads the canonical system document { n, equations: [{omega, lambda}] }.
SystemSpec load_system(const std::string& path);

// Reads either display notation or a structured list
// [{"exponent": [...], "coeff": c}, ...]; c may be an integer or a string.
SupportPolynomial load_polynomial(const std::string& path, int expected_dim = 0);

Json derived_report(const DerivedMatrices& d);
Json normals_report(const NormalDirections& nd);
Json tropical_report(const TropicalFan& fan);
Json oracle_report(const PolytopeFacets& facets, const RayComparison& cmp);

struct ResidualSample {
    RatVector s;
    int branch_count = 0;
    double residual_value = 0.0;
};

Json hk_report(const std::vector<ResidualSample>& samples, double tolerance);

// Plain-text table rendering of a structured report.
std::string render_human(const Json& report);

}  // namespace tropdisc
