#pragma once

#include "tropdisc/exact.hpp"
#include "tropdisc/tropical.hpp"

#include <map>
#include <string>
#include <vector>

namespace tropdisc {

// Sparse polynomial with exact coefficients, keyed by exponent vector.
struct SupportPolynomial {
    int dim = 0;
    std::map<IntVector, Rat> terms;  // no zero coefficients stored
};

// Parses display notation: signed integer coefficients and x<k>^<e> factors,
// e.g. "432x1^11x3^3 - 1232x1^10x2^2x3^2". Whitespace and '*' separators are
// ignored; like terms combine; cancelled terms disappear. expected_dim 0
// infers the dimension from the largest variable index. Throws ParseError
// with a byte offset on malformed input.
SupportPolynomial parse_polynomial(const std::string& text, int expected_dim = 0);

struct Facet {
    IntVector normal;   // primitive, inward
    Int support_value;  // min over the support of <normal, point>
};

struct PolytopeFacets {
    std::vector<IntVector> vertices;  // sorted
    std::vector<Facet> facets;        // sorted by normal
};

// Brute-force exact facet enumeration of the Newton polytope: every
// dim-subset of the support proposes a hyperplane; one-sided hyperplanes are
// facets. Throws DegenerateSupport unless the support affinely spans.
PolytopeFacets facet_normals(const SupportPolynomial& p);

struct RayComparison {
    std::vector<IntVector> matched;
    std::vector<IntVector> oracle_only;
    std::vector<IntVector> fan_only;
};

// Set comparison of the oracle's primitive inward facet normals against a
// ray list (both deduplicated).
RayComparison compare_rays(const PolytopeFacets& oracle, const std::vector<IntVector>& rays);
RayComparison compare_rays(const PolytopeFacets& oracle, const TropicalFan& fan);

}  // namespace tropdisc
