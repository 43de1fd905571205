#pragma once

#include "tropdisc/polytope.hpp"
#include "tropdisc/system.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace tropdisc {

// Homogeneous rational parameter vector in the source projective space.
struct ParameterPoint {
    RatVector s;
};

// Exact evaluation of the integer-exponent parametrization: component
// lambda is the product over rows u_j of U of <u_j, s> raised to V[lambda][j].
// Degree-0 homogeneous in s because the rows of V sum to zero. Throws
// PoleOrZero when any linear form or coordinate vanishes, naming the form.
RatVector eval_w(const DerivedMatrices& d, const ParameterPoint& s);

// All branches of the fractional-power parametrization, as complex doubles:
// every consistent choice of |det omega|-th roots, one root per equation row,
// deduplicated within dedup_tol. Raising any branch componentwise to the
// power det omega reproduces eval_w.
std::vector<std::vector<std::complex<double>>> eval_x_branches(const DerivedMatrices& d,
                                                               const ParameterPoint& s,
                                                               double dedup_tol = 1e-9);

// min over branches of |delta(x(s))| / (1 + max monomial magnitude).
double residual(const DerivedMatrices& d, const SupportPolynomial& delta, const ParameterPoint& s);

// Deterministic rejection sampler: integer coordinates in [-9, 9] avoiding
// zero coordinates and vanishing linear forms.
std::vector<ParameterPoint> sample_points(const DerivedMatrices& d, int count, std::uint64_t seed);

}  // namespace tropdisc
