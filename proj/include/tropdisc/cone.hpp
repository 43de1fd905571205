#pragma once

#include "tropdisc/exact.hpp"

#include <vector>

namespace tropdisc {

// Reduced row echelon form over the rationals; returns the nonzero rows,
// pivots in increasing column order. Optionally reports the pivot columns.
std::vector<RatVector> rref(std::vector<RatVector> rows, std::vector<int>* pivot_cols = nullptr);

// Canonical basis of { x : r.x = 0 for every row r }, as primitive integer
// vectors, one per free column of the RREF, ordered by that column.
std::vector<IntVector> kernel_basis(const std::vector<RatVector>& rows, int dim);

// Exact feasibility of  x = sum lambda_i gens_i + sum mu_j lines_j  with
// lambda >= 0 and mu free; phase-1 simplex over rationals with Bland's rule.
bool in_cone_hull(const std::vector<IntVector>& gens, const std::vector<IntVector>& lines,
                  const IntVector& x);

// Halfspace description: equations e.x = 0 and facet inequalities a.x >= 0.
struct HRep {
    std::vector<IntVector> equations;
    std::vector<IntVector> inequalities;
};

// Closed convex polyhedral cone in canonical form: a primitive RREF basis of
// the lineality space, plus primitive extreme rays reduced modulo that space
// and sorted; the minimal H-representation is kept alongside. Two equal
// cones compare equal componentwise.
class PolyCone {
public:
    PolyCone() = default;

    static PolyCone trivial(int dim);
    static PolyCone from_generators(int dim, const std::vector<IntVector>& gens);
    static PolyCone from_hrep(int dim, const HRep& h);

    int ambient_dim() const { return dim_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    const std::vector<IntVector>& lineality() const { return lin_; }
    const HRep& hrep() const { return hrep_; }
    int span_dim() const { return span_dim_; }
    bool is_trivial() const { return rays_.empty() && lin_.empty(); }

    // Canonical primitive RREF basis of the linear span; usable as a
    // dictionary key for grouping cones by span.
    const std::vector<IntVector>& span_basis() const { return span_; }

    bool contains(const IntVector& x) const;
    bool contains(const PolyCone& other) const;

    bool operator==(const PolyCone& o) const {
        return dim_ == o.dim_ && rays_ == o.rays_ && lin_ == o.lin_;
    }

    friend PolyCone intersect(const PolyCone& a, const PolyCone& b);

private:
    static PolyCone canonicalize(int dim, std::vector<IntVector> rays, std::vector<IntVector> lin);

    int dim_ = 0;
    int span_dim_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IntVector> lin_;
    std::vector<IntVector> span_;
    HRep hrep_;
};

PolyCone intersect(const PolyCone& a, const PolyCone& b);

// Whether the set union of `members` equals `hull`. All cones must share
// hull's linear span; members must be contained in hull. Decided exactly by
// recursive subdivision of hull along the members' facet hyperplanes.
bool union_equals(const std::vector<PolyCone>& members, const PolyCone& hull);

}  // namespace tropdisc
