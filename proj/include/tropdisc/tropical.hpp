#pragma once

#include "tropdisc/bergman.hpp"
#include "tropdisc/cone.hpp"
#include "tropdisc/system.hpp"

#include <string>
#include <vector>

namespace tropdisc {

// A cone in the image space R^N. For mapped flag cones, generators are the
// primitive nonzero images of the flag's incidence vectors in discovery
// order; for merged and intersection cones they are the extreme rays.
struct ImageCone {
    std::vector<IntVector> generators;
    PolyCone geometry;
    std::vector<int> label_members;  // 0-based V-column indices, sorted
    std::vector<std::string> source_flags;
    std::string name;

    int span_dim() const { return geometry.span_dim(); }
};

// Image of one Bergman cone under V; the lineality direction maps to zero
// and is dropped.
ImageCone map_cone(const IntMatrix& V, const BergmanCone& c);

struct MergeResult {
    std::vector<ImageCone> cones;
    // Labels of connected same-span groups whose union is not convex; their
    // cones are kept unmerged.
    std::vector<std::string> non_convex_groups;
};

// Groups cones by linear span, connects groups through intersections of
// positive dimension, and replaces each connected component whose union is
// convex by that union with extreme-ray generators and the unioned label.
MergeResult merge_cones(const std::vector<ImageCone>& cones);

// Exact intersection; trivial result allowed. The name joins the parents.
ImageCone intersect_pair(const ImageCone& a, const ImageCone& b);

struct HiddenRay {
    IntVector ray;
    std::vector<std::string> parents;  // names of the maximal cones meeting there
};

struct TropicalFan {
    int dim = 0;
    std::vector<ImageCone> cones;        // merged maximal cones, canonical order
    std::vector<IntVector> direct_rays;  // primitive V columns, first occurrence order
    std::vector<HiddenRay> hidden_rays;  // sorted by ray
    Int multiplicity = 0;
    bool hypersurface = false;
    std::vector<std::string> warnings;

    std::vector<IntVector> all_rays() const;  // direct + hidden
};

// Full pipeline: matroid on rows of U, Bergman fan, image under V, merge,
// then pairwise intersections iterated to a fixpoint to expose rays that are
// not columns of V.
TropicalFan tropicalize(const DerivedMatrices& d);

}  // namespace tropdisc
