#pragma once

#include "tropdisc/exact.hpp"
#include "tropdisc/matroid.hpp"

#include <string>
#include <vector>

namespace tropdisc {

// 0/1 vector of length `size` supported exactly on `members`.
IntVector incidence_vector(const std::vector<int>& members, int size);

// Cone of one maximal flag: generators are the incidence vectors of the
// flats in chain order. The cone lives in R^|E| with lineality line R*1;
// the lineality generator is stored once on the fan.
struct BergmanCone {
    Flag flag;
    std::vector<IntVector> generators;
    std::string label;  // e.g. "3<346"
};

struct BergmanFan {
    int ground_size = 0;
    int matroid_rank = 0;
    IntVector lineality;  // the all-ones vector
    std::vector<BergmanCone> cones;
};

// One cone per maximal flag of proper flats, lexicographic by flag. Throws
// RankTooSmall when the matroid rank is below 2 (the fan would be the
// lineality line alone, with no flag cones).
BergmanFan bergman_fan(const LinearMatroid& m);

}  // namespace tropdisc
