#include "tropdisc/bergman.hpp"

#include "tropdisc/errors.hpp"

#include <stdexcept>
#include <string>

namespace tropdisc {

IntVector incidence_vector(const std::vector<int>& members, int size) {
    IntVector v(size);
    for (int e : members) {
        if (e < 0 || e >= size) throw std::out_of_range("incidence_vector: element out of range");
        v[e] = 1;
    }
    return v;
}

BergmanFan bergman_fan(const LinearMatroid& m) {
    if (m.rank() < 2)
        throw RankTooSmall("bergman_fan: matroid rank " + std::to_string(m.rank()) +
                           " leaves no proper flags; the fan is the lineality line only");
    BergmanFan fan;
    fan.ground_size = m.size();
    fan.matroid_rank = m.rank();
    fan.lineality = IntVector(m.size(), Int(1));
    for (const Flag& flag : m.maximal_flags()) {
        BergmanCone cone;
        cone.flag = flag;
        for (const Flat& f : flag.chain)
            cone.generators.push_back(incidence_vector(f.members, m.size()));
        cone.label = flag_label(flag);
        fan.cones.push_back(std::move(cone));
    }
    return fan;
}

}  // namespace tropdisc
