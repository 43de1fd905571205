#include <doctest.h>

#include "tropdisc/bergman.hpp"
#include "tropdisc/errors.hpp"
#include "tropdisc/system.hpp"

#include <algorithm>
#include <set>

using namespace tropdisc;

namespace {

LinearMatroid bivariate_matroid() {
    SystemSpec s;
    s.n = 2;
    s.equations = {{{2, 0}, {{1, 1}, {1, 2}}}, {{0, 2}, {{2, 1}}}};
    return LinearMatroid(derive(s).U);
}

}  // namespace

TEST_CASE("incidence vectors") {
    CHECK(incidence_vector({0, 2}, 4) == IntVector{1, 0, 1, 0});
    CHECK(incidence_vector({}, 3) == IntVector{0, 0, 0});
}

TEST_CASE("fan over the bivariate fixture matroid") {
    LinearMatroid m = bivariate_matroid();
    BergmanFan fan = bergman_fan(m);
    CHECK(fan.ground_size == 7);
    CHECK(fan.matroid_rank == 3);
    CHECK(fan.lineality == IntVector{1, 1, 1, 1, 1, 1, 1});
    CHECK(fan.cones.size() == 36);

    std::set<std::string> labels;
    for (const BergmanCone& c : fan.cones) {
        REQUIRE(c.flag.chain.size() == 2);
        REQUIRE(c.generators.size() == 2);
        // generators are the incidence vectors of the chain, in order
        CHECK(c.generators[0] == incidence_vector(c.flag.chain[0].members, 7));
        CHECK(c.generators[1] == incidence_vector(c.flag.chain[1].members, 7));
        labels.insert(c.label);
    }
    CHECK(labels.size() == 36);  // distinct flags, distinct labels
    CHECK(labels.count("3<346") == 1);
    CHECK(labels.count("5<357") == 1);
    CHECK(labels.count("1<12") == 1);

    // lexicographic order by flag chains
    std::vector<std::string> seq;
    for (const BergmanCone& c : fan.cones) seq.push_back(c.label);
    CHECK(seq.front() == "1<12");
    CHECK(std::is_sorted(fan.cones.begin(), fan.cones.end(),
                         [](const BergmanCone& a, const BergmanCone& b) {
                             std::vector<std::vector<int>> ka, kb;
                             for (const Flat& f : a.flag.chain) ka.push_back(f.members);
                             for (const Flat& f : b.flag.chain) kb.push_back(f.members);
                             return ka < kb;
                         }));
}

TEST_CASE("every cone comes from a genuine flag") {
    LinearMatroid m = bivariate_matroid();
    BergmanFan fan = bergman_fan(m);
    for (const BergmanCone& c : fan.cones) {
        const Flat& f1 = c.flag.chain[0];
        const Flat& f2 = c.flag.chain[1];
        CHECK(m.rank_of(f1.members) == 1);
        CHECK(m.rank_of(f2.members) == 2);
        CHECK(m.closure(f1.members) == f1.members);
        CHECK(m.closure(f2.members) == f2.members);
        CHECK(std::includes(f2.members.begin(), f2.members.end(), f1.members.begin(),
                            f1.members.end()));
        CHECK(f1.members != f2.members);
    }
}

TEST_CASE("rank below two is refused") {
    // univariate fixture: all three U rows are proportional, rank 1
    SystemSpec s;
    s.n = 1;
    s.equations = {{{2}, {{1}}}};
    LinearMatroid m(derive(s).U);
    CHECK(m.rank() == 1);
    CHECK_THROWS_AS(bergman_fan(m), RankTooSmall);
}

TEST_CASE("uniform matroid of rank two") {
    // three generic vectors in the plane: flats of rank 1 are the singletons,
    // so the flags are exactly the three singleton chains
    IntMatrix mat = IntMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}});
    BergmanFan fan = bergman_fan(LinearMatroid(mat));
    CHECK(fan.cones.size() == 3);
    for (const BergmanCone& c : fan.cones) {
        CHECK(c.flag.chain.size() == 1);
        CHECK(c.generators.size() == 1);
    }
}
