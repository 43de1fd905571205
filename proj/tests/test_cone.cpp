#include <doctest.h>

#include "tropdisc/cone.hpp"

#include <algorithm>
#include <random>

using namespace tropdisc;

namespace {

IntVector iv(std::initializer_list<int> xs) {
    IntVector v;
    for (int x : xs) v.push_back(x);
    return v;
}

// Membership oracle straight from the generator definition, independent of
// the H-representation kept by PolyCone.
bool hull_member(const PolyCone& c, const IntVector& x) {
    return in_cone_hull(c.rays(), c.lineality(), x);
}

}  // namespace

TEST_CASE("rref and kernel") {
    std::vector<RatVector> rows = {{Rat(2), Rat(4), Rat(2)}, {Rat(1), Rat(2), Rat(3)}};
    std::vector<int> pivots;
    auto r = rref(rows, &pivots);
    REQUIRE(r.size() == 2);
    CHECK(pivots == std::vector<int>{0, 2});
    CHECK(r[0] == RatVector{Rat(1), Rat(2), Rat(0)});
    CHECK(r[1] == RatVector{Rat(0), Rat(0), Rat(1)});

    auto k = kernel_basis(rows, 3);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == iv({-2, 1, 0}));

    CHECK(kernel_basis({}, 2).size() == 2);
}

TEST_CASE("cone from generators reduces to extreme rays") {
    PolyCone c = PolyCone::from_generators(2, {iv({1, 0}), iv({1, 1}), iv({0, 1}), iv({2, 2})});
    CHECK(c.span_dim() == 2);
    CHECK(c.lineality().empty());
    CHECK(c.rays() == std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
}

TEST_CASE("opposite generators become lineality") {
    PolyCone c = PolyCone::from_generators(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})});
    REQUIRE(c.lineality().size() == 1);
    CHECK(c.lineality()[0] == iv({1, 0}));
    REQUIRE(c.rays().size() == 1);
    // the ray is reduced modulo the lineality space
    CHECK(c.rays()[0] == iv({0, 1}));
    CHECK(c.span_dim() == 2);
    CHECK(c.contains(iv({-5, 3})));
    CHECK(!c.contains(iv({0, -1})));
}

TEST_CASE("trivial and full cones") {
    PolyCone t = PolyCone::trivial(3);
    CHECK(t.is_trivial());
    CHECK(t.span_dim() == 0);
    CHECK(t.contains(iv({0, 0, 0})));
    CHECK(!t.contains(iv({1, 0, 0})));

    PolyCone full = PolyCone::from_generators(
        2, {iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})});
    CHECK(full.lineality().size() == 2);
    CHECK(full.rays().empty());
    CHECK(full.contains(iv({7, -9})));
    CHECK(full.hrep().inequalities.empty());
    CHECK(full.hrep().equations.empty());
}

TEST_CASE("halfspace representation of a quadrant") {
    PolyCone c = PolyCone::from_generators(2, {iv({1, 0}), iv({0, 1})});
    CHECK(c.hrep().equations.empty());
    std::vector<IntVector> ineqs = c.hrep().inequalities;
    std::sort(ineqs.begin(), ineqs.end());
    CHECK(ineqs == std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
}

TEST_CASE("low-dimensional cone gets an equation") {
    PolyCone c = PolyCone::from_generators(3, {iv({1, 1, 0}), iv({0, 0, 1})});
    CHECK(c.span_dim() == 2);
    REQUIRE(c.hrep().equations.size() == 1);
    IntVector eq = c.hrep().equations[0];
    CHECK(dot(eq, iv({1, 1, 0})) == 0);
    CHECK(dot(eq, iv({0, 0, 1})) == 0);
    CHECK(c.contains(iv({2, 2, 5})));
    CHECK(!c.contains(iv({2, 1, 5})));
}

TEST_CASE("hrep round trip preserves the cone") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        int dim = 2 + int(rng() % 3);
        int gens = 1 + int(rng() % 4);
        std::vector<IntVector> g;
        for (int i = 0; i < gens; ++i) {
            IntVector v(dim);
            bool zero = true;
            for (int j = 0; j < dim; ++j) {
                v[j] = dist(rng);
                zero = zero && v[j] == 0;
            }
            if (!zero) g.push_back(std::move(v));
        }
        if (g.empty()) continue;
        PolyCone c = PolyCone::from_generators(dim, g);
        PolyCone back = PolyCone::from_hrep(dim, c.hrep());
        CHECK(c == back);
        // every generator satisfies the H-representation
        for (const IntVector& v : g) {
            CHECK(c.contains(v));
            for (const IntVector& e : c.hrep().equations) CHECK(dot(e, v) == 0);
            for (const IntVector& a : c.hrep().inequalities) CHECK(dot(a, v) >= 0);
        }
    }
}

TEST_CASE("membership agrees with the simplex oracle") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        int dim = 2 + int(rng() % 2);
        std::vector<IntVector> g;
        for (int i = 0; i < 3; ++i) {
            IntVector v(dim);
            bool zero = true;
            for (int j = 0; j < dim; ++j) {
                v[j] = dist(rng);
                zero = zero && v[j] == 0;
            }
            if (!zero) g.push_back(std::move(v));
        }
        if (g.empty()) continue;
        PolyCone c = PolyCone::from_generators(dim, g);
        for (int probe = 0; probe < 10; ++probe) {
            IntVector x(dim);
            for (int j = 0; j < dim; ++j) x[j] = dist(rng);
            CHECK(c.contains(x) == hull_member(c, x));
        }
    }
}

TEST_CASE("intersection of two wedges") {
    PolyCone a = PolyCone::from_generators(2, {iv({1, 0}), iv({1, 1})});
    PolyCone b = PolyCone::from_generators(2, {iv({1, 1}), iv({0, 1})});
    PolyCone meet = intersect(a, b);
    REQUIRE(meet.rays().size() == 1);
    CHECK(meet.rays()[0] == iv({1, 1}));
    CHECK(meet.span_dim() == 1);

    // disjoint apart from the origin
    PolyCone c = PolyCone::from_generators(2, {iv({0, 1}), iv({-1, 0})});
    CHECK(intersect(a, c).is_trivial());
}

TEST_CASE("intersection respects lineality") {
    PolyCone a = PolyCone::from_generators(3, {iv({1, 0, 0}), iv({-1, 0, 0}), iv({0, 1, 0})});
    PolyCone b = PolyCone::from_generators(3, {iv({1, 0, 0}), iv({-1, 0, 0}), iv({0, 0, 1})});
    PolyCone meet = intersect(a, b);
    REQUIRE(meet.lineality().size() == 1);
    CHECK(meet.lineality()[0] == iv({1, 0, 0}));
    CHECK(meet.rays().empty());
}

TEST_CASE("containment of cones") {
    PolyCone big = PolyCone::from_generators(2, {iv({1, 0}), iv({0, 1})});
    PolyCone small = PolyCone::from_generators(2, {iv({1, 1}), iv({1, 2})});
    CHECK(big.contains(small));
    CHECK(!small.contains(big));
    CHECK(big.contains(big));
    CHECK(big.contains(PolyCone::trivial(2)));
}

TEST_CASE("span basis groups cones sharing a plane") {
    PolyCone a = PolyCone::from_generators(3, {iv({1, 0, 0}), iv({0, 1, 0})});
    PolyCone b = PolyCone::from_generators(3, {iv({1, 1, 0}), iv({-1, 2, 0})});
    PolyCone c = PolyCone::from_generators(3, {iv({1, 0, 0}), iv({0, 0, 1})});
    CHECK(a.span_basis() == b.span_basis());
    CHECK(a.span_basis() != c.span_basis());
}

TEST_CASE("union equality by subdivision") {
    PolyCone hull = PolyCone::from_generators(2, {iv({1, 0}), iv({0, 1})});
    PolyCone lower = PolyCone::from_generators(2, {iv({1, 0}), iv({1, 1})});
    PolyCone upper = PolyCone::from_generators(2, {iv({1, 1}), iv({0, 1})});
    CHECK(union_equals({lower, upper}, hull));
    CHECK(union_equals({hull}, hull));
    CHECK(!union_equals({lower}, hull));

    // a genuine gap: two wedges that only share the origin
    PolyCone right = PolyCone::from_generators(2, {iv({1, 0}), iv({2, 1})});
    PolyCone top = PolyCone::from_generators(2, {iv({1, 2}), iv({0, 1})});
    CHECK(!union_equals({right, top}, hull));
}

TEST_CASE("union equality with three pieces around an interior ray") {
    PolyCone hull = PolyCone::from_generators(2, {iv({1, 0}), iv({-1, 1})});
    PolyCone p1 = PolyCone::from_generators(2, {iv({1, 0}), iv({1, 1})});
    PolyCone p2 = PolyCone::from_generators(2, {iv({1, 1}), iv({0, 1})});
    PolyCone p3 = PolyCone::from_generators(2, {iv({0, 1}), iv({-1, 1})});
    CHECK(union_equals({p1, p2, p3}, hull));
    CHECK(!union_equals({p1, p3}, hull));
}

TEST_CASE("equality is representation independent") {
    PolyCone a = PolyCone::from_generators(2, {iv({2, 0}), iv({0, 3}), iv({1, 1})});
    PolyCone b = PolyCone::from_generators(2, {iv({0, 1}), iv({1, 0})});
    CHECK(a == b);
}
