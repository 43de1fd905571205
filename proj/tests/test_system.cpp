#include <doctest.h>

#include "tropdisc/errors.hpp"
#include "tropdisc/system.hpp"

using namespace tropdisc;

namespace {

// n = 2 worked example used throughout: y1^(2,0) and y2^(0,2) leading terms,
// support columns (1,1), (1,2) in the first equation and (2,1) in the second.
SystemSpec bivariate_fixture() {
    SystemSpec s;
    s.n = 2;
    s.equations = {{{2, 0}, {{1, 1}, {1, 2}}}, {{0, 2}, {{2, 1}}}};
    return s;
}

SystemSpec univariate_fixture() {
    SystemSpec s;
    s.n = 1;
    s.equations = {{{2}, {{1}}}};
    return s;
}

}  // namespace

TEST_CASE("validation rejects a singular leading-exponent matrix") {
    SystemSpec s;
    s.n = 2;
    s.equations = {{{1, 0}, {{1, 1}}}, {{2, 0}, {{1, 2}}}};
    CHECK_THROWS_AS(validate(s), DegenerateOmega);
}

TEST_CASE("validation rejects malformed columns with a named location") {
    SystemSpec zero;
    zero.n = 2;
    zero.equations = {{{2, 0}, {{0, 0}}}, {{0, 2}, {{2, 1}}}};
    CHECK_THROWS_AS(validate(zero), ZeroOrOmegaInLambda);

    SystemSpec own;
    own.n = 2;
    own.equations = {{{2, 0}, {{2, 0}}}, {{0, 2}, {{2, 1}}}};
    CHECK_THROWS_AS(validate(own), ZeroOrOmegaInLambda);

    SystemSpec dup;
    dup.n = 2;
    dup.equations = {{{2, 0}, {{1, 1}, {1, 1}}}, {{0, 2}, {{2, 1}}}};
    try {
        validate(dup);
        FAIL("expected DuplicateExponent");
    } catch (const DuplicateExponent& e) {
        CHECK(std::string(e.what()).find("equation 1") != std::string::npos);
    }
}

TEST_CASE("a column may repeat across equations") {
    SystemSpec s;
    s.n = 2;
    s.equations = {{{2, 0}, {{1, 1}}}, {{0, 2}, {{1, 1}}}};
    CHECK_NOTHROW(validate(s));
    CHECK(derive(s).N == 2);
}

TEST_CASE("shape errors are reported") {
    SystemSpec s;
    s.n = 2;
    s.equations = {{{2, 0, 0}, {{1, 1}}}, {{0, 2}, {{2, 1}}}};
    CHECK_THROWS_AS(validate(s), Error);
    SystemSpec empty;
    empty.n = 0;
    CHECK_THROWS_AS(validate(empty), Error);
    SystemSpec miscounted;
    miscounted.n = 2;
    miscounted.equations = {{{2, 0}, {{1, 1}}}};
    CHECK_THROWS_AS(validate(miscounted), Error);
}

TEST_CASE("derived matrices of the bivariate fixture") {
    DerivedMatrices d = derive(bivariate_fixture());
    CHECK(d.n == 2);
    CHECK(d.N == 3);
    CHECK(d.det_omega == 4);
    CHECK(d.omega == IntMatrix::from_rows({{2, 0}, {0, 2}}));
    CHECK(d.Lambda == IntMatrix::from_rows({{1, 1, 2}, {1, 2, 1}}));
    CHECK(d.chi == IntMatrix::from_rows({{1, 1, 0}, {0, 0, 1}}));
    CHECK(d.Psi == IntMatrix::from_rows({{2, 2, 4}, {2, 4, 2}}));
    CHECK(d.PsiTilde == IntMatrix::from_rows({{-2, -2, 4}, {2, 4, -2}}));
    CHECK(d.Phi == RatMatrix::from_rows({{Rat(1, 2), Rat(1, 2), Rat(1)},
                                         {Rat(1, 2), Rat(1), Rat(1, 2)}}));
    CHECK(d.PhiTilde == RatMatrix::from_rows({{Rat(-1, 2), Rat(-1, 2), Rat(1)},
                                              {Rat(1, 2), Rat(1), Rat(-1, 2)}}));
    CHECK(d.U == IntMatrix::from_rows({{-4, 0, 0},
                                       {0, -4, 0},
                                       {0, 0, -4},
                                       {2, 2, 4},
                                       {2, 4, 2},
                                       {-2, -2, 4},
                                       {2, 4, -2}}));
    CHECK(d.V == IntMatrix::from_rows({{4, 0, 0, -2, -2, -2, 2},
                                       {0, 4, 0, -2, -4, -2, 4},
                                       {0, 0, 4, -4, -2, 4, -2}}));
    CHECK(d.block_of == std::vector<int>{0, 0, 1});
}

TEST_CASE("derived matrices of the univariate fixture") {
    DerivedMatrices d = derive(univariate_fixture());
    CHECK(d.N == 1);
    CHECK(d.det_omega == 2);
    CHECK(d.Psi == IntMatrix::from_rows({{1}}));
    CHECK(d.PsiTilde == IntMatrix::from_rows({{-1}}));
    CHECK(d.U == IntMatrix::from_rows({{-2}, {1}, {-1}}));
    CHECK(d.V == IntMatrix::from_rows({{2, -1, -1}}));
}

TEST_CASE("sum of the V columns vanishes") {
    DerivedMatrices d = derive(bivariate_fixture());
    for (int i = 0; i < d.V.rows(); ++i) {
        Int sum = 0;
        for (int j = 0; j < d.V.cols(); ++j) sum += d.V.at(i, j);
        CHECK(sum == 0);
    }
}

TEST_CASE("hypersurface check") {
    CHECK(hypersurface_check(derive(bivariate_fixture())));
    // a support column orthogonal to the other equation zeroes a Psi entry
    SystemSpec s;
    s.n = 2;
    s.equations = {{{1, 0}, {{0, 1}}}, {{0, 1}, {{1, 1}}}};
    CHECK(!hypersurface_check(derive(s)));
}

TEST_CASE("lattice index") {
    CHECK(lattice_index(bivariate_fixture()) == 1);
    CHECK(lattice_index(univariate_fixture()) == 1);
    SystemSpec coarse;
    coarse.n = 1;
    coarse.equations = {{{2}, {{4}}}};
    CHECK(lattice_index(coarse) == 2);
}

TEST_CASE("normal directions of the univariate fixture") {
    NormalDirections nd = theorem1_normals(derive(univariate_fixture()));
    CHECK(nd.raw == std::vector<IntVector>{{1}, {-1}, {-1}});
    CHECK(nd.primitive_all == std::vector<IntVector>{{1}, {-1}, {-1}});
    CHECK(nd.primitive_set == std::vector<IntVector>{{-1}, {1}});
}

TEST_CASE("normal directions of the bivariate fixture") {
    NormalDirections nd = theorem1_normals(derive(bivariate_fixture()));
    REQUIRE(nd.raw.size() == 7);
    CHECK(nd.raw[0] == IntVector{1, 0, 0});
    CHECK(nd.raw[1] == IntVector{0, 1, 0});
    CHECK(nd.raw[2] == IntVector{0, 0, 1});
    CHECK(nd.raw[3] == IntVector{-2, -2, -4});
    CHECK(nd.raw[4] == IntVector{-2, -4, -2});
    CHECK(nd.raw[5] == IntVector{-2, -2, 4});
    CHECK(nd.raw[6] == IntVector{2, 4, -2});
    CHECK(nd.primitive_all[3] == IntVector{-1, -1, -2});
    CHECK(nd.primitive_set.size() == 7);
}
