#include <doctest.h>

#include "tropdisc/errors.hpp"
#include "tropdisc/matroid.hpp"
#include "tropdisc/system.hpp"

#include <algorithm>
#include <random>

using namespace tropdisc;

namespace {

IntMatrix bivariate_u() {
    SystemSpec s;
    s.n = 2;
    s.equations = {{{2, 0}, {{1, 1}, {1, 2}}}, {{0, 2}, {{2, 1}}}};
    return derive(s).U;
}

bool independent(const LinearMatroid& m, const std::vector<int>& subset) {
    return m.rank_of(subset) == int(subset.size());
}

std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

TEST_CASE("rank and closure queries") {
    LinearMatroid m(bivariate_u());
    CHECK(m.size() == 7);
    CHECK(m.rank() == 3);
    CHECK(m.rank_of({}) == 0);
    CHECK(m.rank_of({0}) == 1);
    CHECK(m.rank_of({0, 1, 2}) == 3);
    CHECK(m.rank_of({2, 3, 5}) == 2);  // a circuit
    CHECK(m.rank_of({0, 1, 2, 3, 4, 5, 6}) == 3);
    // closure of a circuit minus a point recovers the circuit
    std::vector<int> cl = m.closure({2, 3});
    CHECK(std::find(cl.begin(), cl.end(), 5) != cl.end());
    CHECK(m.rank_of(cl) == 2);
}

TEST_CASE("the two 3-element circuits of the bivariate fixture") {
    LinearMatroid m(bivariate_u());
    std::vector<std::vector<int>> small;
    for (const auto& c : m.circuits())
        if (c.size() <= 3) small.push_back(c);
    // 0-based {2,3,5} and {2,4,6} print as 346 and 357 in report labels
    CHECK(small == std::vector<std::vector<int>>{{2, 3, 5}, {2, 4, 6}});
    CHECK(subset_label({2, 3, 5}) == "346");
    CHECK(subset_label({2, 4, 6}) == "357");
}

TEST_CASE("every circuit is minimally dependent") {
    LinearMatroid m(bivariate_u());
    for (const auto& c : m.circuits()) {
        CHECK(m.rank_of(c) == int(c.size()) - 1);
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) sub.push_back(c[i]);
            CHECK(independent(m, sub));
        }
    }
}

TEST_CASE("proper flats and maximal flags of the bivariate fixture") {
    LinearMatroid m(bivariate_u());
    std::vector<Flat> flats = m.proper_flats();
    CHECK(flats.size() == 24);
    for (const Flat& f : flats) {
        CHECK(f.rank >= 1);
        CHECK(f.rank <= 2);
        CHECK(m.rank_of(f.members) == f.rank);
        CHECK(m.closure(f.members) == f.members);
    }
    std::vector<Flag> flags = m.maximal_flags();
    CHECK(flags.size() == 36);
    for (const Flag& fl : flags) {
        REQUIRE(fl.chain.size() == 2);
        CHECK(fl.chain[0].rank == 1);
        CHECK(fl.chain[1].rank == 2);
        CHECK(std::includes(fl.chain[1].members.begin(), fl.chain[1].members.end(),
                            fl.chain[0].members.begin(), fl.chain[0].members.end()));
    }
}

TEST_CASE("independence axioms hold exhaustively on small random matrices") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int trial = 0; trial < 6; ++trial) {
        int rows = 4 + int(rng() % 4);  // 4..7 ground elements
        int cols = 2 + int(rng() % 2);
        IntMatrix mat(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) mat.at(i, j) = dist(rng);
        LinearMatroid m(mat);
        auto subsets = all_subsets(rows);

        // (I-1) the empty set is independent
        CHECK(independent(m, {}));

        for (const auto& b : subsets) {
            if (!independent(m, b)) continue;
            // (I-2) subsets of an independent set are independent
            for (const auto& a : subsets) {
                if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
                    CHECK(independent(m, a));
            }
            // (I-3) augmentation
            for (const auto& a : subsets) {
                if (!independent(m, a) || a.size() >= b.size()) continue;
                bool augmented = false;
                for (int e : b) {
                    if (std::find(a.begin(), a.end(), e) != a.end()) continue;
                    std::vector<int> plus = a;
                    plus.push_back(e);
                    std::sort(plus.begin(), plus.end());
                    if (independent(m, plus)) {
                        augmented = true;
                        break;
                    }
                }
                CHECK(augmented);
            }
        }
    }
}

TEST_CASE("closure is extensive, monotone and idempotent") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int trial = 0; trial < 8; ++trial) {
        int rows = 5, cols = 3;
        IntMatrix mat(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) mat.at(i, j) = dist(rng);
        LinearMatroid m(mat);
        for (const auto& s : all_subsets(rows)) {
            std::vector<int> cl = m.closure(s);
            CHECK(std::includes(cl.begin(), cl.end(), s.begin(), s.end()));
            CHECK(m.rank_of(cl) == m.rank_of(s));
            CHECK(m.closure(cl) == cl);
        }
        // monotonicity on nested pairs
        for (const auto& a : all_subsets(rows))
            for (int extra = 0; extra < rows; ++extra) {
                if (std::find(a.begin(), a.end(), extra) != a.end()) continue;
                std::vector<int> b = a;
                b.push_back(extra);
                std::sort(b.begin(), b.end());
                std::vector<int> ca = m.closure(a), cb = m.closure(b);
                CHECK(std::includes(cb.begin(), cb.end(), ca.begin(), ca.end()));
            }
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(LinearMatroid(IntMatrix(33, 2)), GroundSetTooLarge);
    LinearMatroid big(IntMatrix(26, 2));  // construction and rank queries fine
    CHECK(big.rank() == 0);
    CHECK_THROWS_AS(big.circuits(), GroundSetTooLarge);
    CHECK_THROWS_AS(big.proper_flats(), GroundSetTooLarge);
    LinearMatroid loose(IntMatrix::identity(4), 4);
    CHECK_NOTHROW(loose.circuits());
}

TEST_CASE("labels") {
    CHECK(subset_label({0, 1, 8}) == "129");
    CHECK(subset_label({0, 9}) == "1.10");
    Flag f;
    f.chain = {Flat{{2}, 1}, Flat{{2, 3, 5}, 2}};
    CHECK(flag_label(f) == "3<346");
}
