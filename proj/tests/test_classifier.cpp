#include <doctest.h>

#include "nsg/census.hpp"
#include "nsg/classify.hpp"

using nsg::classify;
using nsg::goto_rank;
using nsg::NumericalSemigroup;
using nsg::RelativeIdeal;

namespace {

NumericalSemigroup sg(std::vector<int> g) { return NumericalSemigroup::from_generators(std::move(g)); }

NumericalSemigroup family3(int n) { return sg({3, 3 * n + 1, 3 * n + 2}); }

NumericalSemigroup family_e(int e, int n) {
    std::vector<int> g{e};
    for (int i = 3; i <= e - 1; ++i) g.push_back(e * n - e + i);
    g.push_back(e * n + 1);
    g.push_back(e * n + 2);
    return sg(g);
}

}  // namespace

TEST_CASE("ring hull fixtures") {
    auto H = sg({4, 11, 13, 14});
    auto [S, c] = nsg::ring_hull(H);
    CHECK(S.floor() == 0);
    CHECK(S.stable() == 0);  // S = N, i.e. R[K] = V
    CHECK(c.floor() == 11);
    CHECK(c.stable() == 11);

    auto G = sg({4, 6, 9});  // symmetric: S = R, c = R
    auto [S2, c2] = nsg::ring_hull(G);
    CHECK(S2 == RelativeIdeal::unit(G));
    CHECK(c2 == RelativeIdeal::unit(G));

    auto A = sg({4, 5, 11});
    auto [S3, c3] = nsg::ring_hull(A);
    CHECK(nsg::length_between(c3, RelativeIdeal::unit(A)) == 3);
    CHECK(c3.floor() == 8);
    CHECK(c3.stable() == 8);
}

TEST_CASE("goto rank fixtures") {
    for (int n = 1; n <= 6; ++n) CHECK(goto_rank(family3(n)) == n);
    CHECK_FALSE(goto_rank(sg({4, 5, 11})).has_value());
    CHECK(goto_rank(sg({7, 10, 22})) == 4);
    CHECK(goto_rank(sg({8, 13, 15, 17, 19, 22})) == 3);
    CHECK(goto_rank(sg({2, 3})) == 0);
    CHECK(goto_rank(sg({1})) == 0);
}

TEST_CASE("classification of the worked examples") {
    SUBCASE("<5,11,13,19>") {
        auto rep = classify(sg({5, 11, 13, 19}));
        CHECK(rep.is_goto);
        CHECK(rep.goto_rank == 3);
        CHECK(rep.mu_K2_over_K == 2);
        CHECK_FALSE(rep.rc_gorenstein);
        REQUIRE(rep.ggl.has_value());
        CHECK_FALSE(*rep.ggl);
        CHECK_FALSE(rep.decomposition.has_value());
        CHECK(rep.len_R_over_c == 3);
    }
    SUBCASE("<3,4,5> is 1-Goto, almost Gorenstein, not Gorenstein") {
        auto rep = classify(sg({3, 4, 5}));
        CHECK(rep.goto_rank == 1);
        CHECK(rep.almost_gorenstein);
        CHECK_FALSE(rep.gorenstein);
        CHECK(rep.len_K_over_R == 1);
        CHECK(rep.e1 == 2);
    }
    SUBCASE("<2,3> is Gorenstein of rank 0") {
        auto rep = classify(sg({2, 3}));
        CHECK(rep.gorenstein);
        CHECK(rep.goto_rank == 0);
        CHECK(rep.almost_gorenstein);
        CHECK(rep.len_K_over_R == 0);
        CHECK(rep.e1 == 0);
        CHECK(rep.decomposition == std::vector<int>{});
    }
    SUBCASE("e-family with e = 5, n = 2 is 2-Goto and not GGL") {
        auto rep = classify(family_e(5, 2));
        CHECK(rep.goto_rank == 2);
        CHECK(rep.two_agl);
        REQUIRE(rep.ggl.has_value());
        CHECK_FALSE(*rep.ggl);
    }
}

TEST_CASE("v(R/c) fixtures") {
    CHECK(nsg::v_of_R_mod_c(sg({7, 10, 22})) == 2);
    CHECK(nsg::v_of_R_mod_c(sg({4, 11, 13, 14})) == 1);
    CHECK(nsg::v_of_R_mod_c(sg({2, 3})) == 0);
    CHECK(nsg::v_of_R_mod_c(sg({4, 6, 9})) == 0);
}

TEST_CASE("decomposition of K/R") {
    // r = 2 Goto rings: K/R = R/c, one summand of length n
    for (int n = 1; n <= 4; ++n)
        CHECK(nsg::decompose_K_mod_R(family3(n)) == std::vector<int>{n});
    // e-family: {n} + {n-1}^{e-3}
    for (auto [e, n] : {std::pair{4, 2}, {5, 3}, {6, 2}}) {
        std::vector<int> expect{n};
        for (int i = 0; i < e - 3; ++i) expect.push_back(n - 1);
        CHECK(nsg::decompose_K_mod_R(family_e(e, n)) == expect);
    }
    CHECK(nsg::decompose_K_mod_R(sg({2, 3})).empty());
    CHECK_THROWS_AS(nsg::decompose_K_mod_R(sg({5, 11, 13, 19})), nsg::DecompositionUnavailable);
}

TEST_CASE("e1 fixtures and error") {
    CHECK(nsg::e1_of_canonical(family3(4)) == 8);  // 2n, upper bound n r attained
    CHECK(nsg::e1_of_canonical(sg({2, 3})) == 0);
    CHECK(nsg::e1_of_canonical(sg({3, 4, 5})) == 2);
    CHECK_THROWS_AS(nsg::e1_of_canonical(sg({4, 5, 11})), nsg::NotGotoError);
}

TEST_CASE("small-genus exhaustive classification laws") {
    nsg::enumerate_by_genus(10, [](const NumericalSemigroup& H) {
        auto rep = classify(H);

        // rank 0 iff symmetric
        CHECK((rep.goto_rank && *rep.goto_rank == 0) == H.is_symmetric());

        // the Sally rank equals l(R/c) for Goto rings
        if (rep.is_goto) CHECK(rep.len_R_over_c == *rep.goto_rank);

        // e = 3 with minimal multiplicity forces Goto with rank l(K/R)
        if (H.multiplicity() == 3 && H.has_minimal_multiplicity()) {
            CHECK(rep.is_goto);
            CHECK(*rep.goto_rank == rep.len_K_over_R);
        }

        // rank 1 iff non-Gorenstein almost Gorenstein (m K inside R)
        bool mK_in_R = true;
        auto K = RelativeIdeal::canonical(H);
        for (int x : K.members()) {
            for (int a : H.generators())
                if (!H.contains(x + a)) {
                    mK_in_R = false;
                    break;
                }
            if (!mK_in_R) break;
        }
        if (mK_in_R)
            for (int x = K.stable(); x < H.conductor() + 1 && mK_in_R; ++x)
                for (int a : H.generators())
                    if (!H.contains(x + a)) {
                        mK_in_R = false;
                        break;
                    }
        const bool rank1 = rep.goto_rank && *rep.goto_rank == 1;
        CHECK(rank1 == (mK_in_R && !H.is_symmetric()));

        // decomposition shape under v(R/c) = 1 (Theorem 4.8 shape)
        if (rep.is_goto && *rep.goto_rank >= 2 && rep.v_R_over_c == 1) {
            REQUIRE(rep.decomposition.has_value());
            const auto& parts = *rep.decomposition;
            CHECK(static_cast<int>(parts.size()) == H.cm_type() - 1);
            CHECK(parts.front() == *rep.goto_rank);  // sorted descending, max = n
            int sum = 0;
            for (int p : parts) {
                CHECK(p <= *rep.goto_rank);
                sum += p;
            }
            CHECK(sum == rep.len_K_over_R);
        }

        // any decomposition sums to l(K/R) with r-1 parts
        if (rep.decomposition && !H.is_symmetric()) {
            int sum = 0;
            for (int p : *rep.decomposition) sum += p;
            CHECK(sum == rep.len_K_over_R);
            CHECK(static_cast<int>(rep.decomposition->size()) == H.cm_type() - 1);
        }
    });
}
