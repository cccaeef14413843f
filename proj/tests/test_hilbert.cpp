#include <doctest.h>

#include "nsg/census.hpp"
#include "nsg/classify.hpp"
#include "nsg/hilbert.hpp"

using namespace nsg;

namespace {

NumericalSemigroup sg(std::vector<int> g) { return NumericalSemigroup::from_generators(std::move(g)); }

NumericalSemigroup family3(int n) { return sg({3, 3 * n + 1, 3 * n + 2}); }

// independent oracle: l(R/(shift + E)) by scanning the membership window
long long brute_length(const NumericalSemigroup& H, const RelativeIdeal& E, int shift) {
    long long c = 0;
    for (int x = 0; x < shift + E.stable() + 1; ++x)
        if (H.contains(x) && !E.contains(x - shift)) ++c;
    return c;
}

}  // namespace

TEST_CASE("canonical ideal in R and the reduction parameter") {
    SUBCASE("<3,4,5>: a = 3") {
        auto [I, a] = canonical_ideal_in_R(sg({3, 4, 5}));
        CHECK(a == 3);
        CHECK(I.floor() == 3);
    }
    SUBCASE("Gorenstein: I = a + H with a = e") {
        auto H = sg({2, 3});
        auto [I, a] = canonical_ideal_in_R(H);
        CHECK(a == 2);
        CHECK(I == RelativeIdeal::unit(H).shifted(2));
        CHECK(reduction_number(H) == 0);
    }
    SUBCASE("<7,10,22>: least valid a is 14, not the multiplicity") {
        auto H = sg({7, 10, 22});
        auto [I, a] = canonical_ideal_in_R(H);
        CHECK(a == 14);
        // I is an honest ideal of R
        CHECK(I.subset_of(RelativeIdeal::unit(H)));
        CHECK(reduction_number(H) == 2);
    }
    SUBCASE("the shifted canonical ideal is always inside R") {
        nsg::enumerate_by_genus(8, [](const NumericalSemigroup& H) {
            auto [I, a] = canonical_ideal_in_R(H);
            CHECK(I.subset_of(RelativeIdeal::unit(H)));
            CHECK(I.floor() == a);
        });
    }
}

TEST_CASE("reduction numbers") {
    CHECK(reduction_number(sg({3, 4, 5})) == 2);
    CHECK(reduction_number(sg({7, 10, 22})) == 2);
    CHECK(reduction_number(sg({4, 5, 11})) == 3);
    CHECK(reduction_number(sg({1})) == 0);
    // Goto non-Gorenstein rings have reduction number exactly 2
    nsg::enumerate_by_genus(8, [](const NumericalSemigroup& H) {
        auto r = goto_rank(H);
        if (r && *r > 0) CHECK(reduction_number(H) == 2);
        if (H.is_symmetric()) CHECK(reduction_number(H) == 0);
    });
}

TEST_CASE("hilbert lengths") {
    SUBCASE("Gorenstein parameter ideal: l(R/I^m) = m a") {
        auto H = sg({4, 6, 9});
        auto [I, a] = canonical_ideal_in_R(H);
        auto lens = hilbert_lengths(H, 5);
        for (int m = 1; m <= 5; ++m) CHECK(lens[static_cast<size_t>(m - 1)] == m * a);
    }
    SUBCASE("<3,4,5>: (2,4,7,10,...) with e0 = 3, e1 = 2") {
        auto lens = hilbert_lengths(sg({3, 4, 5}), 5);
        CHECK(lens == std::vector<long long>{2, 4, 7, 10, 13});
        auto d = hilbert_coefficients(sg({3, 4, 5}));
        CHECK(d.e0 == 3);
        CHECK(d.e1 == 2);  // = r, Goto rank 1
        CHECK(d.red == 2);
    }
    SUBCASE("<7,10,22>: tail e0 (m+1) - 8") {
        auto H = sg({7, 10, 22});
        auto d = hilbert_coefficients(H);
        CHECK(d.e1 == 8);  // n + l(K/R) = 4 + 4
        auto lens = hilbert_lengths(H, 6);
        for (int m = 1; m < 6; ++m)
            CHECK(lens[static_cast<size_t>(m)] == d.e0 * (m + 1) - d.e1);
    }
    SUBCASE("lengths agree with the brute-force window count") {
        auto H = sg({5, 11, 13, 19});
        auto [I, a] = canonical_ideal_in_R(H);
        auto lens = hilbert_lengths(H, 4);
        RelativeIdeal P = I;
        for (int m = 1; m <= 4; ++m) {
            CHECK(lens[static_cast<size_t>(m - 1)] == brute_length(H, P, 0));
            P = P.product(I);
        }
    }
}

TEST_CASE("hilbert formula of Goto rings") {
    for (auto gens : {std::vector<int>{3, 7, 8}, {5, 11, 13, 19}, {2, 3}, {7, 10, 22},
                      {8, 13, 15, 17, 19, 22}, {4, 11, 13, 14}})
        CHECK(check_hilbert_formula(sg(gens)));
    CHECK_THROWS_AS(check_hilbert_formula(sg({4, 5, 11})), NotGotoError);
}

TEST_CASE("sally filtration fixtures") {
    SUBCASE("1-Goto rings give (t, s) = (0, (1))") {
        for (auto g : {std::vector<int>{3, 4, 5}, {3, 5, 7}}) {
            auto sf = sally_filtration(sg(g));
            CHECK(sf.rank == 1);
            CHECK(sf.t == 0);
            CHECK(sf.s == std::vector<int>{1});
        }
    }
    SUBCASE("<3,3n+1,3n+2>: t = n-1, all s_i = 1") {
        for (int n = 2; n <= 5; ++n) {
            auto sf = sally_filtration(family3(n));
            CHECK(sf.rank == n);
            CHECK(sf.t == n - 1);
            CHECK(sf.s == std::vector<int>(static_cast<size_t>(n), 1));
        }
    }
    SUBCASE("<7,10,22>: rank 4, t = 2, s = (1,2,1)") {
        auto sf = sally_filtration(sg({7, 10, 22}));
        CHECK(sf.rank == 4);
        CHECK(sf.t == 2);
        CHECK(sf.s == std::vector<int>{1, 2, 1});
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(sally_filtration(sg({4, 5, 11})), NotGotoError);
        CHECK_THROWS_AS(sally_filtration(sg({2, 3})), ZeroRankError);
    }
}

TEST_CASE("small-genus exhaustive: e1 routes, Northcott, t vs v(R/c)") {
    nsg::enumerate_by_genus(9, [](const NumericalSemigroup& H) {
        auto rep = classify(H);
        if (!rep.is_goto) return;
        auto d = hilbert_coefficients(H);

        // e1 fitted from the tail = n + l(K/R)
        CHECK(d.e1 == *rep.goto_rank + rep.len_K_over_R);

        // Northcott with equality iff rank 0
        CHECK(d.e1 >= d.e0 - d.len_R_over_I);
        CHECK((d.e1 == d.e0 - d.len_R_over_I) == (*rep.goto_rank == 0));

        CHECK(check_hilbert_formula(H));

        if (*rep.goto_rank >= 1) {
            auto sf = sally_filtration(H);
            int sum = 0;
            for (int x : sf.s) sum += x;
            CHECK(sum == *rep.goto_rank);
            CHECK(sf.t >= 0);
            CHECK(sf.t < *rep.goto_rank);
            if (*rep.goto_rank >= 2)
                CHECK((sf.t == *rep.goto_rank - 1) == (rep.v_R_over_c == 1));
            // l(I^2/aI) = l(K^2/K) = l(R/c)
            CHECK(sf.rank == rep.len_R_over_c);
        }
    });
}
