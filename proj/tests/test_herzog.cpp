#include <doctest.h>

#include "nsg/census.hpp"
#include "nsg/classify.hpp"
#include "nsg/herzog.hpp"

using nsg::goto_rank;
using nsg::goto_rank_via_theorem;
using nsg::herzog_data;
using nsg::HerzogData;
using nsg::NumericalSemigroup;

namespace {

NumericalSemigroup sg(std::vector<int> g) { return NumericalSemigroup::from_generators(std::move(g)); }

// the three minor relations as integer identities
bool minors_vanish(const HerzogData& h) {
    const long long a1 = h.ordered_gens[0], a2 = h.ordered_gens[1], a3 = h.ordered_gens[2];
    return (h.alpha + h.alpha_p) * a1 == h.beta_p * a2 + h.gamma * a3 &&
           (h.beta + h.beta_p) * a2 == h.alpha * a1 + h.gamma_p * a3 &&
           (h.gamma + h.gamma_p) * a3 == h.alpha_p * a1 + h.beta * a2;
}

}  // namespace

TEST_CASE("herzog data of <7,10,22>") {
    auto h = herzog_data(sg({7, 10, 22}));
    CHECK(h.ordered_gens == std::array<int, 3>{10, 7, 22});
    CHECK(h.alpha == 2);
    CHECK(h.beta == 2);
    CHECK(h.gamma == 1);
    CHECK(h.alpha_p == 3);
    CHECK(h.beta_p == 4);
    CHECK(h.gamma_p == 1);
    CHECK(h.b == 8);
    CHECK(h.m_p > h.m);
    CHECK(minors_vanish(h));
}

TEST_CASE("herzog data of <3,4,5> satisfies the minor identities") {
    auto h = herzog_data(sg({3, 4, 5}));
    CHECK(minors_vanish(h));
    CHECK(h.ordered_gens == std::array<int, 3>{3, 4, 5});
    CHECK(h.alpha == 1);
    CHECK(h.beta == 1);
    CHECK(h.gamma == 1);
    CHECK(h.alpha_p == 2);
    CHECK(h.beta_p == 1);
    CHECK(h.gamma_p == 1);
    CHECK(h.b == 1);  // PF = {1,2}
}

TEST_CASE("herzog errors") {
    CHECK_THROWS_AS(herzog_data(sg({4, 6, 9})), nsg::GorensteinError);
    CHECK_THROWS_AS(herzog_data(sg({4, 11, 13, 14})), nsg::NotThreeGeneratedError);
    CHECK_THROWS_AS(herzog_data(sg({2, 3})), nsg::NotThreeGeneratedError);
}

TEST_CASE("closed-form rank fixtures") {
    CHECK(goto_rank_via_theorem(sg({7, 10, 22})) == 4);
    CHECK_FALSE(goto_rank_via_theorem(sg({4, 5, 11})).has_value());
    CHECK(goto_rank_via_theorem(sg({3, 7, 8})) == 2);
}

TEST_CASE("e3 family") {
    CHECK(nsg::e3_family(2, 3) == sg({3, 7, 8}));
    CHECK(goto_rank(nsg::e3_family(2, 3)) == 2);
    CHECK(nsg::e3_family(1, 2) == sg({3, 4, 5}));
    CHECK(goto_rank(nsg::e3_family(1, 2)) == 1);
    CHECK(nsg::e3_family(1, 3) == sg({3, 5, 7}));
    CHECK(goto_rank(nsg::e3_family(1, 3)) == 1);
    CHECK_THROWS_AS(nsg::e3_family(2, 2), nsg::ParamError);
    CHECK_THROWS_AS(nsg::e3_family(2, 5), nsg::ParamError);  // alpha = n mod 3
    CHECK_THROWS_AS(nsg::e3_family(0, 2), nsg::ParamError);
}

TEST_CASE("matrix rendering") {
    auto text = nsg::emit_matrix(sg({7, 10, 22}));
    CHECK(text.find("X^2 Y^2 Z") != std::string::npos);
    CHECK(text.find("Y^4 Z X^3") != std::string::npos);
    auto text2 = nsg::emit_matrix(sg({3, 7, 8}));
    CHECK(text2.find("X^2 Y Z") != std::string::npos);
    CHECK(text2.find("Y Z X^3") != std::string::npos);
    auto text3 = nsg::emit_matrix(sg({3, 4, 5}));
    CHECK(text3.find("X Y Z") != std::string::npos);
    CHECK(text3.find("Y Z X^2") != std::string::npos);
    CHECK_THROWS_AS(nsg::emit_matrix(sg({4, 6, 9})), nsg::GorensteinError);
}

TEST_CASE("theorem agrees with the direct rank for small Frobenius numbers") {
    // the full f <= 150 sweep lives in the acceptance suite
    int seen = 0;
    nsg::enumerate_three_generated(60, [&](const NumericalSemigroup& H) {
        if (H.is_symmetric()) return;
        ++seen;
        auto h = herzog_data(H);
        CHECK(minors_vanish(h));
        CHECK(h.m_p > h.m);
        // b and 2b are gaps, and b is the PF difference
        const auto& pf = H.pseudo_frobenius();
        CHECK(h.b == pf[1] - pf[0]);
        CHECK_FALSE(H.contains(h.b));
        CHECK_FALSE(H.contains(2 * h.b));
        CHECK(goto_rank_via_theorem(H) == goto_rank(H));
    });
    CHECK(seen > 500);
}

TEST_CASE("multiplicity-3 census matches the e3 family parametrization") {
    // small-bound version of the acceptance sweep
    nsg::enumerate_multiplicity3(80, [&](const NumericalSemigroup& H) {
        auto r = goto_rank(H);
        REQUIRE(r.has_value());  // e = 3 minimal multiplicity is always Goto
        const int n = *r;
        if (H.is_symmetric()) return;
        // read n and alpha off the generators: a2 = 2n+a, a3 = n+2a
        const auto& g = H.generators();
        const int three_a = 2 * g[2] - g[1];
        const int three_n = 2 * g[1] - g[2];
        CHECK(three_a % 3 == 0);
        CHECK(three_n % 3 == 0);
        const int a = three_a / 3;
        CHECK(three_n / 3 == n);
        CHECK(a >= n + 1);
        CHECK((a - n) % 3 != 0);
        CHECK(nsg::e3_family(n, a) == H);
    });
}
