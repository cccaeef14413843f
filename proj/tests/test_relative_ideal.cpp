#include <doctest.h>

#include <random>

#include "nsg/census.hpp"
#include "nsg/classify.hpp"
#include "nsg/relative_ideal.hpp"

using nsg::NumericalSemigroup;
using nsg::RelativeIdeal;

namespace {

NumericalSemigroup sg(std::vector<int> g) { return NumericalSemigroup::from_generators(std::move(g)); }

// reference membership of a union of translates s + H, no normalization
bool in_union(const NumericalSemigroup& H, const std::vector<int>& shifts, int x) {
    for (int s : shifts)
        if (H.contains(x - s)) return true;
    return false;
}

}  // namespace

TEST_CASE("from_shifts matches the translate union pointwise") {
    auto H = sg({3, 4, 5});
    auto E = RelativeIdeal::from_shifts(H, {0, 1});
    for (int x = -4; x < 30; ++x) CHECK(E.contains(x) == in_union(H, {0, 1}, x));
    CHECK(E.floor() == 0);
    CHECK_FALSE(E.contains(2));

    auto H2 = sg({5, 11, 13, 19});
    auto K = RelativeIdeal::from_shifts(H2, {0, 3, 9});
    for (int x = -4; x < 60; ++x) CHECK(K.contains(x) == in_union(H2, {0, 3, 9}, x));
    CHECK(RelativeIdeal::canonical(H2) == K);
}

TEST_CASE("unit ideal is H and is the product identity") {
    for (auto gens : {std::vector<int>{7, 10, 22}, {3, 4, 5}, {2, 3}}) {
        auto H = sg(gens);
        auto R = RelativeIdeal::unit(H);
        for (int x = -2; x < H.table_bound(); ++x) CHECK(R.contains(x) == H.contains(x));
        auto E = RelativeIdeal::from_shifts(H, {-5, 2, 7});
        CHECK(E.product(R) == E);
        CHECK(R.product(E) == E);
        CHECK(E.colon(R) == E);
    }
}

TEST_CASE("closure invariant: members plus generators stay inside") {
    auto H = sg({5, 11, 13, 19});
    for (auto E : {RelativeIdeal::canonical(H), RelativeIdeal::from_shifts(H, {-3, 2}),
                   RelativeIdeal::maximal_ideal(H)}) {
        for (int x : E.members())
            for (int a : H.generators()) CHECK(E.contains(x + a));
        CHECK(E.contains(E.floor()));
        if (E.stable() > E.floor()) CHECK_FALSE(E.contains(E.stable() - 1));
    }
}

TEST_CASE("product fixtures from the worked examples") {
    auto H = sg({5, 11, 13, 19});
    auto K = RelativeIdeal::canonical(H);
    auto K2 = K.product(K);
    CHECK(K2 == RelativeIdeal::from_shifts(H, {0, 3, 6, 9, 12}));
    CHECK(K2.product(K) == K2);
    CHECK(nsg::length_between(K, K2) == 3);

    auto H2 = sg({8, 13, 15, 17, 19, 22});
    auto L = RelativeIdeal::canonical(H2);
    CHECK(L.product(L) == L.sum(RelativeIdeal::from_shifts(H2, {4})));
}

TEST_CASE("colon fixtures") {
    for (int n = 1; n <= 4; ++n) {
        auto H = sg({3, 3 * n + 1, 3 * n + 2});
        auto N = sg({1});
        auto c = RelativeIdeal::unit(H).colon(RelativeIdeal::from_over_semigroup(H, N));
        CHECK(c.floor() == 3 * n);
        CHECK(c.stable() == 3 * n);  // a ray: t^{3n} k[[t]]
    }
    auto H = sg({5, 11, 13, 19});
    auto K = RelativeIdeal::canonical(H);
    CHECK(K.colon(K) == RelativeIdeal::unit(H));
}

TEST_CASE("length fixtures and errors") {
    for (int n = 1; n <= 5; ++n) {
        auto H = sg({3, 3 * n + 1, 3 * n + 2});
        CHECK(nsg::length_between(RelativeIdeal::unit(H), RelativeIdeal::canonical(H)) == n);
    }
    auto H = sg({3, 4, 5});
    auto K = RelativeIdeal::canonical(H);
    CHECK(nsg::length_between(K, K) == 0);
    CHECK_THROWS_AS(nsg::length_between(K, RelativeIdeal::unit(H)), nsg::NotContainedError);
}

TEST_CASE("base mismatch is rejected") {
    auto A = sg({3, 4, 5});
    auto B = sg({2, 3});
    CHECK_THROWS_AS(RelativeIdeal::unit(A).product(RelativeIdeal::unit(B)),
                    nsg::BaseMismatchError);
    CHECK_THROWS_AS(RelativeIdeal::unit(A).colon(RelativeIdeal::unit(B)),
                    nsg::BaseMismatchError);
}

TEST_CASE("canonical ideal: shift construction equals gap duality") {
    // K = { x : f - x not in H }, checked exhaustively for small genus
    nsg::enumerate_by_genus(9, [](const NumericalSemigroup& H) {
        if (H.is_whole()) return;
        auto K = RelativeIdeal::canonical(H);
        const int f = H.frobenius();
        for (int x = -2; x <= f + 2; ++x) CHECK(K.contains(x) == !H.contains(f - x));
        CHECK(K.floor() == 0);
        CHECK(RelativeIdeal::unit(H).subset_of(K));
    });
}

TEST_CASE("gorenstein canonical ideal is R") {
    auto H = sg({2, 3});
    CHECK(RelativeIdeal::canonical(H) == RelativeIdeal::unit(H));
    auto H2 = sg({4, 6, 9});
    CHECK(RelativeIdeal::canonical(H2) == RelativeIdeal::unit(H2));
}

TEST_CASE("product is commutative and associative on R, K, K^2, m") {
    for (auto gens : {std::vector<int>{7, 10, 22}, {5, 11, 13, 19}, {4, 5, 11}}) {
        auto H = sg(gens);
        auto K = RelativeIdeal::canonical(H);
        std::vector<RelativeIdeal> pool{RelativeIdeal::unit(H), K, K.product(K),
                                        RelativeIdeal::maximal_ideal(H)};
        for (const auto& a : pool)
            for (const auto& b : pool) {
                CHECK(a.product(b) == b.product(a));
                for (const auto& c : pool)
                    CHECK(a.product(b).product(c) == a.product(b.product(c)));
            }
    }
}

TEST_CASE("product distributes over ideal sum") {
    auto H = sg({5, 11, 13, 19});
    auto K = RelativeIdeal::canonical(H);
    auto M = RelativeIdeal::maximal_ideal(H);
    auto E = RelativeIdeal::from_shifts(H, {-2, 4});
    CHECK(E.product(K.sum(M)) == E.product(K).sum(E.product(M)));
}

TEST_CASE("randomized ideals: adjunction, duality, normalization idempotence") {
    std::mt19937 rng(20240817u);
    const std::vector<std::vector<int>> bases = {
        {3, 4, 5}, {4, 5, 11}, {5, 11, 13, 19}, {7, 10, 22}, {4, 6, 9}, {6, 7, 9, 10}};
    std::vector<NumericalSemigroup> Hs;
    for (const auto& g : bases) Hs.push_back(sg(g));

    auto random_ideal = [&](const NumericalSemigroup& H) {
        std::uniform_int_distribution<int> nshift(1, 4);
        std::uniform_int_distribution<int> shift(-6, 2 * H.conductor() + 2);
        std::vector<int> shifts;
        for (int i = nshift(rng); i > 0; --i) shifts.push_back(shift(rng));
        return RelativeIdeal::from_shifts(H, shifts);
    };

    int cases = 0;
    while (cases < 1000) {
        const auto& H = Hs[cases % Hs.size()];
        auto E = random_ideal(H);
        auto F = random_ideal(H);
        auto G = random_ideal(H);

        // colon-product adjunction: F <= (E : G) iff F G <= E
        CHECK(F.subset_of(E.colon(G)) == F.product(G).subset_of(E));

        // normalization idempotence: results are fixed by the trivial ops
        auto P = E.product(F);
        CHECK(P.sum(P) == P);
        CHECK(P.colon(RelativeIdeal::unit(H)) == P);
        CHECK(P.product(RelativeIdeal::unit(H)) == P);
        ++cases;
    }

    // canonical duality K : (K : E) = E for E between R and the
    // normalization, E in {R, K, m, c}
    for (const auto& H : Hs) {
        auto K = RelativeIdeal::canonical(H);
        auto [S, c] = nsg::ring_hull(H);
        for (const auto& E : {RelativeIdeal::unit(H), K, RelativeIdeal::maximal_ideal(H), c}) {
            CHECK(K.colon(K.colon(E)) == E);
        }
    }
}

TEST_CASE("mu and minimal generators") {
    auto H = sg({5, 11, 13, 19});
    auto K = RelativeIdeal::canonical(H);
    CHECK(K.minimal_generators() == std::vector<int>{0, 3, 9});
    CHECK(K.mu() == 3);  // mu(K) = type
    auto K2 = K.product(K);
    CHECK(nsg::mu_quotient(K2, K) == 2);
    CHECK(RelativeIdeal::maximal_ideal(H).mu() == 4);  // mu(m) = embedding dim
}

TEST_CASE("semigroup_of_ideal round trip") {
    auto H = sg({4, 13, 22, 27});
    auto [S, c] = nsg::ring_hull(H);
    auto T = nsg::semigroup_of_ideal(S);
    for (int x = 0; x < 60; ++x) CHECK(T.contains(x) == S.contains(x));
}
