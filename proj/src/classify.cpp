#include "nsg/classify.hpp"

#include <algorithm>
#include <cassert>

namespace nsg {

namespace {

// Stabilizes K <= K^2 <= ... ; the chain shrinks the gap set of K strictly,
// so it ends within genus(H) + 2 steps.
RelativeIdeal stabilize_powers(const NumericalSemigroup& H, const RelativeIdeal& K) {
    RelativeIdeal P = K;
    for (int guard = 0; guard <= H.genus() + 2; ++guard) {
        RelativeIdeal next = P.product(K);
        if (next == P) return P;
        P = std::move(next);
    }
    assert(false && "R[K] fixpoint did not terminate within the gap bound");
    return P;
}

int count_gens_outside(const NumericalSemigroup& H, const RelativeIdeal& c) {
    int v = 0;
    for (int a : H.generators())
        if (!c.contains(a)) ++v;
    return v;
}

std::vector<int> decomposition_lengths(const NumericalSemigroup& H) {
    // K/R = sum of R t^{f-c} over c in PF(H) \ {f}; the summand for c has
    // annihilator {h in H : h + (f-c) in H} and length |H \ Ann|.
    std::vector<int> parts;
    const int f = H.frobenius();
    for (int c : H.pseudo_frobenius()) {
        if (c == f) continue;
        const int d = f - c;
        int len = 0;
        for (int h = 0; h < H.conductor(); ++h)
            if (H.contains(h) && !H.contains(h + d)) ++len;
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

}  // namespace

std::pair<RelativeIdeal, RelativeIdeal> ring_hull(const NumericalSemigroup& H) {
    RelativeIdeal R = RelativeIdeal::unit(H);
    RelativeIdeal K = RelativeIdeal::canonical(H);
    RelativeIdeal S = stabilize_powers(H, K);
    RelativeIdeal c = R.colon(S);
    return {std::move(S), std::move(c)};
}

std::optional<int> goto_rank(const NumericalSemigroup& H) {
    RelativeIdeal K = RelativeIdeal::canonical(H);
    RelativeIdeal K2 = K.product(K);
    RelativeIdeal K3 = K2.product(K);
    if (!(K2 == K3)) return std::nullopt;
    return length_between(K, K2);
}

GotoReport classify(const NumericalSemigroup& H) {
    GotoReport rep;
    rep.semigroup = H;
    rep.min_mult = H.has_minimal_multiplicity();
    rep.gorenstein = H.is_symmetric();

    RelativeIdeal R = RelativeIdeal::unit(H);
    RelativeIdeal K = RelativeIdeal::canonical(H);
    RelativeIdeal K2 = K.product(K);
    RelativeIdeal K3 = K2.product(K);
    rep.is_goto = (K2 == K3);
    if (rep.is_goto) rep.goto_rank = length_between(K, K2);

    RelativeIdeal S = rep.is_goto ? K2 : stabilize_powers(H, K);
    RelativeIdeal c = R.colon(S);

    rep.len_K_over_R = length_between(R, K);
    rep.len_R_over_c = length_between(c, R);
    rep.mu_K2_over_K = rep.gorenstein ? 0 : mu_quotient(K2, K);
    rep.v_R_over_c = count_gens_outside(H, c);
    rep.rc_gorenstein = rep.gorenstein || (rep.is_goto && rep.mu_K2_over_K == 1);
    rep.two_agl = rep.goto_rank && *rep.goto_rank == 2;
    rep.almost_gorenstein = rep.is_goto && *rep.goto_rank <= 1;
    if (rep.is_goto) rep.e1 = *rep.goto_rank + rep.len_K_over_R;

    const int r = H.cm_type();
    if (rep.gorenstein) {
        rep.ggl = true;  // generalized Gorenstein subsumes Gorenstein
    } else if (r == 2) {
        rep.ggl = rep.is_goto;  // K^2 = K^3 iff generalized Gorenstein when r = 2
    } else if (!rep.rc_gorenstein) {
        rep.ggl = false;  // generalized Gorenstein forces R/c Gorenstein
    } else if (rep.is_goto && rep.v_R_over_c == 1) {
        rep.ggl = (rep.len_K_over_R == *rep.goto_rank * (r - 1));  // K/R free over R/c
    }  // otherwise undecidable here

    if (rep.gorenstein)
        rep.decomposition = std::vector<int>{};
    else if (rep.rc_gorenstein)
        rep.decomposition = decomposition_lengths(H);

    return rep;
}

int v_of_R_mod_c(const NumericalSemigroup& H) {
    if (H.is_symmetric()) return 0;
    auto [S, c] = ring_hull(H);
    return count_gens_outside(H, c);
}

std::vector<int> decompose_K_mod_R(const NumericalSemigroup& H) {
    if (H.is_symmetric()) return {};
    RelativeIdeal K = RelativeIdeal::canonical(H);
    RelativeIdeal K2 = K.product(K);
    RelativeIdeal K3 = K2.product(K);
    if (!(K2 == K3) || mu_quotient(K2, K) != 1)
        throw DecompositionUnavailable("R/c is not Gorenstein; K/R does not split into the t^{f-c} summands");
    return decomposition_lengths(H);
}

int e1_of_canonical(const NumericalSemigroup& H) {
    auto n = goto_rank(H);
    if (!n) throw NotGotoError("e_1 route requires K^2 = K^3");
    RelativeIdeal R = RelativeIdeal::unit(H);
    RelativeIdeal K = RelativeIdeal::canonical(H);
    return *n + length_between(R, K);
}

}  // namespace nsg
