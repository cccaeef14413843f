#include "nsg/hilbert.hpp"

#include <algorithm>
#include <cassert>

#include "nsg/classify.hpp"

namespace nsg {

namespace {

// K^0 = R, K, K^2, ..., K^red with K^{red+1} = K^red and all earlier powers
// strict. The chain shrinks the gap set of K^m strictly, hence the bound.
std::vector<RelativeIdeal> power_chain(const NumericalSemigroup& H) {
    std::vector<RelativeIdeal> pow;
    pow.push_back(RelativeIdeal::unit(H));
    RelativeIdeal K = RelativeIdeal::canonical(H);
    for (int guard = 0; guard <= H.genus() + 2; ++guard) {
        RelativeIdeal next = pow.back().product(K);
        if (next == pow.back()) return pow;
        pow.push_back(std::move(next));
    }
    assert(false && "canonical powers did not stabilize within the gap bound");
    return pow;
}

long long length_R_mod(const NumericalSemigroup& H, const RelativeIdeal& ideal, int shift) {
    // |H \ (shift + ideal)|, valid when shift + ideal is inside H.
    long long count = 0;
    const int hi = shift + ideal.stable();
    for (int x = 0; x < hi; ++x)
        if (H.contains(x) && !ideal.contains(x - shift)) ++count;
    return count;
}

int reduction_value(const NumericalSemigroup& H, const RelativeIdeal& R, const RelativeIdeal& K) {
    // least positive a with a + K inside H
    RelativeIdeal RK = R.colon(K);
    return RK.floor() > 0 ? RK.floor() : H.multiplicity();
}

struct Core {
    std::vector<RelativeIdeal> pow;
    int red = 0;
    int a = 0;
};

Core core_of(const NumericalSemigroup& H) {
    Core c;
    c.pow = power_chain(H);
    c.red = static_cast<int>(c.pow.size()) - 1;
    c.a = reduction_value(H, c.pow.front(), c.pow.size() > 1 ? c.pow[1] : c.pow.front());
    return c;
}

std::vector<long long> lengths_from(const NumericalSemigroup& H, const Core& c, int m_max) {
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(m_max));
    for (int m = 1; m <= m_max; ++m) {
        const auto& Km = c.pow[static_cast<size_t>(std::min(m, c.red))];
        out.push_back(length_R_mod(H, Km, m * c.a));
    }
    return out;
}

}  // namespace

std::pair<RelativeIdeal, int> canonical_ideal_in_R(const NumericalSemigroup& H) {
    RelativeIdeal R = RelativeIdeal::unit(H);
    RelativeIdeal K = RelativeIdeal::canonical(H);
    const int a = reduction_value(H, R, K);
    return {K.shifted(a), a};
}

int reduction_number(const NumericalSemigroup& H) {
    return static_cast<int>(power_chain(H).size()) - 1;
}

std::vector<long long> hilbert_lengths(const NumericalSemigroup& H, int m_max) {
    assert(m_max >= 1);
    return lengths_from(H, core_of(H), m_max);
}

HilbertData hilbert_coefficients(const NumericalSemigroup& H) {
    const Core c = core_of(H);
    HilbertData d;
    d.red = c.red;
    d.a = c.a;
    d.e0 = c.a;
    const int m_max = c.red + 4;
    const auto lens = lengths_from(H, c, m_max);
    d.len_R_over_I = lens.front();
    // l(R/I^{m+1}) = e0 (m+1) - e1 once the polynomial is attained (m >= red-1);
    // the last three computed values must agree on e1.
    d.e1 = d.e0 * m_max - lens[static_cast<size_t>(m_max - 1)];
    for (int p = m_max - 1; p >= m_max - 2; --p) {
        [[maybe_unused]] const long long cand = d.e0 * p - lens[static_cast<size_t>(p - 1)];
        assert(cand == d.e1 && "Hilbert tail is not linear where it must be");
    }
    return d;
}

bool check_hilbert_formula(const NumericalSemigroup& H) {
    auto n = goto_rank(H);
    if (!n) throw NotGotoError("Hilbert formula check requires a Goto ring");
    const Core c = core_of(H);
    const int m_max = c.red + 4;
    const auto lens = lengths_from(H, c, m_max);
    const long long e0 = c.a;
    const long long lri = lens.front();
    for (int l = 1; l + 1 <= m_max; ++l) {
        const long long expected = e0 * (l + 1) - (e0 - lri + *n);
        if (lens[static_cast<size_t>(l)] != expected) return false;
    }
    return true;
}

SallyFiltration sally_filtration(const NumericalSemigroup& H) {
    RelativeIdeal K = RelativeIdeal::canonical(H);
    RelativeIdeal K2 = K.product(K);
    RelativeIdeal K3 = K2.product(K);
    if (!(K2 == K3)) throw NotGotoError("Sally filtration requires K^2 = K^3");

    // W = K^2 \ K carries every degree the filtration can see: the layers
    // m^j K^2 stay inside K^2 and m + K is inside K, so m^j(K^2/K) is
    // supported on W.
    std::vector<int> W;
    for (int x = K2.floor(); x < std::max(K2.stable(), K.stable()); ++x)
        if (K2.contains(x) && !K.contains(x)) W.push_back(x);
    const int n = static_cast<int>(W.size());
    if (n == 0) throw ZeroRankError("rank 0: the Sally module vanishes");

    // V_j = degrees of W still present in m^j K^2.
    std::vector<std::uint8_t> V(static_cast<size_t>(n), 1);
    std::vector<int> sizes{n};
    while (true) {
        std::vector<std::uint8_t> next(static_cast<size_t>(n), 0);
        int cnt = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!V[static_cast<size_t>(j)]) continue;
                const int d = W[static_cast<size_t>(i)] - W[static_cast<size_t>(j)];
                if (d > 0 && H.contains(d)) {
                    next[static_cast<size_t>(i)] = 1;
                    ++cnt;
                    break;
                }
            }
        }
        if (cnt == 0) break;
        sizes.push_back(cnt);
        V = std::move(next);
    }

    SallyFiltration out;
    out.rank = n;
    out.t = static_cast<int>(sizes.size()) - 1;
    for (int i = 0; i <= out.t; ++i) {
        const int here = sizes[static_cast<size_t>(out.t - i)];
        const int deeper = out.t - i + 1 <= out.t ? sizes[static_cast<size_t>(out.t - i + 1)] : 0;
        out.s.push_back(here - deeper);
    }
    return out;
}

}  // namespace nsg
