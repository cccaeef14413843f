#include "nsg/herzog.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace nsg {

namespace {

// The unique representation c*a1 = lam2*a2 + lam3*a3 with lam2, lam3 >= 0,
// where c = min{k > 0 : k*a1 in <a2, a3>}. Returns false if none exists
// for the given c (cannot happen once c is correct) or the representation
// is ambiguous (degenerate symmetric-ish case).
bool represent(int c, int a1, int a2, int a3, int& lam2, int& lam3) {
    int found = 0;
    for (int l2 = 0; l2 * a2 <= c * a1; ++l2) {
        const int rest = c * a1 - l2 * a2;
        if (rest % a3 == 0) {
            if (++found > 1) return false;
            lam2 = l2;
            lam3 = rest / a3;
        }
    }
    return found == 1;
}

int min_power_in(int a, int b, int c) {
    // min{k > 0 : k*a in <b, c>}
    for (int k = 1;; ++k) {
        const long long target = static_cast<long long>(k) * a;
        for (int i = 0; i * static_cast<long long>(b) <= target; ++i)
            if ((target - static_cast<long long>(i) * b) % c == 0) return k;
    }
}

struct Candidate {
    std::array<int, 3> gens{};
    std::array<int, 6> expo{};  // alpha, beta, gamma, alpha', beta', gamma'
};

std::optional<Candidate> try_order(int a1, int a2, int a3) {
    const int c1 = min_power_in(a1, a2, a3);
    const int c2 = min_power_in(a2, a1, a3);
    const int c3 = min_power_in(a3, a1, a2);
    int beta_p, gamma, alpha, gamma_p, alpha_p, beta;
    if (!represent(c1, a1, a2, a3, beta_p, gamma)) return std::nullopt;
    if (!represent(c2, a2, a1, a3, alpha, gamma_p)) return std::nullopt;
    if (!represent(c3, a3, a1, a2, alpha_p, beta)) return std::nullopt;
    if (alpha <= 0 || beta <= 0 || gamma <= 0 || alpha_p <= 0 || beta_p <= 0 || gamma_p <= 0)
        return std::nullopt;
    if (alpha + alpha_p != c1 || beta + beta_p != c2 || gamma + gamma_p != c3)
        return std::nullopt;
    Candidate cand;
    cand.gens = {a1, a2, a3};
    cand.expo = {alpha, beta, gamma, alpha_p, beta_p, gamma_p};
    return cand;
}

HerzogData finish(const Candidate& c) {
    HerzogData h;
    h.ordered_gens = c.gens;
    h.alpha = c.expo[0];
    h.beta = c.expo[1];
    h.gamma = c.expo[2];
    h.alpha_p = c.expo[3];
    h.beta_p = c.expo[4];
    h.gamma_p = c.expo[5];
    const int a1 = c.gens[0], a2 = c.gens[1], a3 = c.gens[2];
    h.d1 = a3 * (h.gamma + h.gamma_p);
    h.d2 = a1 * (h.alpha + h.alpha_p);
    h.d3 = a2 * (h.beta + h.beta_p);
    h.m = a1 * h.alpha + h.d1;
    h.m_p = a1 * h.alpha_p + h.d3;
    assert(h.m == a2 * h.beta + h.d2 && h.m == a3 * h.gamma + h.d3);
    assert(h.m_p == a2 * h.beta_p + h.d1 && h.m_p == a3 * h.gamma_p + h.d2);
    h.b = h.m_p > h.m ? h.m_p - h.m : h.m - h.m_p;
    return h;
}

std::string power(const char* var, int e) {
    std::ostringstream os;
    os << var;
    if (e != 1) os << "^" << e;
    return os.str();
}

}  // namespace

HerzogData herzog_data(const NumericalSemigroup& H) {
    if (H.embedding_dim() != 3)
        throw NotThreeGeneratedError("Herzog data needs a minimally 3-generated semigroup");
    if (H.is_symmetric())
        throw GorensteinError("symmetric 3-generated semigroups are complete intersections");
    const auto& g = H.generators();

    // Try all generator orders; keep the orders with m' > m and pick the
    // lexicographically largest exponent tuple among them.
    HerzogData best{};
    std::array<int, 6> best_expo{};
    bool found = false;
    const int idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : idx) {
        auto cand = try_order(g[static_cast<size_t>(p[0])], g[static_cast<size_t>(p[1])],
                              g[static_cast<size_t>(p[2])]);
        if (!cand) continue;
        const HerzogData h = finish(*cand);
        if (h.m_p <= h.m) continue;
        if (!found || cand->expo > best_expo) {
            best = h;
            best_expo = cand->expo;
            found = true;
        }
    }
    if (!found)
        throw GorensteinError("no consistent positive exponent assignment; degenerate case");
    return best;
}

std::optional<int> goto_rank_via_theorem(const NumericalSemigroup& H) {
    const HerzogData h = herzog_data(H);
    if (!H.contains(3 * h.b)) return std::nullopt;
    // normalized so that m' > m
    return h.alpha * h.beta * h.gamma;
}

NumericalSemigroup e3_family(int n, int alpha) {
    if (n < 1) throw ParamError("e3 family needs n >= 1");
    if (alpha < n + 1) throw ParamError("e3 family needs alpha >= n+1");
    if ((alpha - n) % 3 == 0) throw ParamError("e3 family needs alpha != n mod 3");
    return NumericalSemigroup::from_generators({3, 2 * n + alpha, n + 2 * alpha});
}

std::string emit_matrix(const NumericalSemigroup& H) {
    const HerzogData h = herzog_data(H);
    std::ostringstream os;
    os << "t^" << h.ordered_gens[0] << " <- X, t^" << h.ordered_gens[1] << " <- Y, t^"
       << h.ordered_gens[2] << " <- Z\n";
    os << "I2 [ " << power("X", h.alpha) << " " << power("Y", h.beta) << " "
       << power("Z", h.gamma) << " ]\n";
    os << "   [ " << power("Y", h.beta_p) << " " << power("Z", h.gamma_p) << " "
       << power("X", h.alpha_p) << " ]\n";
    os << "D1 = " << power("Z", h.gamma + h.gamma_p) << " - " << power("X", h.alpha_p)
       << " " << power("Y", h.beta) << "   (deg " << h.d1 << ")\n";
    os << "D2 = " << power("X", h.alpha + h.alpha_p) << " - " << power("Y", h.beta_p) << " "
       << power("Z", h.gamma) << "   (deg " << h.d2 << ")\n";
    os << "D3 = " << power("Y", h.beta + h.beta_p) << " - " << power("X", h.alpha) << " "
       << power("Z", h.gamma_p) << "   (deg " << h.d3 << ")\n";
    return os.str();
}

}  // namespace nsg
