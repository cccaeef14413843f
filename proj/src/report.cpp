#include "nsg/report.hpp"

#include <cassert>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nsg {

using nlohmann::json;

AnalysisBundle analyze(const NumericalSemigroup& H) {
    AnalysisBundle b;
    b.report = classify(H);
    {
        auto K = RelativeIdeal::canonical(H);
        auto [S, c] = ring_hull(H);
        b.ideals["K"] = to_json(K);
        b.ideals["K2"] = to_json(K.product(K));
        b.ideals["hull"] = to_json(S);
        b.ideals["conductor"] = to_json(c);
    }
    if (b.report.is_goto && *b.report.goto_rank >= 1) b.sally = sally_filtration(H);
    b.hilbert = hilbert_coefficients(H);
    if (H.embedding_dim() == 3 && !H.is_symmetric()) b.herzog = herzog_data(H);
    b.chain = chain_report(H);

    // cross-field consistency: every sub-report sees the same rank
    if (b.sally) assert(b.sally->rank == *b.report.goto_rank);
    if (b.hilbert && b.report.e1) assert(b.hilbert->e1 == *b.report.e1);
    assert(b.chain.derived_rank == b.report.goto_rank);
    return b;
}

json to_json(const NumericalSemigroup& H) {
    json j;
    j["generators"] = H.generators();
    j["multiplicity"] = H.multiplicity();
    j["embedding_dim"] = H.embedding_dim();
    j["frobenius"] = H.frobenius();
    j["conductor"] = H.conductor();
    j["pf"] = H.is_whole() ? std::vector<int>{} : H.pseudo_frobenius();
    j["cm_type"] = H.cm_type();
    j["genus"] = H.genus();
    return j;
}

json to_json(const RelativeIdeal& E) {
    json j;
    j["floor"] = E.floor();
    j["stable"] = E.stable();
    j["members"] = E.members();
    return j;
}

json to_json(const GotoReport& r) {
    json j;
    j["semigroup"] = to_json(r.semigroup);
    j["is_goto"] = r.is_goto;
    j["goto_rank"] = r.goto_rank ? json(*r.goto_rank) : json(nullptr);
    j["gorenstein"] = r.gorenstein;
    j["almost_gorenstein"] = r.almost_gorenstein;
    j["two_agl"] = r.two_agl;
    j["len_K_over_R"] = r.len_K_over_R;
    j["len_R_over_c"] = r.len_R_over_c;
    j["mu_K2_over_K"] = r.mu_K2_over_K;
    j["v_R_over_c"] = r.v_R_over_c;
    j["rc_gorenstein"] = r.rc_gorenstein;
    j["ggl"] = r.ggl ? json(*r.ggl) : json(nullptr);
    j["decomposition"] = r.decomposition ? json(*r.decomposition) : json(nullptr);
    j["e1"] = r.e1 ? json(*r.e1) : json(nullptr);
    j["min_mult"] = r.min_mult;
    return j;
}

json to_json(const SallyFiltration& s, const std::optional<HilbertData>& h) {
    json j;
    j["rank"] = s.rank;
    j["t"] = s.t;
    j["s"] = s.s;
    if (h) {
        j["e0"] = h->e0;
        j["e1"] = h->e1;
        j["red"] = h->red;
    }
    return j;
}

json to_json(const HerzogData& h) {
    json j;
    j["ordered_gens"] = h.ordered_gens;
    j["alpha"] = h.alpha;
    j["beta"] = h.beta;
    j["gamma"] = h.gamma;
    j["alpha_p"] = h.alpha_p;
    j["beta_p"] = h.beta_p;
    j["gamma_p"] = h.gamma_p;
    j["m"] = h.m;
    j["m_p"] = h.m_p;
    j["b"] = h.b;
    j["d"] = {h.d1, h.d2, h.d3};
    return j;
}

json to_json(const ConstructionReport& c) {
    json j;
    switch (c.kind) {
        case ConstructionKind::blowup_chain: j["kind"] = "blowup_chain"; break;
        case ConstructionKind::quasi_trivial: j["kind"] = "quasi_trivial"; break;
        case ConstructionKind::fiber_product: j["kind"] = "fiber_product"; break;
    }
    j["inputs"] = c.inputs;
    j["derived_rank"] = c.derived_rank ? json(*c.derived_rank) : json(nullptr);
    if (!c.branch.empty()) j["branch"] = c.branch;
    if (!c.chain.empty()) {
        json steps = json::array();
        for (const auto& s : c.chain) {
            json e;
            e["generators"] = s.H.generators();
            e["multiplicity"] = s.H.multiplicity();
            e["embedding_dim"] = s.H.embedding_dim();
            e["rank"] = s.rank ? json(*s.rank) : json(nullptr);
            e["min_mult"] = s.min_mult;
            steps.push_back(std::move(e));
        }
        j["chain"] = std::move(steps);
    }
    return j;
}

json to_json(const AnalysisBundle& b) {
    json j;
    j["report"] = to_json(b.report);
    j["ideals"] = b.ideals;
    j["sally"] = b.sally ? to_json(*b.sally, b.hilbert) : json(nullptr);
    if (!b.sally && b.hilbert) {
        json h;
        h["e0"] = b.hilbert->e0;
        h["e1"] = b.hilbert->e1;
        h["red"] = b.hilbert->red;
        j["hilbert"] = std::move(h);
    }
    j["herzog"] = b.herzog ? to_json(*b.herzog) : json(nullptr);
    j["chain"] = to_json(b.chain);
    return j;
}

namespace {

std::string gen_text(const NumericalSemigroup& H) {
    std::ostringstream os;
    os << "<";
    const auto& g = H.generators();
    for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << ">";
    return os.str();
}

std::string opt_text(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

std::string tri_text(const std::optional<bool>& v) {
    return v ? (*v ? "yes" : "no") : std::string("undecided");
}

}  // namespace

std::string human_report(const AnalysisBundle& b) {
    const auto& r = b.report;
    const auto& H = r.semigroup;
    std::ostringstream os;
    auto row = [&](const std::string& k, const std::string& v) {
        os << "  " << std::left << std::setw(22) << k << " " << v << "\n";
    };
    os << "semigroup " << gen_text(H) << "\n";
    row("multiplicity e", std::to_string(H.multiplicity()));
    row("embedding dim v", std::to_string(H.embedding_dim()));
    row("frobenius f", std::to_string(H.frobenius()));
    row("genus", std::to_string(H.genus()));
    {
        std::ostringstream pf;
        if (!H.is_whole())
            for (size_t i = 0; i < H.pseudo_frobenius().size(); ++i)
                pf << (i ? "," : "") << H.pseudo_frobenius()[i];
        row("PF(H)", "{" + pf.str() + "}");
    }
    row("type r", std::to_string(H.cm_type()));
    row("goto", r.is_goto ? "yes (K^2 = K^3)" : "no (K^2 != K^3)");
    row("goto rank", opt_text(r.goto_rank));
    row("gorenstein", r.gorenstein ? "yes" : "no");
    row("almost gorenstein", r.almost_gorenstein ? "yes" : "no");
    row("2-AGL", r.two_agl ? "yes" : "no");
    row("generalized gor.", tri_text(r.ggl));
    row("min multiplicity", r.min_mult ? "yes" : "no");
    row("l(K/R)", std::to_string(r.len_K_over_R));
    row("l(R/c)", std::to_string(r.len_R_over_c));
    row("mu(K^2/K)", std::to_string(r.mu_K2_over_K));
    row("v(R/c)", std::to_string(r.v_R_over_c));
    row("R/c gorenstein", r.rc_gorenstein ? "yes" : "no");
    if (r.decomposition) {
        std::ostringstream d;
        for (size_t i = 0; i < r.decomposition->size(); ++i)
            d << (i ? "," : "") << (*r.decomposition)[i];
        row("K/R summand lengths", "{" + d.str() + "}");
    }
    row("e1", opt_text(r.e1));
    if (b.hilbert) {
        row("e0 (reduction a)", std::to_string(b.hilbert->e0));
        row("reduction number", std::to_string(b.hilbert->red));
    }
    if (b.sally) {
        std::ostringstream s;
        for (size_t i = 0; i < b.sally->s.size(); ++i) s << (i ? "," : "") << b.sally->s[i];
        row("sally (t; s)", std::to_string(b.sally->t) + "; (" + s.str() + ")");
    }
    if (b.herzog) {
        const auto& h = *b.herzog;
        std::ostringstream hs;
        hs << "(" << h.alpha << "," << h.beta << "," << h.gamma << "," << h.alpha_p << ","
           << h.beta_p << "," << h.gamma_p << ") b=" << h.b;
        row("herzog exponents", hs.str());
        os << emit_matrix(H);
    }
    if (!b.chain.chain.empty()) {
        os << "blow-up chain:\n";
        for (const auto& s : b.chain.chain) {
            os << "  " << gen_text(s.H) << "  e=" << s.H.multiplicity()
               << " v=" << s.H.embedding_dim() << " rank=" << opt_text(s.rank)
               << (s.min_mult ? " [min mult]" : "") << "\n";
        }
    }
    return os.str();
}

std::vector<int> parse_generators(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ' ') continue;
        if (ch == ',') {
            if (cur.empty()) throw ParamError("empty generator in list");
            out.push_back(std::stoi(cur));
            cur.clear();
            continue;
        }
        if (ch < '0' || ch > '9') throw ParamError("generator lists are comma-separated integers");
        cur.push_back(ch);
        if (cur.size() > 8) throw ParamError("generator too large");
    }
    if (cur.empty()) throw ParamError("empty generator in list");
    out.push_back(std::stoi(cur));
    return out;
}

// ---------------------------------------------------------------------------
// fixture suite
// ---------------------------------------------------------------------------

namespace {

struct Fixture {
    std::string name;
    std::function<bool()> run;
};

NumericalSemigroup sg(std::initializer_list<int> g) {
    return NumericalSemigroup::from_generators(std::vector<int>(g));
}

NumericalSemigroup family3(int n) {
    return NumericalSemigroup::from_generators({3, 3 * n + 1, 3 * n + 2});
}

// <e, {en-e+i}_{3<=i<=e-1}, en+1, en+2>
NumericalSemigroup family_e(int e, int n) {
    std::vector<int> g{e};
    for (int i = 3; i <= e - 1; ++i) g.push_back(e * n - e + i);
    g.push_back(e * n + 1);
    g.push_back(e * n + 2);
    return NumericalSemigroup::from_generators(g);
}

bool eq_rank(const NumericalSemigroup& H, int n) {
    auto r = goto_rank(H);
    return r && *r == n;
}

std::vector<Fixture> fixture_table() {
    std::vector<Fixture> F;
    auto add = [&](std::string name, std::function<bool()> run) {
        F.push_back({std::move(name), std::move(run)});
    };

    // --- pseudo-Frobenius sets and conductors of the worked semigroups
    add("PF(<7,10,22>) = {25,33}, c = 34", [] {
        auto H = sg({7, 10, 22});
        return H.pseudo_frobenius() == std::vector<int>{25, 33} && H.conductor() == 34;
    });
    add("PF(<4,11,13,14>) = {7,9,10}, c = 11, minimal multiplicity", [] {
        auto H = sg({4, 11, 13, 14});
        return H.pseudo_frobenius() == std::vector<int>{7, 9, 10} && H.conductor() == 11 &&
               H.has_minimal_multiplicity();
    });
    add("PF(<5,11,13,19>) = {8,14,17}", [] {
        return sg({5, 11, 13, 19}).pseudo_frobenius() == std::vector<int>{8, 14, 17};
    });
    add("PF(<8,13,15,17,19,22>) = {9,11,14,18,20}, c = 21", [] {
        auto H = sg({8, 13, 15, 17, 19, 22});
        return H.pseudo_frobenius() == std::vector<int>{9, 11, 14, 18, 20} && H.conductor() == 21;
    });
    add("PF(<3,3n+1,3n+2>) = {3n-2,3n-1} for n = 1..6", [] {
        for (int n = 1; n <= 6; ++n)
            if (family3(n).pseudo_frobenius() != std::vector<int>{3 * n - 2, 3 * n - 1})
                return false;
        return true;
    });

    // --- canonical ideals and their powers
    add("<5,11,13,19>: K = R + Rt^3 + Rt^9", [] {
        auto H = sg({5, 11, 13, 19});
        return RelativeIdeal::canonical(H) == RelativeIdeal::from_shifts(H, {0, 3, 9});
    });
    add("<5,11,13,19>: K^2 = K + Rt^6 + Rt^12 = K^3, l(K^2/K) = 3, mu = 2", [] {
        auto H = sg({5, 11, 13, 19});
        auto K = RelativeIdeal::canonical(H);
        auto K2 = K.product(K);
        return K2 == RelativeIdeal::from_shifts(H, {0, 3, 6, 9, 12}) && K2.product(K) == K2 &&
               length_between(K, K2) == 3 && mu_quotient(K2, K) == 2;
    });
    add("<8,13,15,17,19,22>: K^2 = K + Rt^4 = K^3", [] {
        auto H = sg({8, 13, 15, 17, 19, 22});
        auto K = RelativeIdeal::canonical(H);
        auto K2 = K.product(K);
        return K == RelativeIdeal::from_shifts(H, {0, 2, 6, 9, 11}) &&
               K2 == K.sum(RelativeIdeal::from_shifts(H, {4})) && K2.product(K) == K2;
    });
    add("<4,11,13,14>: K = R + Rt + Rt^3, R[K] = V, c = t^11 V", [] {
        auto H = sg({4, 11, 13, 14});
        auto [S, c] = ring_hull(H);
        return RelativeIdeal::canonical(H) == RelativeIdeal::from_shifts(H, {0, 1, 3}) &&
               S.floor() == 0 && S.stable() == 0 && c.floor() == 11 && c.stable() == 11;
    });
    add("<7,10,22>: K = R + Rt^8, K^2 = K + Rt^16 = K^3", [] {
        auto H = sg({7, 10, 22});
        auto K = RelativeIdeal::canonical(H);
        auto K2 = K.product(K);
        return K == RelativeIdeal::from_shifts(H, {0, 8}) &&
               K2 == K.sum(RelativeIdeal::from_shifts(H, {16})) && K2.product(K) == K2;
    });
    add("<4,5,11>: K = R + Rt, K^2 != K^3, l(R/c) = 3, c = t^8 V", [] {
        auto H = sg({4, 5, 11});
        auto K = RelativeIdeal::canonical(H);
        auto K2 = K.product(K);
        auto [S, c] = ring_hull(H);
        return K == RelativeIdeal::from_shifts(H, {0, 1}) && !(K2.product(K) == K2) &&
               !goto_rank(H) && length_between(c, RelativeIdeal::unit(H)) == 3 &&
               c.floor() == 8 && c.stable() == 8;
    });
    add("K:K = R for <5,11,13,19>, <7,10,22>, <4,11,13,14>", [] {
        for (auto H : {sg({5, 11, 13, 19}), sg({7, 10, 22}), sg({4, 11, 13, 14})}) {
            auto K = RelativeIdeal::canonical(H);
            if (!(K.colon(K) == RelativeIdeal::unit(H))) return false;
        }
        return true;
    });
    add("c = R:k[[t]] = t^{3n} k[[t]] for <3,3n+1,3n+2>", [] {
        for (int n = 1; n <= 4; ++n) {
            auto H = family3(n);
            auto N = NumericalSemigroup::from_generators({1});
            auto c = RelativeIdeal::unit(H).colon(RelativeIdeal::from_over_semigroup(H, N));
            if (c.floor() != 3 * n || c.stable() != 3 * n) return false;
        }
        return true;
    });

    // --- Goto ranks
    add("<3,3n+1,3n+2> is n-Goto with l(K/R) = n, n = 1..6", [] {
        for (int n = 1; n <= 6; ++n) {
            auto H = family3(n);
            if (!eq_rank(H, n)) return false;
            if (length_between(RelativeIdeal::unit(H), RelativeIdeal::canonical(H)) != n)
                return false;
        }
        return true;
    });
    add("<7,10,22> is 4-Goto", [] { return eq_rank(sg({7, 10, 22}), 4); });
    add("<4,11,13,14> is 3-Goto with v(R/c) = 1", [] {
        auto H = sg({4, 11, 13, 14});
        return eq_rank(H, 3) && v_of_R_mod_c(H) == 1;
    });
    add("<8,13,15,17,19,22> is 3-Goto, not minimal multiplicity, v(R/c) = 1", [] {
        auto H = sg({8, 13, 15, 17, 19, 22});
        return eq_rank(H, 3) && !H.has_minimal_multiplicity() && v_of_R_mod_c(H) == 1;
    });
    add("<5,11,13,19> is 3-Goto, not generalized Gorenstein (R/c not Gorenstein)", [] {
        auto rep = classify(sg({5, 11, 13, 19}));
        return rep.is_goto && *rep.goto_rank == 3 && rep.mu_K2_over_K == 2 &&
               !rep.rc_gorenstein && rep.ggl && !*rep.ggl;
    });
    add("<7,10,22>: v(R/c) = 2 and c = (t^14,t^20,t^22,t^24)", [] {
        auto H = sg({7, 10, 22});
        auto [S, c] = ring_hull(H);
        return v_of_R_mod_c(H) == 2 && c == RelativeIdeal::from_shifts(H, {14, 20, 22, 24});
    });
    add("e-family <e,{en-e+i},en+1,en+2> is n-Goto with K^2 = V, not GGL, v(R/c) = 1", [] {
        for (auto [e, n] : {std::pair{4, 2}, {4, 3}, {5, 2}, {5, 3}, {6, 3}}) {
            auto H = family_e(e, n);
            auto rep = classify(H);
            if (!rep.is_goto || *rep.goto_rank != n) return false;
            auto K = RelativeIdeal::canonical(H);
            auto K2 = K.product(K);
            if (K2.floor() != 0 || K2.stable() != 0) return false;  // K^2 = V = N as a set
            if (!rep.ggl || *rep.ggl) return false;
            if (rep.v_R_over_c != 1 || !rep.min_mult) return false;
        }
        return true;
    });

    // --- decompositions of K/R
    add("K/R summands: e-family gives {n, (n-1)^{e-3}}", [] {
        for (auto [e, n] : {std::pair{4, 2}, {5, 2}, {5, 3}, {6, 3}}) {
            std::vector<int> expect{n};
            for (int i = 0; i < e - 3; ++i) expect.push_back(n - 1);
            if (decompose_K_mod_R(family_e(e, n)) != expect) return false;
        }
        return true;
    });
    add("K/R = R/c for r = 2 (family <3,3n+1,3n+2> gives {n})", [] {
        for (int n = 1; n <= 5; ++n)
            if (decompose_K_mod_R(family3(n)) != std::vector<int>{n}) return false;
        return true;
    });

    // --- e_1 of the canonical ideal
    add("e1 = 0 for Gorenstein, e1 = r for 1-Goto <3,4,5>", [] {
        return e1_of_canonical(sg({2, 3})) == 0 && e1_of_canonical(sg({3, 4, 5})) == 2 &&
               sg({3, 4, 5}).cm_type() == 2;
    });
    add("e1 = 2n = n r for <3,3n+1,3n+2> (GGL attains the upper bound)", [] {
        for (int n = 2; n <= 5; ++n) {
            auto H = family3(n);
            auto rep = classify(H);
            if (!rep.e1 || *rep.e1 != 2 * n) return false;
            if (!rep.ggl || !*rep.ggl) return false;
            const int r = H.cm_type();
            if (!(r + n <= *rep.e1 && *rep.e1 <= n * r)) return false;
        }
        return true;
    });

    // --- Herzog data of three-generated semigroups
    add("<7,10,22>: exponents (2,2,1,3,4,1) on (10,7,22), b = 8, 3b in H", [] {
        auto H = sg({7, 10, 22});
        auto h = herzog_data(H);
        return h.ordered_gens == std::array<int, 3>{10, 7, 22} && h.alpha == 2 && h.beta == 2 &&
               h.gamma == 1 && h.alpha_p == 3 && h.beta_p == 4 && h.gamma_p == 1 && h.b == 8 &&
               !H.contains(h.b) && !H.contains(2 * h.b) && H.contains(3 * h.b);
    });
    add("PF = {m-d, m'-d} for <7,10,22> and <3,7,8>", [] {
        for (auto H : {sg({7, 10, 22}), sg({3, 7, 8})}) {
            auto h = herzog_data(H);
            const int d = h.ordered_gens[0] + h.ordered_gens[1] + h.ordered_gens[2];
            std::vector<int> pf{h.m - d, h.m_p - d};
            std::sort(pf.begin(), pf.end());
            if (pf != H.pseudo_frobenius()) return false;
        }
        return true;
    });
    add("rank by matrix criterion = direct rank on <7,10,22>, <3,7,8>, <4,5,11>", [] {
        return goto_rank_via_theorem(sg({7, 10, 22})) == goto_rank(sg({7, 10, 22})) &&
               goto_rank_via_theorem(sg({3, 7, 8})) == std::optional<int>(2) &&
               !goto_rank_via_theorem(sg({4, 5, 11})) && !goto_rank(sg({4, 5, 11}));
    });
    add("<3,7,8> matches the multiplicity-3 normal form (n,1,1,alpha,1,1)", [] {
        auto h = herzog_data(sg({3, 7, 8}));
        return h.ordered_gens == std::array<int, 3>{3, 7, 8} && h.alpha == 2 && h.beta == 1 &&
               h.gamma == 1 && h.alpha_p == 3 && h.beta_p == 1 && h.gamma_p == 1;
    });
    add("family <3,2n+a,n+2a>: e3_family(2,3) = <3,7,8> is 2-Goto; (1,3) = <3,5,7> is 1-Goto", [] {
        auto A = e3_family(2, 3);
        auto B = e3_family(1, 3);
        return A == sg({3, 7, 8}) && eq_rank(A, 2) && B == sg({3, 5, 7}) && eq_rank(B, 1);
    });

    // --- blow-ups and Arf chains
    add("chain <3,10,11> -> <3,7,8> -> <3,4,5> -> N with ranks 3,2,1,0", [] {
        auto chain = blowup_chain(sg({3, 10, 11}));
        if (chain.size() != 4) return false;
        const int expect[4] = {3, 2, 1, 0};
        for (int i = 0; i < 4; ++i) {
            auto r = goto_rank(chain[static_cast<size_t>(i)]);
            if (!r || *r != expect[i]) return false;
        }
        return chain[1] == sg({3, 7, 8}) && chain[2] == sg({3, 4, 5}) && chain[3].is_whole();
    });
    add("Arf family chains (e = 4..6, n = 3) descend through ranks n, n-1, ..., 0", [] {
        for (int e = 4; e <= 6; ++e) {
            const int n = 3;
            auto chain = blowup_chain(family_e(e, n));
            if (static_cast<int>(chain.size()) != n + 1) return false;
            for (int j = 0; j <= n; ++j) {
                auto r = goto_rank(chain[static_cast<size_t>(j)]);
                if (!r || *r != n - j) return false;
                if (!chain[static_cast<size_t>(j)].has_minimal_multiplicity()) return false;
            }
        }
        return true;
    });
    add("blow-up theorem holds on <3,7,8> and <3,10,11>; <7,10,22> fails the hypothesis", [] {
        if (!check_blowup_theorem(sg({3, 7, 8}))) return false;
        if (!check_blowup_theorem(sg({3, 10, 11}))) return false;
        try {
            check_blowup_theorem(sg({7, 10, 22}));
            return false;
        } catch (const PreconditionError&) {
            return true;
        }
    });

    // --- quasi-trivial extensions
    add("l(R/(R:k[[t]])) = n for <3,3n+1,3n+2> (idealizations R x c are n-Goto)", [] {
        auto N = NumericalSemigroup::from_generators({1});
        for (int n = 1; n <= 4; ++n)
            if (quasi_trivial_rank(family3(n), N) != n) return false;
        return true;
    });
    add("<4,13,22,27>: K = R + Rt^5 + Rt^14, K^2 != K^3, R x c is 4-Goto", [] {
        auto H = sg({4, 13, 22, 27});
        auto K = RelativeIdeal::canonical(H);
        if (!(K == RelativeIdeal::from_shifts(H, {0, 5, 14}))) return false;
        auto K2 = K.product(K);
        if (K2.product(K) == K2) return false;
        auto [S, c] = ring_hull(H);
        auto T = semigroup_of_ideal(S);
        return quasi_trivial_rank(H, T) == 4 && mu_quotient(K2, K) == 2;
    });
    add("l(T/K) = l(R/c) route: hull extension of <5,11,13,19> gives rank 3", [] {
        auto H = sg({5, 11, 13, 19});
        auto [S, c] = ring_hull(H);
        return quasi_trivial_rank(H, semigroup_of_ideal(S)) == 3 &&
               length_between(c, RelativeIdeal::unit(H)) == 3;
    });

    // --- fiber products
    add("fiber: <3,3n+1,3n+2> x <3,7,8> is (n+1)-Goto, n = 2..5", [] {
        auto B = classify(sg({3, 7, 8}));
        for (int n = 2; n <= 5; ++n) {
            auto A = classify(family3(n));
            auto r = fiber_product_rank(A, B);
            if (!r || *r != n + 1) return false;
        }
        return true;
    });
    add("fiber: <3,3n+1,3n+2> x k[[t]] is n-Goto; k[[t]] x k[[t]] is Gorenstein", [] {
        auto D = classify(NumericalSemigroup::from_generators({1}));
        for (int n = 2; n <= 4; ++n) {
            auto r = fiber_product_rank(classify(family3(n)), D);
            if (!r || *r != n) return false;
        }
        auto z = fiber_product_rank(D, D);
        return z && *z == 0;
    });
    add("fiber with a non-Goto factor has no rank (K^2 = K^3 fails on a factor)", [] {
        return !fiber_product_rank(classify(sg({4, 5, 11})), classify(sg({3, 7, 8})));
    });

    // --- reduction numbers, Hilbert functions, Sally filtrations
    add("reduction numbers: Gorenstein 0, Goto non-Gorenstein 2, <4,5,11> 3", [] {
        return reduction_number(sg({2, 3})) == 0 && reduction_number(sg({3, 4, 5})) == 2 &&
               reduction_number(sg({7, 10, 22})) == 2 && reduction_number(sg({4, 5, 11})) == 3;
    });
    add("<3,4,5>: a = 3, l(R/I^m) = 2,4,7,10 and e1 = 2", [] {
        auto H = sg({3, 4, 5});
        auto [I, a] = canonical_ideal_in_R(H);
        auto lens = hilbert_lengths(H, 4);
        auto h = hilbert_coefficients(H);
        return a == 3 && lens == std::vector<long long>{2, 4, 7, 10} && h.e0 == 3 && h.e1 == 2;
    });
    add("<7,10,22>: e1 = 8 = n + l(K/R) and linear tail e0(m+1) - 8", [] {
        auto H = sg({7, 10, 22});
        auto h = hilbert_coefficients(H);
        if (h.e1 != 8) return false;
        auto lens = hilbert_lengths(H, 6);
        for (int m = 1; m < 6; ++m)
            if (lens[static_cast<size_t>(m)] != h.e0 * (m + 1) - 8) return false;
        return true;
    });
    add("Hilbert formula of Goto rings holds on the worked examples", [] {
        for (auto H : {sg({3, 7, 8}), sg({5, 11, 13, 19}), sg({8, 13, 15, 17, 19, 22}),
                       sg({7, 10, 22}), sg({4, 11, 13, 14}), sg({2, 3})})
            if (!check_hilbert_formula(H)) return false;
        return true;
    });
    add("1-Goto Sally module is B(-1): (t,s) = (0,(1)) on <3,4,5> and <3,5,7>", [] {
        for (auto H : {sg({3, 4, 5}), sg({3, 5, 7})}) {
            auto sf = sally_filtration(H);
            if (sf.t != 0 || sf.s != std::vector<int>{1}) return false;
        }
        return true;
    });
    add("<3,3n+1,3n+2>: t = n-1 with all s_i = 1 (v(R/c) = 1 shape)", [] {
        for (int n = 2; n <= 5; ++n) {
            auto sf = sally_filtration(family3(n));
            if (sf.t != n - 1) return false;
            if (sf.s != std::vector<int>(static_cast<size_t>(n), 1)) return false;
        }
        return true;
    });
    add("<7,10,22>: sally rank 4 with t = 2 < 3 (v(R/c) = 2)", [] {
        auto sf = sally_filtration(sg({7, 10, 22}));
        int sum = 0;
        for (int x : sf.s) sum += x;
        return sf.rank == 4 && sum == 4 && sf.t == 2 && sf.s == std::vector<int>{1, 2, 1};
    });
    add("rank 0 iff Gorenstein on the worked examples", [] {
        for (auto H : {sg({2, 3}), sg({4, 6, 9}), sg({3, 4, 5}), sg({7, 10, 22})}) {
            auto r = goto_rank(H);
            const bool zero = r && *r == 0;
            if (zero != H.is_symmetric()) return false;
        }
        return true;
    });

    return F;
}

}  // namespace

int verify_paper(std::ostream& out) {
    int failures = 0;
    const auto table = fixture_table();
    for (const auto& f : table) {
        bool ok = false;
        std::string note;
        try {
            ok = f.run();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" (") + e.what() + ")";
        }
        if (!ok) ++failures;
        out << (ok ? "PASS" : "FAIL") << "  " << f.name << note << "\n";
    }
    out << (failures == 0 ? "all " : "FAILED ") << table.size() << " fixtures"
        << (failures ? (", " + std::to_string(failures) + " failing") : "") << "\n";
    return failures;
}

}  // namespace nsg
