#include "nsg/constructions.hpp"

#include <cassert>
#include <sstream>

namespace nsg {

namespace {

std::string render(const NumericalSemigroup& H) {
    std::ostringstream os;
    os << "<";
    const auto& g = H.generators();
    for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << ">";
    return os.str();
}

}  // namespace

NumericalSemigroup blowup(const NumericalSemigroup& H) {
    if (H.is_whole()) return H;
    const auto& g = H.generators();
    std::vector<int> shifted;
    shifted.push_back(g.front());
    for (size_t i = 1; i < g.size(); ++i) shifted.push_back(g[i] - g.front());
    return NumericalSemigroup::from_generators(shifted);
}

std::vector<NumericalSemigroup> blowup_chain(const NumericalSemigroup& H) {
    std::vector<NumericalSemigroup> chain{H};
    while (!chain.back().is_whole()) {
        chain.push_back(blowup(chain.back()));
        assert(static_cast<int>(chain.size()) <= H.genus() + 2);
    }
    return chain;
}

bool check_blowup_theorem(const NumericalSemigroup& H) {
    if (!H.has_minimal_multiplicity())
        throw PreconditionError("blow-up descent needs minimal multiplicity");
    auto n = goto_rank(H);
    if (!n || *n < 2) throw PreconditionError("blow-up descent needs a Goto ring of rank >= 2");
    auto m = goto_rank(blowup(H));
    return m && *m == *n - 1;
}

bool is_arf(const NumericalSemigroup& H) {
    for (const auto& step : blowup_chain(H))
        if (!step.has_minimal_multiplicity()) return false;
    return true;
}

bool is_arf_by_pattern(const NumericalSemigroup& H) {
    // x + y - z in H for all members x >= y >= z; only triples below the
    // conductor matter since x + y - z >= x.
    const int c = H.conductor();
    for (int x = 0; x < c; ++x) {
        if (!H.contains(x)) continue;
        for (int y = 0; y <= x; ++y) {
            if (!H.contains(y)) continue;
            for (int z = 0; z <= y; ++z)
                if (H.contains(z) && !H.contains(x + y - z)) return false;
        }
    }
    return true;
}

int quasi_trivial_rank(const NumericalSemigroup& H, const NumericalSemigroup& T) {
    if (T == H) throw ExtensionError("T must properly extend R");
    for (int a : H.generators())
        if (!T.contains(a)) throw ExtensionError("T does not contain H");
    RelativeIdeal K = RelativeIdeal::canonical(H);
    RelativeIdeal Tid = RelativeIdeal::from_over_semigroup(H, T);
    if (!K.subset_of(Tid)) throw ExtensionError("T does not contain the canonical ideal");
    RelativeIdeal R = RelativeIdeal::unit(H);
    RelativeIdeal J = R.colon(Tid);
    return length_between(J, R);
}

std::optional<int> fiber_product_rank(const GotoReport& p, const GotoReport& q,
                                      std::string* branch) {
    auto set = [&](const char* b) {
        if (branch) *branch = b;
    };
    if (!p.is_goto || !q.is_goto) {
        set("factor with K^2 != K^3: product is not Goto");
        return std::nullopt;
    }
    const bool dvr_p = p.semigroup.multiplicity() == 1;
    const bool dvr_q = q.semigroup.multiplicity() == 1;
    const int rp = *p.goto_rank, rq = *q.goto_rank;
    if (dvr_p && dvr_q) {
        set("both DVRs: Gorenstein product");
        return 0;
    }
    if (rp <= 1 && rq <= 1) {
        set("both almost Gorenstein, not both DVRs: product is 1-Goto");
        return 1;
    }
    if (dvr_p) {
        set("one factor a DVR: rank of the other");
        return rq;
    }
    if (dvr_q) {
        set("one factor a DVR: rank of the other");
        return rp;
    }
    if (rp == 0) {
        set("one factor Gorenstein (not a DVR): rank of the other");
        return rq;
    }
    if (rq == 0) {
        set("one factor Gorenstein (not a DVR): rank of the other");
        return rp;
    }
    set("both ranks positive: p + q - 1");
    return rp + rq - 1;
}

ConstructionReport chain_report(const NumericalSemigroup& H) {
    ConstructionReport rep;
    rep.kind = ConstructionKind::blowup_chain;
    rep.inputs = {render(H)};
    for (auto& step : blowup_chain(H)) {
        ChainStep s{step, goto_rank(step), step.has_minimal_multiplicity()};
        rep.chain.push_back(std::move(s));
    }
    rep.derived_rank = rep.chain.front().rank;
    return rep;
}

ConstructionReport quasi_trivial_report(const NumericalSemigroup& H,
                                        const NumericalSemigroup& T) {
    ConstructionReport rep;
    rep.kind = ConstructionKind::quasi_trivial;
    rep.inputs = {render(H), render(T)};
    rep.derived_rank = quasi_trivial_rank(H, T);
    rep.branch = "l(R/J), J = R:T";
    return rep;
}

ConstructionReport fiber_report(const NumericalSemigroup& A, const NumericalSemigroup& B) {
    ConstructionReport rep;
    rep.kind = ConstructionKind::fiber_product;
    rep.inputs = {render(A), render(B)};
    rep.derived_rank = fiber_product_rank(classify(A), classify(B), &rep.branch);
    return rep;
}

}  // namespace nsg
