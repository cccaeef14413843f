#include "nsg/census.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "nsg/classify.hpp"
#include "nsg/constructions.hpp"
#include "nsg/hilbert.hpp"

namespace nsg {

namespace {

// Tree node state: status per integer in [0, bound): 0 gap, 1 minimal
// generator, 2 reducible member.
struct TreeWalker {
    int g_max;
    int bound;
    const std::function<void(const NumericalSemigroup&)>* visit;
    std::vector<std::vector<std::uint8_t>> arena;  // one tab per depth
    std::vector<int> irr;

    explicit TreeWalker(int g_max_, const std::function<void(const NumericalSemigroup&)>& fn)
        : g_max(g_max_), bound(3 * g_max_ + 8), visit(&fn) {
        arena.assign(static_cast<size_t>(g_max + 2), std::vector<std::uint8_t>(
                                                         static_cast<size_t>(bound), 0));
    }

    void emit(const std::uint8_t* tab, int c, int m, int genus) {
        std::vector<int> gens;
        for (int i = 1; i < std::min(bound, c + m); ++i)
            if (tab[i] == 1) gens.push_back(i);
        (*visit)(NumericalSemigroup::from_table(tab, c, std::move(gens), genus));
    }

    // child = parent minus the minimal generator x (x >= conductor)
    void make_child(const std::uint8_t* p, int pc, int pm, int x, std::uint8_t* t, int& cc,
                    int& cm) {
        irr.clear();
        t[0] = 2;
        for (int i = 1; i < x; ++i) {
            t[i] = p[i];
            if (p[i] == 1) irr.push_back(i);
        }
        t[x] = 0;
        cc = x + 1;
        cm = (x == pm) ? pm + 1 : pm;
        const int upper = std::min(bound, cc + cm);
        for (int i = x + 1; i < upper; ++i) {
            const std::uint8_t v = (i < pc + pm) ? p[i] : std::uint8_t{2};
            if (v == 1) {
                t[i] = 1;
                irr.push_back(i);
                continue;
            }
            if (v == 0) {
                t[i] = 0;
                continue;
            }
            bool reducible = false;
            for (int g : irr) {
                if (g >= i) break;
                if (t[i - g] != 0) {
                    reducible = true;
                    break;
                }
            }
            t[i] = reducible ? 2 : 1;
            if (!reducible) irr.push_back(i);
        }
    }

    void dfs(int depth, int c, int m, int genus) {
        const std::uint8_t* tab = arena[static_cast<size_t>(depth)].data();
        emit(tab, c, m, genus);
        if (genus >= g_max) return;
        std::uint8_t* child = arena[static_cast<size_t>(depth + 1)].data();
        for (int x = c; x < std::min(bound, c + m); ++x) {
            if (tab[x] != 1) continue;
            int cc, cm;
            make_child(tab, c, m, x, child, cc, cm);
            dfs(depth + 1, cc, cm, genus + 1);
        }
    }

    void run() {
        // root N, then its unique child <2,3>
        auto& root = arena[0];
        std::fill(root.begin(), root.end(), std::uint8_t{2});
        root[1] = 1;
        emit(root.data(), 0, 1, 0);
        if (g_max < 1) return;
        auto& l2 = arena[1];
        std::fill(l2.begin(), l2.end(), std::uint8_t{2});
        l2[1] = 0;
        l2[2] = 1;
        l2[3] = 1;
        dfs(1, 2, 2, 1);
    }
};

}  // namespace

void enumerate_by_genus(int g_max, const std::function<void(const NumericalSemigroup&)>& fn) {
    assert(g_max >= 0);
    TreeWalker w(g_max, fn);
    w.run();
}

void enumerate_by_genus_parallel(int g_max, int jobs,
                                 const std::function<void(const NumericalSemigroup&)>& fn) {
    if (jobs <= 1 || g_max <= 10) {
        enumerate_by_genus(g_max, fn);
        return;
    }
    // split at a shallow frontier, hand subtrees to workers
    const int split = std::min(10, g_max - 1);
    std::vector<NumericalSemigroup> frontier;
    enumerate_by_genus(split, [&](const NumericalSemigroup& H) {
        if (H.genus() == split)
            frontier.push_back(H);
        else
            fn(H);
    });
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= frontier.size()) return;
            const NumericalSemigroup& root = frontier[i];
            // re-walk the subtree under `root` with a private walker
            TreeWalker w(g_max, fn);
            auto& tab = w.arena[0];
            const int c = root.conductor();
            const int m = root.multiplicity();
            for (int x = 0; x < std::min(w.bound, c + m); ++x)
                tab[static_cast<size_t>(x)] = root.contains(x) ? 2 : 0;
            for (int x = c + m; x < w.bound; ++x) tab[static_cast<size_t>(x)] = 2;
            for (int x : root.generators()) tab[static_cast<size_t>(x)] = 1;
            tab[0] = 2;
            w.dfs(0, c, m, root.genus());
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::vector<long long> count_by_genus(int g_max) {
    std::vector<long long> counts(static_cast<size_t>(g_max + 1), 0);
    enumerate_by_genus(g_max,
                       [&](const NumericalSemigroup& H) { ++counts[static_cast<size_t>(H.genus())]; });
    return counts;
}

std::vector<long long> count_by_genus_bruteforce(int g_max) {
    assert(g_max <= 10);
    std::vector<long long> counts(static_cast<size_t>(g_max + 1), 0);
    counts[0] = 1;  // N itself
    for (int g = 1; g <= g_max; ++g) {
        const int hi = 2 * g - 1;  // every gap of a genus-g semigroup is <= 2g-1
        std::vector<int> gaps;
        std::vector<std::uint8_t> is_gap(static_cast<size_t>(hi + 1), 0);
        long long found = 0;
        // choose g gaps from [1, hi], check the complement is closed
        std::function<void(int, int)> rec = [&](int start, int left) {
            if (left == 0) {
                for (int x = 1; x <= hi; ++x) {
                    if (is_gap[static_cast<size_t>(x)]) continue;
                    for (int y = x; x + y <= hi; ++y) {
                        if (is_gap[static_cast<size_t>(y)]) continue;
                        if (is_gap[static_cast<size_t>(x + y)]) return;
                    }
                }
                ++found;
                return;
            }
            for (int v = start; v <= hi - left + 1; ++v) {
                is_gap[static_cast<size_t>(v)] = 1;
                rec(v + 1, left - 1);
                is_gap[static_cast<size_t>(v)] = 0;
            }
        };
        rec(1, g);
        counts[static_cast<size_t>(g)] = found;
    }
    return counts;
}

void enumerate_three_generated(int f_max,
                               const std::function<void(const NumericalSemigroup&)>& fn) {
    for (int a1 = 3; a1 <= f_max + 1; ++a1) {
        for (int a2 = a1 + 1; a2 <= a1 + f_max; ++a2) {
            if (a2 % a1 == 0) continue;
            for (int a3 = a2 + 1; a3 <= a1 + f_max; ++a3) {
                if (a3 % a1 == 0 || (a3 - a2) % a1 == 0) continue;
                if (std::gcd(a1, std::gcd(a2, a3)) != 1) continue;
                auto H = NumericalSemigroup::from_generators({a1, a2, a3});
                if (H.embedding_dim() != 3 || H.frobenius() > f_max) continue;
                fn(H);
            }
        }
    }
}

void enumerate_multiplicity3(int f_max,
                             const std::function<void(const NumericalSemigroup&)>& fn) {
    for (int a2 = 4; a2 <= f_max + 3; ++a2) {
        if (a2 % 3 == 0) continue;
        for (int a3 = a2 + 1; a3 <= f_max + 3; ++a3) {
            if (a3 % 3 == 0 || (a3 - a2) % 3 == 0) continue;
            auto H = NumericalSemigroup::from_generators({3, a2, a3});
            if (H.embedding_dim() != 3 || H.frobenius() > f_max) continue;
            fn(H);
        }
    }
}

CensusRecord CensusRecord::of(const NumericalSemigroup& H) {
    CensusRecord r;
    const GotoReport rep = classify(H);
    r.generators = H.generators();
    r.genus = H.genus();
    r.multiplicity = H.multiplicity();
    r.embedding_dim = H.embedding_dim();
    r.cm_type = H.cm_type();
    r.goto_rank = rep.goto_rank;
    r.gorenstein = rep.gorenstein;
    r.almost_gorenstein = rep.almost_gorenstein;
    r.two_agl = rep.two_agl;
    r.ggl = rep.ggl;
    r.min_mult = rep.min_mult;
    r.arf = is_arf(H);
    r.len_K_over_R = rep.len_K_over_R;
    r.len_R_over_c = rep.len_R_over_c;
    r.v_R_over_c = rep.v_R_over_c;
    r.e1 = rep.e1;
    if (rep.is_goto && *rep.goto_rank >= 1) {
        const SallyFiltration sf = sally_filtration(H);
        r.t = sf.t;
        r.s = sf.s;
    }
    return r;
}

namespace {

std::string join_ints(const std::vector<int>& v, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
    return os.str();
}

std::string tri(const std::optional<bool>& b) {
    return b ? (*b ? "true" : "false") : "unknown";
}

}  // namespace

std::string CensusRecord::to_jsonl() const {
    std::ostringstream os;
    os << "{\"generators\":[" << join_ints(generators, ',') << "]"
       << ",\"genus\":" << genus << ",\"multiplicity\":" << multiplicity
       << ",\"embedding_dim\":" << embedding_dim << ",\"cm_type\":" << cm_type
       << ",\"goto_rank\":" << (goto_rank ? std::to_string(*goto_rank) : "null")
       << ",\"gorenstein\":" << (gorenstein ? "true" : "false")
       << ",\"almost_gorenstein\":" << (almost_gorenstein ? "true" : "false")
       << ",\"two_agl\":" << (two_agl ? "true" : "false")
       << ",\"ggl\":" << (ggl ? (*ggl ? "true" : "false") : "null")
       << ",\"min_mult\":" << (min_mult ? "true" : "false")
       << ",\"arf\":" << (arf ? "true" : "false") << ",\"len_K_over_R\":" << len_K_over_R
       << ",\"len_R_over_c\":" << len_R_over_c << ",\"v_R_over_c\":" << v_R_over_c
       << ",\"e1\":" << (e1 ? std::to_string(*e1) : "null")
       << ",\"t\":" << (t ? std::to_string(*t) : "null") << ",\"s\":";
    if (s)
        os << "[" << join_ints(*s, ',') << "]";
    else
        os << "null";
    os << "}";
    return os.str();
}

std::string CensusRecord::csv_header() {
    return "generators,genus,multiplicity,embedding_dim,cm_type,goto_rank,gorenstein,"
           "almost_gorenstein,two_agl,ggl,min_mult,arf,len_K_over_R,len_R_over_c,"
           "v_R_over_c,e1,t,s";
}

std::string CensusRecord::to_csv_row() const {
    std::ostringstream os;
    os << join_ints(generators, '|') << "," << genus << "," << multiplicity << ","
       << embedding_dim << "," << cm_type << ","
       << (goto_rank ? std::to_string(*goto_rank) : "") << "," << gorenstein << ","
       << almost_gorenstein << "," << two_agl << "," << tri(ggl) << "," << min_mult << ","
       << arf << "," << len_K_over_R << "," << len_R_over_c << "," << v_R_over_c << ","
       << (e1 ? std::to_string(*e1) : "") << "," << (t ? std::to_string(*t) : "") << ","
       << (s ? join_ints(*s, '|') : "");
    return os.str();
}

CensusFilter CensusFilter::parse(const std::string& expr) {
    CensusFilter f;
    std::stringstream ss(expr);
    std::string item;
    auto as_bool = [](const std::string& v) { return v == "1" || v == "true" || v == "yes"; };
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParamError("filter term needs key=value: " + item);
        const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "e")
            f.e = std::stoi(val);
        else if (key == "v")
            f.v = std::stoi(val);
        else if (key == "genus")
            f.genus = std::stoi(val);
        else if (key == "f_max")
            f.f_max = std::stoi(val);
        else if (key == "rank") {
            if (val == "none")
                f.rank_none = true;
            else
                f.rank = std::stoi(val);
        } else if (key == "goto")
            f.want_goto = as_bool(val);
        else if (key == "gorenstein")
            f.gorenstein = as_bool(val);
        else if (key == "ag")
            f.ag = as_bool(val);
        else if (key == "2agl")
            f.two_agl = as_bool(val);
        else if (key == "min_mult")
            f.min_mult = as_bool(val);
        else if (key == "arf")
            f.arf = as_bool(val);
        else if (key == "symmetric")
            f.symmetric = as_bool(val);
        else
            throw ParamError("unknown filter key: " + key);
    }
    return f;
}

bool CensusFilter::matches(const CensusRecord& r, int frobenius) const {
    if (e && r.multiplicity != *e) return false;
    if (v && r.embedding_dim != *v) return false;
    if (genus && r.genus != *genus) return false;
    if (f_max && frobenius > *f_max) return false;
    if (rank_none && r.goto_rank) return false;
    if (rank && (!r.goto_rank || *r.goto_rank != *rank)) return false;
    if (want_goto && r.goto_rank.has_value() != *want_goto) return false;
    if (gorenstein && r.gorenstein != *gorenstein) return false;
    if (ag && r.almost_gorenstein != *ag) return false;
    if (two_agl && r.two_agl != *two_agl) return false;
    if (min_mult && r.min_mult != *min_mult) return false;
    if (arf && r.arf != *arf) return false;
    if (symmetric && (r.cm_type == 1) != *symmetric) return false;
    return true;
}

CensusSummary run_census(const CensusOptions& opt, std::ostream& out) {
    CensusSummary sum;
    std::mutex sink;
    if (opt.csv) out << CensusRecord::csv_header() << "\n";
    auto handle = [&](const NumericalSemigroup& H) {
        CensusRecord r = CensusRecord::of(H);
        const bool keep = opt.filter.matches(r, H.frobenius());
        std::lock_guard<std::mutex> lock(sink);
        ++sum.visited;
        if (!keep) return;
        ++sum.emitted;
        ++sum.rank_histogram[r.goto_rank ? *r.goto_rank : -1];
        out << (opt.csv ? r.to_csv_row() : r.to_jsonl()) << "\n";
    };
    if (opt.frobenius_max) {
        enumerate_three_generated(*opt.frobenius_max, handle);
    } else if (opt.jobs > 1) {
        enumerate_by_genus_parallel(opt.genus_max, opt.jobs, handle);
    } else {
        enumerate_by_genus(opt.genus_max, handle);
    }
    if (!out) throw IoError("census sink write failed");
    return sum;
}

}  // namespace nsg
