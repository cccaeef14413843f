#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Visits every numerical semigroup of genus <= g_max exactly once
/// (semigroup-tree traversal: children remove one minimal generator above
/// the Frobenius number). Deterministic order.
void enumerate_by_genus(int g_max, const std::function<void(const NumericalSemigroup&)>& fn);

/// Same visit set; the tree is split into subtrees handed to `jobs`
/// workers. `fn` must be thread-safe; visit order is not deterministic
/// for jobs > 1.
void enumerate_by_genus_parallel(int g_max, int jobs,
                                 const std::function<void(const NumericalSemigroup&)>& fn);

/// Semigroup counts per genus 0..g_max via the tree.
std::vector<long long> count_by_genus(int g_max);

/// Independent oracle: counts via brute-force enumeration of gap sets
/// inside [1, 2g-1]. Exponential; g_max <= 10.
std::vector<long long> count_by_genus_bruteforce(int g_max);

/// All minimally 3-generated H with f(H) <= f_max (symmetric ones
/// included), ordered by generators.
void enumerate_three_generated(int f_max,
                               const std::function<void(const NumericalSemigroup&)>& fn);

/// All H = <3, a, b> (multiplicity 3, embedding dimension 3) with
/// f(H) <= f_max.
void enumerate_multiplicity3(int f_max,
                             const std::function<void(const NumericalSemigroup&)>& fn);

/// One census row; every field agrees with a fresh classify() of the
/// generators.
struct CensusRecord {
    std::vector<int> generators;
    int genus = 0;
    int multiplicity = 0;
    int embedding_dim = 0;
    int cm_type = 0;
    std::optional<int> goto_rank;
    bool gorenstein = false;
    bool almost_gorenstein = false;
    bool two_agl = false;
    std::optional<bool> ggl;
    bool min_mult = false;
    bool arf = false;
    int len_K_over_R = 0;
    int len_R_over_c = 0;
    int v_R_over_c = 0;
    std::optional<int> e1;
    std::optional<int> t;
    std::optional<std::vector<int>> s;

    static CensusRecord of(const NumericalSemigroup& H);
    std::string to_jsonl() const;
    std::string to_csv_row() const;
    static std::string csv_header();
};

/// Conjunctive key=value filter, e.g. "e=3,min_mult=1,f_max=200".
/// Keys: e, v, genus, rank (integer or "none"), goto, gorenstein, ag,
/// 2agl, min_mult, arf, symmetric, f_max.
struct CensusFilter {
    static CensusFilter parse(const std::string& expr);
    bool matches(const CensusRecord& r, int frobenius) const;

    std::optional<int> e, v, genus, rank, f_max;
    std::optional<bool> want_goto, gorenstein, ag, two_agl, min_mult, arf, symmetric;
    bool rank_none = false;
};

struct CensusOptions {
    int genus_max = 15;
    std::optional<int> frobenius_max;  // switches to 3-generated enumeration
    CensusFilter filter;
    bool csv = false;  // default JSONL
    int jobs = 1;
};

struct CensusSummary {
    long long visited = 0;
    long long emitted = 0;
    std::map<int, long long> rank_histogram;  // key -1 collects non-Goto
};

/// Streams matching CensusRecords to `out` (JSONL or CSV) and returns the
/// rank histogram of the emitted records.
CensusSummary run_census(const CensusOptions& opt, std::ostream& out);

}  // namespace nsg
