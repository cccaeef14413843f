#include "nsg/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace nsg {

namespace {

int vec_gcd(const std::vector<int>& v) {
    int g = 0;
    for (int x : v) g = std::gcd(g, x);
    return g;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int> gens) {
    if (gens.empty()) throw EmptyError("generator list is empty");
    for (int g : gens)
        if (g <= 0) throw EmptyError("generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (vec_gcd(gens) != 1) throw GcdError("gcd of generators is not 1");

    NumericalSemigroup H;
    if (gens.front() == 1) {
        // H = N
        H.gens_ = {1};
        H.mult_ = 1;
        H.frobenius_ = -1;
        H.type_ = 1;
        H.genus_ = 0;
        H.table_bound_ = 1;
        H.table_.assign(1, 1u);
        H.pf_.clear();
        return H;
    }

    const int e = gens.front();
    const int maxgen = gens.back();

    // Sieve until a run of e consecutive members shows up past the largest
    // generator; the run start is the conductor.
    constexpr int kMaxConductor = 50'000'000;  // window arithmetic stays exact and in memory
    std::vector<std::uint8_t> sieve;
    sieve.reserve(static_cast<size_t>(2 * maxgen + 2));
    sieve.push_back(1);
    int run = 0;
    int i = 1;
    for (;; ++i) {
        std::uint8_t in = 0;
        for (int g : gens) {
            if (g > i) break;
            if (sieve[static_cast<size_t>(i - g)]) {
                in = 1;
                break;
            }
        }
        sieve.push_back(in);
        run = in ? run + 1 : 0;
        if (run >= e && i >= maxgen) break;
        if (i > kMaxConductor)
            throw Error("conductor exceeds the supported window size");
    }
    const int conductor = i - run + 1;

    // Minimal generators are exactly the input generators that are not a sum
    // of two nonzero members.
    std::vector<int> minimal;
    for (int g : gens) {
        bool reducible = false;
        for (int y = e; 2 * y <= g; ++y) {
            if (sieve[static_cast<size_t>(y)] && sieve[static_cast<size_t>(g - y)]) {
                reducible = true;
                break;
            }
        }
        if (!reducible) minimal.push_back(g);
    }

    H.gens_ = std::move(minimal);
    H.mult_ = e;
    H.frobenius_ = conductor - 1;
    H.genus_ = 0;
    for (int x = 0; x < conductor; ++x)
        if (!sieve[static_cast<size_t>(x)]) ++H.genus_;
    H.finish(sieve);
    return H;
}

NumericalSemigroup NumericalSemigroup::from_table(const std::uint8_t* members, int conductor,
                                                  std::vector<int> minimal_gens, int genus) {
    NumericalSemigroup H;
    if (minimal_gens.empty() || minimal_gens.front() == 1) {
        return from_generators({1});
    }
    H.gens_ = std::move(minimal_gens);
    H.mult_ = H.gens_.front();
    H.frobenius_ = conductor - 1;
    H.genus_ = genus;
    std::vector<std::uint8_t> sieve(members, members + conductor);
    H.finish(sieve);
    return H;
}

// Builds the final bit table over [0, 2c + max generator) and derives PF(H)
// and the type. `sieve` must hold membership of at least [0, conductor).
void NumericalSemigroup::finish(const std::vector<std::uint8_t>& sieve) {
    const int c = conductor();
    const int maxgen = gens_.back();
    table_bound_ = 2 * c + maxgen;
    table_.assign(static_cast<size_t>((table_bound_ + 63) / 64), 0);
    for (int x = 0; x < c; ++x) {
        if (sieve[static_cast<size_t>(x)])
            table_[static_cast<unsigned>(x) >> 6] |= std::uint64_t{1} << (x & 63);
    }
    for (int x = c; x < table_bound_; ++x)
        table_[static_cast<unsigned>(x) >> 6] |= std::uint64_t{1} << (x & 63);

    pf_.clear();
    for (int g = 0; g < c; ++g) {
        if (contains(g)) continue;
        bool pf = true;
        for (int a : gens_) {
            if (!contains(g + a)) {
                pf = false;
                break;
            }
        }
        if (pf) pf_.push_back(g);
    }
    type_ = pf_.empty() ? 1 : static_cast<int>(pf_.size());
    assert(pf_.empty() || pf_.back() == frobenius_);
}

std::vector<int> NumericalSemigroup::apery_set(int m) const {
    if (m <= 0 || !contains(m)) throw NotMemberError("apery_set: m is not a nonzero member");
    std::vector<int> ap(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) {
        int x = r;
        while (!contains(x)) x += m;
        ap[static_cast<size_t>(r)] = x;
    }
    return ap;
}

const std::vector<int>& NumericalSemigroup::pseudo_frobenius() const {
    if (is_whole()) throw WholeSemigroupError("PF(N) is empty by convention");
    return pf_;
}

std::vector<int> NumericalSemigroup::gaps() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(genus_));
    for (int x = 0; x < conductor(); ++x)
        if (!contains(x)) out.push_back(x);
    return out;
}

}  // namespace nsg
