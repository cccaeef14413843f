#include "nsg/relative_ideal.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace nsg {

namespace {

inline void set_bit(std::vector<std::uint64_t>& w, long long k) {
    w[static_cast<size_t>(k >> 6)] |= std::uint64_t{1} << (k & 63);
}

inline bool get_bit(const std::vector<std::uint64_t>& w, long long k) {
    return (w[static_cast<size_t>(k >> 6)] >> (k & 63)) & 1u;
}

}  // namespace

std::uint64_t RelativeIdeal::word_at(long long p) const {
    const long long nb = stable_ - floor_;
    const long long off = p - floor_;
    std::uint64_t w = 0;
    long long j = std::max<long long>(0, off);
    const long long j1 = std::min<long long>(nb, off + 64);
    while (j < j1) {
        const int sh = static_cast<int>(j & 63);
        std::uint64_t chunk = bits_[static_cast<size_t>(j >> 6)] >> sh;
        int count = 64 - sh;
        if (j + count > j1) count = static_cast<int>(j1 - j);
        if (count < 64) chunk &= (std::uint64_t{1} << count) - 1;
        w |= chunk << (j - off);
        j += count;
    }
    const long long tail = stable_ - p;  // first tail bit within the word
    if (tail <= 0)
        w = ~std::uint64_t{0};
    else if (tail < 64)
        w |= ~std::uint64_t{0} << tail;
    return w;
}

RelativeIdeal RelativeIdeal::normalized(const NumericalSemigroup& H, long long lo, long long hi,
                                        std::vector<std::uint64_t> scratch) {
    // scratch holds bits of [lo, hi); [hi, oo) is assumed full.
    long long s = hi;
    while (s > lo && get_bit(scratch, s - 1 - lo)) --s;
    long long f = lo;
    while (f < s && !get_bit(scratch, f - lo)) ++f;

    RelativeIdeal e;
    e.base_ = &H;
    e.floor_ = static_cast<int>(f);
    e.stable_ = static_cast<int>(s);
    const long long nb = s - f;
    e.bits_.assign(static_cast<size_t>((nb + 63) / 64), 0);
    for (long long k = 0; k < nb; ++k)
        if (get_bit(scratch, k + (f - lo))) set_bit(e.bits_, k);
    return e;
}

RelativeIdeal RelativeIdeal::from_shifts(const NumericalSemigroup& H,
                                         const std::vector<int>& shifts) {
    assert(!shifts.empty());
    const int lo = *std::min_element(shifts.begin(), shifts.end());
    const int hi_shift = *std::max_element(shifts.begin(), shifts.end());
    const long long hi = hi_shift + static_cast<long long>(H.conductor());
    std::vector<std::uint64_t> scratch(static_cast<size_t>((hi - lo + 63) / 64), 0);
    for (int s : shifts) {
        for (long long x = s; x < hi; ++x)
            if (H.contains(static_cast<int>(x - s))) set_bit(scratch, x - lo);
    }
    return normalized(H, lo, hi, std::move(scratch));
}

RelativeIdeal RelativeIdeal::unit(const NumericalSemigroup& H) {
    const int c = H.conductor();
    std::vector<std::uint64_t> scratch(static_cast<size_t>((c + 63) / 64 + 1), 0);
    for (int x = 0; x < c; ++x)
        if (H.contains(x)) set_bit(scratch, x);
    return normalized(H, 0, c, std::move(scratch));
}

RelativeIdeal RelativeIdeal::maximal_ideal(const NumericalSemigroup& H) {
    if (H.is_whole()) {
        std::vector<std::uint64_t> scratch(1, 0);
        return normalized(H, 1, 1, std::move(scratch));
    }
    const int c = H.conductor();
    std::vector<std::uint64_t> scratch(static_cast<size_t>((c + 63) / 64 + 1), 0);
    for (int x = 1; x < c; ++x)
        if (H.contains(x)) set_bit(scratch, x);
    return normalized(H, 0, c, std::move(scratch));
}

RelativeIdeal RelativeIdeal::canonical(const NumericalSemigroup& H) {
    if (H.is_whole() || H.is_symmetric()) return unit(H);
    std::vector<int> shifts;
    const int f = H.frobenius();
    for (int c : H.pseudo_frobenius()) shifts.push_back(f - c);
    return from_shifts(H, shifts);
}

RelativeIdeal RelativeIdeal::from_over_semigroup(const NumericalSemigroup& H,
                                                 const NumericalSemigroup& T) {
    const int c = T.conductor();
    std::vector<std::uint64_t> scratch(static_cast<size_t>((c + 63) / 64 + 1), 0);
    for (int x = 0; x < c; ++x)
        if (T.contains(x)) set_bit(scratch, x);
    return normalized(H, 0, std::max(c, 0), std::move(scratch));
}

std::vector<int> RelativeIdeal::members() const {
    std::vector<int> out;
    for (int x = floor_; x < stable_; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

void RelativeIdeal::check_base(const RelativeIdeal& other) const {
    if (!(*base_ == *other.base_))
        throw BaseMismatchError("relative ideals live over different semigroups");
}

RelativeIdeal RelativeIdeal::product(const RelativeIdeal& other) const {
    check_base(other);
    const long long lo = static_cast<long long>(floor_) + other.floor_;
    const long long hi = std::min(static_cast<long long>(stable_) + other.floor_,
                                  static_cast<long long>(floor_) + other.stable_);
    const size_t nwords = static_cast<size_t>((hi - lo + 63) / 64);
    std::vector<std::uint64_t> scratch(nwords, 0);
    for (int e = floor_; e < stable_; ++e) {
        if (!contains(e)) continue;
        for (size_t wi = 0; wi < nwords; ++wi)
            scratch[wi] |= other.word_at(lo + 64 * static_cast<long long>(wi) - e);
    }
    // trim bits at/after hi so normalization sees a clean window
    const long long nb = hi - lo;
    if (nb & 63) scratch[nwords - 1] &= (std::uint64_t{1} << (nb & 63)) - 1;
    return normalized(*base_, lo, hi, std::move(scratch));
}

RelativeIdeal operator*(const RelativeIdeal& a, const RelativeIdeal& b) { return a.product(b); }

RelativeIdeal RelativeIdeal::sum(const RelativeIdeal& other) const {
    check_base(other);
    const long long lo = std::min(floor_, other.floor_);
    const long long hi = std::max(stable_, other.stable_);
    const size_t nwords = static_cast<size_t>((hi - lo + 63) / 64);
    std::vector<std::uint64_t> scratch(nwords, 0);
    for (size_t wi = 0; wi < nwords; ++wi) {
        const long long p = lo + 64 * static_cast<long long>(wi);
        scratch[wi] = word_at(p) | other.word_at(p);
    }
    const long long nb = hi - lo;
    if (nb & 63) scratch[nwords - 1] &= (std::uint64_t{1} << (nb & 63)) - 1;
    return normalized(*base_, lo, hi, std::move(scratch));
}

RelativeIdeal RelativeIdeal::colon(const RelativeIdeal& other) const {
    check_base(other);
    // candidates: x + other.floor >= floor; everything at or past
    // stable - other.floor qualifies.
    const long long lo = static_cast<long long>(floor_) - other.floor_;
    const long long hi = static_cast<long long>(stable_) - other.floor_;
    const size_t nwords = static_cast<size_t>((hi - lo + 63) / 64);
    std::vector<std::uint64_t> scratch(nwords, ~std::uint64_t{0});
    for (int f = other.floor_; f < other.stable_; ++f) {
        if (!other.contains(f)) continue;
        for (size_t wi = 0; wi < nwords; ++wi)
            scratch[wi] &= word_at(lo + 64 * static_cast<long long>(wi) + f);
    }
    // the tail of `other` forces x >= stable - other.stable
    const long long cut = static_cast<long long>(stable_) - other.stable_;
    for (long long x = lo; x < std::min(hi, cut); ++x)
        scratch[static_cast<size_t>((x - lo) >> 6)] &=
            ~(std::uint64_t{1} << ((x - lo) & 63));
    const long long nb = hi - lo;
    if (nb & 63) scratch[nwords - 1] &= (std::uint64_t{1} << (nb & 63)) - 1;
    return normalized(*base_, lo, hi, std::move(scratch));
}

RelativeIdeal RelativeIdeal::shifted(int d) const {
    RelativeIdeal e = *this;
    e.floor_ += d;
    e.stable_ += d;
    return e;
}

bool RelativeIdeal::subset_of(const RelativeIdeal& other) const {
    check_base(other);
    const long long lo = std::min(floor_, other.floor_);
    const long long hi = std::max(stable_, other.stable_);
    for (long long p = lo; p < hi; p += 64) {
        if (word_at(p) & ~other.word_at(p)) {
            if (p + 64 <= hi) return false;
            // partial last word: mask positions past hi
            const std::uint64_t mask = (std::uint64_t{1} << (hi - p)) - 1;
            if (word_at(p) & ~other.word_at(p) & mask) return false;
        }
    }
    return true;
}

bool RelativeIdeal::operator==(const RelativeIdeal& other) const {
    return *base_ == *other.base_ && floor_ == other.floor_ && stable_ == other.stable_ &&
           bits_ == other.bits_;
}

int length_between(const RelativeIdeal& sub, const RelativeIdeal& super) {
    if (!sub.subset_of(super)) throw NotContainedError("length_between: F is not inside E");
    const long long lo = std::min(sub.floor(), super.floor());
    const long long hi = std::max(sub.stable(), super.stable());
    int count = 0;
    for (long long p = lo; p < hi; p += 64) {
        std::uint64_t diff = super.word_at(p) & ~sub.word_at(p);
        if (p + 64 > hi) diff &= (std::uint64_t{1} << (hi - p)) - 1;
        count += std::popcount(diff);
    }
    return count;
}

std::vector<int> RelativeIdeal::minimal_generators() const {
    // degrees in E \ (m + E); m + E = union of (a + E) over minimal
    // generators a of H since E is an H-module.
    const NumericalSemigroup& H = *base_;
    std::vector<int> out;
    const int hi = stable_ + H.multiplicity();
    for (int x = floor_; x < hi; ++x) {
        if (!contains(x)) continue;
        bool in_me = false;
        for (int a : H.generators()) {
            if (x - a >= floor_ && contains(x - a)) {
                in_me = true;
                break;
            }
        }
        if (!in_me) out.push_back(x);
    }
    return out;
}

int RelativeIdeal::mu() const { return static_cast<int>(minimal_generators().size()); }

int mu_quotient(const RelativeIdeal& e, const RelativeIdeal& f) {
    if (!f.subset_of(e)) throw NotContainedError("mu_quotient: F is not inside E");
    int count = 0;
    for (int x : e.minimal_generators())
        if (!f.contains(x)) ++count;
    return count;
}

NumericalSemigroup semigroup_of_ideal(const RelativeIdeal& s) {
    assert(s.contains(0) && s.floor() == 0);
    if (s.stable() == 0) return NumericalSemigroup::from_generators({1});  // s = N
    std::vector<int> gens;
    const int c = s.stable();
    for (int x = 1; x < c + c; ++x) {
        if (!s.contains(x)) continue;
        bool reducible = false;
        for (int y = 1; 2 * y <= x; ++y) {
            if (s.contains(y) && s.contains(x - y)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) gens.push_back(x);
    }
    return NumericalSemigroup::from_generators(gens);
}

}  // namespace nsg
