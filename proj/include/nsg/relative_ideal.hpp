#pragma once

#include <cstdint>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// A relative (fractional monomial) ideal of k[[H]]: a set E of integers
/// with E + H contained in E, bounded below and cofinite above. Stored as
/// the window [floor, stable) plus an implicit all-members tail; `stable`
/// is the least s with [s, oo) inside E (so stable-1 is not a member unless
/// the ideal is floor + N, where stable == floor).
///
/// Values are immutable and normalized; the base semigroup is held by
/// pointer and must outlive the ideal.
class RelativeIdeal {
  public:
    /// Union of translates s + H over the given shifts.
    static RelativeIdeal from_shifts(const NumericalSemigroup& H, const std::vector<int>& shifts);
    /// R itself as an ideal.
    static RelativeIdeal unit(const NumericalSemigroup& H);
    /// The maximal ideal m = H \ {0}.
    static RelativeIdeal maximal_ideal(const NumericalSemigroup& H);
    /// The fractional canonical ideal K, shifts { f(H) - c : c in PF(H) };
    /// K = H for H = N and for symmetric H.
    static RelativeIdeal canonical(const NumericalSemigroup& H);
    /// An over-semigroup T of H viewed as a relative ideal over H.
    /// The caller is responsible for H being contained in T.
    static RelativeIdeal from_over_semigroup(const NumericalSemigroup& H,
                                             const NumericalSemigroup& T);

    const NumericalSemigroup& base() const { return *base_; }
    int floor() const { return floor_; }
    int stable() const { return stable_; }

    bool contains(int x) const {
        if (x < floor_) return false;
        if (x >= stable_) return true;
        unsigned k = static_cast<unsigned>(x - floor_);
        return (bits_[k >> 6] >> (k & 63)) & 1u;
    }

    /// Finite members in [floor, stable), sorted.
    std::vector<int> members() const;

    RelativeIdeal product(const RelativeIdeal& other) const;
    RelativeIdeal sum(const RelativeIdeal& other) const;
    /// this : other = { x | x + other is contained in this }.
    RelativeIdeal colon(const RelativeIdeal& other) const;
    /// d + E.
    RelativeIdeal shifted(int d) const;

    bool subset_of(const RelativeIdeal& other) const;
    bool operator==(const RelativeIdeal& other) const;
    bool operator!=(const RelativeIdeal& other) const { return !(*this == other); }

    /// Number of minimal module generators over the base ring.
    int mu() const;
    /// Degrees of the minimal module generators.
    std::vector<int> minimal_generators() const;

    /// The 64 membership bits at absolute positions [p, p+64).
    std::uint64_t word_at(long long p) const;

  private:
    RelativeIdeal() = default;
    static RelativeIdeal normalized(const NumericalSemigroup& H, long long lo, long long hi,
                                    std::vector<std::uint64_t> scratch);
    void check_base(const RelativeIdeal& other) const;

    const NumericalSemigroup* base_ = nullptr;
    int floor_ = 0;
    int stable_ = 0;
    std::vector<std::uint64_t> bits_;  // window [floor_, stable_), bit k = floor_+k
};

RelativeIdeal operator*(const RelativeIdeal& a, const RelativeIdeal& b);

/// l_R(E/F) = |E \ F| for F contained in E. Throws NotContainedError otherwise.
int length_between(const RelativeIdeal& sub, const RelativeIdeal& super);

/// mu_R(E/F): minimal generators of the quotient module E/F (F inside E).
int mu_quotient(const RelativeIdeal& e, const RelativeIdeal& f);

/// Interprets an ideal S with 0 in S and S + S inside S as a numerical
/// semigroup (used for hulls R[K]).
NumericalSemigroup semigroup_of_ideal(const RelativeIdeal& s);

}  // namespace nsg
