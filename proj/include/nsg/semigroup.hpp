#pragma once

#include <cstdint>
#include <vector>

#include "nsg/errors.hpp"

namespace nsg {

/// A numerical semigroup H = <a_1,...,a_l>, gcd(a_i) = 1, with its classical
/// invariants cached at construction. Values are immutable; all operations
/// are pure and safe to share across threads.
///
/// Membership is backed by a bit table over [0, 2c(H) + max generator);
/// beyond the table membership is constant true. H = N is admitted and
/// carries frobenius = -1, PF = {} and cm_type = 1 (symmetric convention).
class NumericalSemigroup {
  public:
    /// Default-constructs H = N.
    NumericalSemigroup() = default;

    /// Builds H from any generating set. Redundant generators are removed,
    /// so embedding_dim() is canonical.
    static NumericalSemigroup from_generators(std::vector<int> gens);

    /// Trusted constructor for enumeration: `members` holds membership of
    /// [0, conductor), `minimal_gens` is already minimal, `genus` the gap
    /// count. No validation beyond debug assertions.
    static NumericalSemigroup from_table(const std::uint8_t* members, int conductor,
                                         std::vector<int> minimal_gens, int genus);

    bool contains(int x) const {
        if (x < 0) return false;
        if (x >= table_bound_) return true;
        return (table_[static_cast<unsigned>(x) >> 6] >> (x & 63)) & 1u;
    }

    /// Least element of H in each residue class mod m; entry at index r is
    /// the least member congruent to r. Requires m in H, m > 0.
    std::vector<int> apery_set(int m) const;

    /// PF(H). Throws WholeSemigroupError for H = N.
    const std::vector<int>& pseudo_frobenius() const;

    bool has_minimal_multiplicity() const { return mult_ == static_cast<int>(gens_.size()); }

    const std::vector<int>& generators() const { return gens_; }
    int multiplicity() const { return mult_; }
    int embedding_dim() const { return static_cast<int>(gens_.size()); }
    int frobenius() const { return frobenius_; }
    int conductor() const { return frobenius_ + 1; }
    int cm_type() const { return type_; }
    int genus() const { return genus_; }
    bool is_whole() const { return frobenius_ < 0; }
    bool is_symmetric() const { return type_ == 1; }
    std::vector<int> gaps() const;

    /// Membership table upper bound (exclusive); contains() is table-free
    /// at and beyond this value.
    int table_bound() const { return table_bound_; }

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }
    bool operator!=(const NumericalSemigroup& o) const { return gens_ != o.gens_; }

  private:
    void finish(const std::vector<std::uint8_t>& sieve);

    std::vector<int> gens_{1};
    std::vector<int> pf_;
    std::vector<std::uint64_t> table_{1};
    int table_bound_ = 1;
    int mult_ = 1;
    int frobenius_ = -1;
    int type_ = 1;
    int genus_ = 0;
};

}  // namespace nsg
