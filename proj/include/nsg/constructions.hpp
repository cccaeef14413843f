#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class ConstructionKind { blowup_chain, quasi_trivial, fiber_product };

struct ChainStep {
    NumericalSemigroup H;
    std::optional<int> rank;
    bool min_mult = false;
};

struct ConstructionReport {
    ConstructionKind kind{};
    std::vector<std::string> inputs;
    std::optional<int> derived_rank;
    std::vector<ChainStep> chain;
    std::string branch;  // case-table branch used for fiber products
};

/// Blow-up of the maximal ideal: the semigroup generated by
/// {e, a_2 - e, ..., a_l - e}; N is a fixpoint.
NumericalSemigroup blowup(const NumericalSemigroup& H);

/// H, blowup(H), ... up to N (inclusive); strictly increasing.
std::vector<NumericalSemigroup> blowup_chain(const NumericalSemigroup& H);

/// For minimal-multiplicity Goto H with rank n >= 2: does the blow-up have
/// rank n-1? Throws PreconditionError when the hypotheses fail.
bool check_blowup_theorem(const NumericalSemigroup& H);

/// True when every semigroup along the blow-up chain has minimal
/// multiplicity.
bool is_arf(const NumericalSemigroup& H);

/// Arf by the pattern criterion: x + y - z in H for all members
/// x >= y >= z (window-bounded; equivalent to is_arf).
bool is_arf_by_pattern(const NumericalSemigroup& H);

/// Goto rank of every quasi-trivial extension R x^alpha J with J = R:T,
/// T a birational extension with canonical shifts inside it: n = l(R/J).
/// Throws ExtensionError when T = H or T does not contain K.
int quasi_trivial_rank(const NumericalSemigroup& H, const NumericalSemigroup& T);

/// Rank of the fiber product R x_k S from the classifications of the two
/// factors; nothing when either factor is not Goto. `branch`, when given,
/// receives the case used.
std::optional<int> fiber_product_rank(const GotoReport& p, const GotoReport& q,
                                      std::string* branch = nullptr);

ConstructionReport chain_report(const NumericalSemigroup& H);
ConstructionReport quasi_trivial_report(const NumericalSemigroup& H, const NumericalSemigroup& T);
ConstructionReport fiber_report(const NumericalSemigroup& A, const NumericalSemigroup& B);

}  // namespace nsg
