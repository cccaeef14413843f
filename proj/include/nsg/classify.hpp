#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nsg/relative_ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Full classification record for R = k[[H]].
struct GotoReport {
    NumericalSemigroup semigroup;
    bool is_goto = false;               // K^2 = K^3
    std::optional<int> goto_rank;       // l(K^2/K) when is_goto
    bool gorenstein = false;            // r = 1, equivalently rank 0
    bool almost_gorenstein = false;     // Goto with rank <= 1
    bool two_agl = false;               // rank = 2
    int len_K_over_R = 0;               // l(K/R)
    int len_R_over_c = 0;               // l(R/c), c = R:R[K]
    int mu_K2_over_K = 0;               // mu(K^2/K)
    int v_R_over_c = 0;                 // embedding dimension of R/c
    bool rc_gorenstein = false;         // R/c Gorenstein
    std::optional<bool> ggl;            // generalized Gorenstein, when decidable
    std::optional<std::vector<int>> decomposition;  // cyclic summand lengths of K/R, descending
    std::optional<int> e1;              // first Hilbert coefficient of a canonical ideal
    bool min_mult = false;
};

/// S = R[K] (the stabilized power of K) and c = R:S.
std::pair<RelativeIdeal, RelativeIdeal> ring_hull(const NumericalSemigroup& H);

/// l(K^2/K) if K^2 = K^3, nothing otherwise.
std::optional<int> goto_rank(const NumericalSemigroup& H);

GotoReport classify(const NumericalSemigroup& H);

/// Number of minimal generators of H outside c; 0 when c = R.
int v_of_R_mod_c(const NumericalSemigroup& H);

/// Lengths of the cyclic summands of K/R (descending). Requires R/c
/// Gorenstein; throws DecompositionUnavailable otherwise. Empty for
/// symmetric H.
std::vector<int> decompose_K_mod_R(const NumericalSemigroup& H);

/// e_1 of a canonical ideal: rank + l(K/R). Throws NotGotoError.
int e1_of_canonical(const NumericalSemigroup& H);

}  // namespace nsg
