#pragma once

#include <array>
#include <optional>
#include <string>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Structure data of a nonsymmetric 3-generated semigroup: the exponents
/// of the 2x3 matrix whose minors cut out k[[H]], the presentation degrees
/// m, m' of the canonical module, and b = |m - m'|.
struct HerzogData {
    std::array<int, 3> ordered_gens{};  // (a1, a2, a3) in matrix role order
    int alpha = 0, beta = 0, gamma = 0;
    int alpha_p = 0, beta_p = 0, gamma_p = 0;
    int m = 0, m_p = 0;
    int b = 0;
    int d1 = 0, d2 = 0, d3 = 0;  // degrees of the minors
};

/// Computes the matrix exponents. The generator order is normalized so
/// that m' > m and, among the valid cyclic orders, the exponent tuple
/// (alpha, beta, gamma, alpha', beta', gamma') is lexicographically
/// largest. Throws GorensteinError for symmetric H and
/// NotThreeGeneratedError when the embedding dimension is not 3.
HerzogData herzog_data(const NumericalSemigroup& H);

/// Rank by the closed-form criterion: nothing when 3b is a gap, otherwise
/// alpha*beta*gamma (for the normalized order with m' > m).
std::optional<int> goto_rank_via_theorem(const NumericalSemigroup& H);

/// The multiplicity-3 family <3, 2n+alpha, n+2alpha>; requires
/// alpha >= n+1 and alpha != n (mod 3). Throws ParamError otherwise.
NumericalSemigroup e3_family(int n, int alpha);

/// Text rendering of the exponent matrix and its three minors.
std::string emit_matrix(const NumericalSemigroup& H);

}  // namespace nsg
