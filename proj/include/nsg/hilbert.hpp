#pragma once

#include <utility>
#include <vector>

#include "nsg/relative_ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Numeric shadow of the Sally-module filtration: t = max{k : m^k S != 0}
/// and the minimal generator counts s_0..s_t of the m^{t-i} layers,
/// summing to the rank.
struct SallyFiltration {
    int rank = 0;
    int t = 0;
    std::vector<int> s;
};

struct HilbertData {
    long long e0 = 0;  // multiplicity of the extended canonical ideal = reduction value a
    long long e1 = 0;  // fitted from the linear tail
    int red = 0;       // reduction number
    int a = 0;         // chosen reduction parameter
    long long len_R_over_I = 0;
};

/// The canonical ideal inside R: I = a + K with a the least positive
/// element of R:K (so that I is an honest ideal of R), together with a.
std::pair<RelativeIdeal, int> canonical_ideal_in_R(const NumericalSemigroup& H);

/// Least r with K^{r+1} = K^r (equivalently I^{r+1} = a I^r).
int reduction_number(const NumericalSemigroup& H);

/// l(R/I^m) for m = 1..m_max.
std::vector<long long> hilbert_lengths(const NumericalSemigroup& H, int m_max);

/// e0, e1 and the reduction number; e1 is fitted from the last three
/// values of the Hilbert function and checked to be constant there.
HilbertData hilbert_coefficients(const NumericalSemigroup& H);

/// Verifies the closed-form Hilbert function of a Goto ring:
/// l(R/I^{l+1}) = e0 (l+1) - (e0 - l(R/I) + n) for l >= 1, and l(R/I) at
/// l = 0. Throws NotGotoError when K^2 != K^3.
bool check_hilbert_formula(const NumericalSemigroup& H);

/// Throws NotGotoError when K^2 != K^3 and ZeroRankError for rank 0.
SallyFiltration sally_filtration(const NumericalSemigroup& H);

}  // namespace nsg
