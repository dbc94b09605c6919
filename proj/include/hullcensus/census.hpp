#ifndef HULLCENSUS_CENSUS_HPP
#define HULLCENSUS_CENSUS_HPP

#include "hullcensus/exact.hpp"

#include <string>
#include <vector>

namespace hullcensus {

// Closed-form counts of [n, k]_q codes by hull dimension: the classical
// sum-over-self-orthogonal-counts formula, the per-parity product formulas,
// and the LCD specialization, all evaluated in exact rational arithmetic
// with an integrality tripwire on every conversion.

/// Number of self-orthogonal [n, k]_q codes (sigma). Requires 0 <= k <= n/2.
Count self_orthogonal_count(int n, int k, long q);

/// Number of [n, k]_q codes with hull dimension l, by the alternating sum
/// over self-orthogonal counts. Accepts any 0 <= k <= n (duality
/// A_{n,k,l} = A_{n,n-k,l} applied internally); returns 0 for
/// l > min(k, n-k).
Count sendrier_count(int n, int k, int l, long q);

/// Same quantity by the product formula for even q (evaluated directly on
/// the whole stated domain l <= k <= n-l; the k == n-l corner, where the
/// unified form degenerates, is rerouted through duality).
Count product_count_even_q(int n, int k, int l, long q);

/// Same quantity by the product formula for odd q, using the quadratic
/// character eta((-1)^{n/2}) of the field for even n.
Count product_count_odd_q(int n, int k, int l, long q);

/// Dispatches on the parity of q.
Count product_count(int n, int k, int l, long q);

/// LCD count (hull dimension 0) by its dedicated closed form; odd q,
/// 0 < k < n. Must agree with product_count_odd_q(n, k, 0, q) and
/// sendrier_count(n, k, 0, q).
Count lcd_count_closed(int n, int k, long q);

enum class SpectrumMethod { sendrier, product_even, product_odd, lcd_closed, brute_force };

const char* to_string(SpectrumMethod m);

/// The sequence (A_{n,k,0,q}, ..., A_{n,k,k,q}) with provenance.
struct HullSpectrum {
    long q = 0;
    int n = 0;
    int k = 0;
    std::vector<Count> counts; // indexed by hull dimension, length k+1
    SpectrumMethod method = SpectrumMethod::sendrier;
};

/// Evaluates the full spectrum with the requested formula backend and
/// verifies the partition identity sum_l counts[l] == [n; k]_q.
/// Requires 1 <= k <= n-1 and a method matching q's parity.
HullSpectrum spectrum(int n, int k, long q, SpectrumMethod method);

/// q odd, n == 2 (mod 4), and -1 a nonsquare in the field.
struct ConditionStar {
    long q = 0;
    int n = 0;
    bool holds = false;
};

ConditionStar condition_star(int n, long q);

} // namespace hullcensus

#endif // HULLCENSUS_CENSUS_HPP
