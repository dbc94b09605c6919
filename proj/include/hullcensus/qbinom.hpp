#ifndef HULLCENSUS_QBINOM_HPP
#define HULLCENSUS_QBINOM_HPP

#include "hullcensus/exact.hpp"

namespace hullcensus {

/// Gaussian binomial [n; k]_q — the number of k-dimensional subspaces of
/// an n-dimensional space over a q-element field. Exact; 0 for k > n or
/// k < 0; 1 for k == 0. Computed by the alternating multiply-then-divide
/// loop (every intermediate is itself a Gaussian binomial, so each division
/// is exact) and memoized per (n, k, q). q >= 2; also used with base q^2.
Count gaussian_binomial(int n, int k, long q);

/// Exhaustively checks the four standard Gaussian-coefficient identities
/// (symmetry and the three one-step recurrences) at (n, k, q).
/// Requires 0 <= k <= n-1.
bool gaussian_identities_hold(int n, int k, long q);

} // namespace hullcensus

#endif // HULLCENSUS_QBINOM_HPP
