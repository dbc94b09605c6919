#ifndef HULLCENSUS_RATIO_HPP
#define HULLCENSUS_RATIO_HPP

#include "hullcensus/census.hpp"
#include "hullcensus/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hullcensus {

// Exact analysis of consecutive spectrum ratios A_{n,k,l,q} / A_{n,k,l+1,q}:
// the closed-form coefficient alpha with A_l = alpha (q^{l+1} - 1) A_{l+1},
// the integer floor mu, and grid verification of the decrease bounds.

/// Thrown for the one excluded family (q == 3 mod 4, n == 2 mod 4,
/// l+1 == k == n/2) where A_{n,k,l+1,q} is the zero self-orthogonal count
/// and the ratio is undefined.
class DegenerateRatioError : public std::domain_error {
  public:
    explicit DegenerateRatioError(const std::string& what) : std::domain_error(what) {}
};

/// Closed-form alpha with its parity branch label.
struct AlphaResult {
    Ratio value;
    std::string branch;
};

/// alpha_{n,k,l,q}. Requires 0 <= l <= k-1 and k <= n/2; throws
/// DegenerateRatioError when A_{n,k,l+1,q} = 0.
AlphaResult alpha(int n, int k, int l, long q);

/// mu_{n,k,l,q} = floor(A_l / A_{l+1}), computed from the exact counts
/// (alpha is the independent cross-check, not the source).
Count mu(int n, int k, int l, long q);

struct MuPrediction {
    enum class Kind { exact, lower_bound, no_prediction };
    Kind kind = Kind::no_prediction;
    Count value; // meaningful for exact and lower_bound
};

/// The proposition-level prediction for mu: q^{l+1} - 1 exactly inside the
/// stated l-ranges, q^{l+1} for the n == 2k, l == k-1 even-q corner,
/// a q^{l+1} lower bound elsewhere in the covered branches, and
/// no_prediction outside them.
MuPrediction predicted_mu(int n, int k, int l, long q);

/// One verified tuple of the decrease theorem.
struct RatioReport {
    long q = 0;
    int n = 0;
    int k = 0;
    int l = 0;
    std::optional<Ratio> alpha;   // absent when degenerate
    std::optional<Ratio> ratio;   // A_l / A_{l+1}; absent when A_{l+1} == 0
    std::optional<Count> mu;
    Count bound;                  // q^{l+1}-1, halved in the half-bound branch
    bool half_bound = false;      // bound is (q^{l+1}-1)/2, checked non-strictly
    bool tight = false;           // ratio equals the bound exactly
    bool degenerate = false;      // A_{l+1} == 0
    bool ok = false;              // bound satisfied
    std::string branch;
};

struct VerificationGrid {
    std::vector<long> qs;
    int max_n = 0;
};

struct VerificationResult {
    std::vector<RatioReport> reports;    // sorted by (q, n, k, l)
    std::vector<RatioReport> violations; // empty on success
};

/// Checks, for every (q, n <= max_n, k <= n/2, l < k):
///   A_l  >  (q^{l+1} - 1)     A_{l+1}   in the strict regime,
///   A_l >= ((q^{l+1} - 1)/2)  A_{l+1}   when q is odd, n is even, k-l is
///                                        odd and eta((-1)^{n/2}) = +1,
///                                        with equality exactly at
///                                        k = n/2, l = k-1.
/// Tuples with A_{l+1} = 0 satisfy the bound trivially and are flagged
/// degenerate.
VerificationResult verify_ratio_bounds(const VerificationGrid& grid);

/// Single-tuple version of the above.
RatioReport ratio_report(int n, int k, int l, long q);

} // namespace hullcensus

#endif // HULLCENSUS_RATIO_HPP
