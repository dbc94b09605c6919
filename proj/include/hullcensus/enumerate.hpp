#ifndef HULLCENSUS_ENUMERATE_HPP
#define HULLCENSUS_ENUMERATE_HPP

#include "hullcensus/census.hpp"
#include "hullcensus/code.hpp"
#include "hullcensus/exact.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hullcensus {

// Independent ground truth: every [n, k]_q code is visited exactly once via
// its unique RREF generator matrix. Enumeration is pivot-set-major
// (lexicographic k-subsets of columns), free cells filled in odometer order
// (row-major cells, last cell fastest), so shard boundaries and resume
// points are reproducible. One shard = one pivot-column set.

/// Raised when an enumeration would visit more subspaces than the guard
/// allows; carries the exact count it would need.
class GuardExceededError : public std::runtime_error {
  public:
    GuardExceededError(const Count& required, const Count& limit)
        : std::runtime_error("enumeration would visit " + required.get_str() +
                             " subspaces, above the guard of " + limit.get_str()),
          required_(required) {}
    const Count& required() const { return required_; }

  private:
    Count required_;
};

struct CodeFilters {
    int min_d = 1;      // keep codes with minimum distance >= min_d
    int min_dual_d = 1; // and dual distance >= min_dual_d
    bool require_even = false;
    bool require_so = false;
    bool require_lcd = false;

    bool any() const {
        return min_d > 1 || min_dual_d > 1 || require_even || require_so || require_lcd;
    }
};

struct EnumerationTask {
    int n = 0;
    int k = 0;
    long q = 2;
    CodeFilters filters;
    /// Restriction to specific pivot-set ranks (lexicographic indices);
    /// the sharding hook. Unset = all shards.
    std::optional<std::vector<long>> shard_ranks;
    Count guard_limit = Count(1000000000);
    int threads = 1;
    /// Debug mode: every verify_every-th visit in a shard recomputes the
    /// hull dimension by explicit row-space/null-space intersection and
    /// throws on disagreement. 0 = off.
    long verify_every = 0;
    /// Resumable per-shard tally file (spectrum runs only).
    std::string checkpoint_path;
    /// Forces the table-driven engine even for q = 2 (engine-equivalence tests).
    bool force_generic = false;
};

/// Visits each k-dimensional subspace once as an RREF generator matrix.
/// Returns the number visited (= [n; k]_q when unsharded).
Count enumerate_rref(const EnumerationTask& task, const std::function<void(const Matrix&)>& visitor);

/// Same visit set, shards distributed over task.threads workers; the
/// visitor must be safe to call concurrently.
Count enumerate_rref_parallel(const EnumerationTask& task,
                              const std::function<void(const Matrix&)>& visitor);

/// Tally of hull dimensions over all (or sharded) [n, k]_q codes.
HullSpectrum brute_spectrum(const EnumerationTask& task);

/// One census cell: hull dimension plus type flags of a labeled code.
struct TypeCell {
    int hull_dim = 0;
    bool even = false;
    bool self_orthogonal = false;
    bool lcd = false;
    auto operator<=>(const TypeCell&) const = default;
};

struct FilteredCounts {
    std::map<TypeCell, Count> cells;
    Count total = 0; // codes passing the filters
};

/// Labeled-code counts by (hull dimension, type flags) after applying the
/// task's filters.
FilteredCounts brute_filtered_count(const EnumerationTask& task);

/// Number of pivot-set shards for an (n, k) enumeration: C(n, k).
long shard_count(int n, int k);

} // namespace hullcensus

#endif // HULLCENSUS_ENUMERATE_HPP
