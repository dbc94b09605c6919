#ifndef HULLCENSUS_CLASSIFY_HPP
#define HULLCENSUS_CLASSIFY_HPP

#include "hullcensus/code.hpp"
#include "hullcensus/enumerate.hpp"
#include "hullcensus/exact.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hullcensus {

// Classification of codes up to monomial equivalence for q in {2, 3}: the
// group is S_n for q = 2 and {+-1}^n x| S_n for q = 3 (column scalings
// applied first, then the coordinate permutation). Canonical form = the
// row-major lexicographically smallest RREF generator over the orbit; class
// discovery walks every RREF once and expands whole orbits, so total work
// is (number of classes) x (group order) and every code is touched once.

/// Raised when a classification or orbit scan would exceed its size
/// bounds (a resource refusal, not a domain error).
class SizeBoundError : public std::runtime_error {
  public:
    explicit SizeBoundError(const std::string& what) : std::runtime_error(what) {}
};

struct ClassifyOptions {
    /// Default orbit-scan bounds; computations beyond them refuse unless
    /// allow_large is set.
    int max_n_binary = 8;
    int max_n_ternary = 6;
    bool allow_large = false;
    Count guard_limit = Count(1000000000);
    /// Upper bound on distinct RREFs held in the dedup set.
    std::size_t max_stored_forms = 10000000;
    /// Shard parallelism. The dedup set is the single synchronization
    /// point; the result is independent of the worker count.
    int threads = 1;
};

struct CodeClassRecord {
    Matrix canonical_generator;
    int n = 0;
    int k = 0;
    long q = 0;
    int hull_dim = 0;
    int min_d = 0;
    int dual_d = 0;
    Count aut_order = 0;
    Count orbit_size = 0;
    bool even = false; // q = 2 only
    bool self_orthogonal = false;
    bool lcd = false;
};

struct ClassificationResult {
    long q = 0;
    int n = 0;
    int k = 0;
    Count group_order;
    /// One record per equivalence class, no filters applied, stably sorted
    /// by canonical generator bytes.
    std::vector<CodeClassRecord> records;
};

enum class CodeType { linear, even, self_orthogonal, lcd };

const char* to_string(CodeType t);

/// Class counts by (type, hull dimension) for one filter choice.
struct CensusTable {
    long q = 0;
    int n = 0;
    int k = 0;
    CodeFilters filters; // provenance
    std::map<std::pair<CodeType, int>, Count> cells;

    Count type_total(CodeType t) const;
};

/// Partitions all [n, k]_q codes into equivalence classes.
ClassificationResult classify(int n, int k, long q, const ClassifyOptions& opts = {});

/// Applies filters to per-class flags; one classification serves every
/// census column.
CensusTable census_from(const ClassificationResult& classes, const CodeFilters& filters);

/// Orbit-minimal RREF generator of c's equivalence class.
Matrix canonical_form(const Code& c, const ClassifyOptions& opts = {});

/// Order of the stabilizer of c in the monomial group (orbit-stabilizer).
Count aut_order(const Code& c, const ClassifyOptions& opts = {});

struct MassCheck {
    int hull_dim = 0;
    Count class_sum;   // sum over classes of group_order / aut_order
    Count labeled_count; // closed-form A_{n,k,l,q}
    bool ok = false;
};

/// Verifies sum of group_order/|Aut| over all classes with hull dimension l
/// against the closed-form labeled count. Records must be unfiltered.
MassCheck mass_formula_check(const ClassificationResult& classes, int l);

/// B*(m, dim): filtered class counts (d >= 2, dual distance >= 2, LCD) used
/// by the length recursion below. Keys are (length, dimension).
using FilteredLcdTable = std::map<std::pair<int, int>, Count>;

/// Unfiltered LCD class count B_{n,k,0,q} from the filtered table via
/// B(n, k) = sum_{m=k+1..n} B*(m, k) + B(n-1, k-1), B(n, 0) = 1.
Count lcd_count_recursion(const FilteredLcdTable& filtered, int n, int k);

struct ChainCheck {
    std::vector<Count> class_counts; // B_{n,k,l,q} for l = 0..k, unfiltered
    bool holds = false;              // min{B0, B1} > B2 > ... > Bk
};

/// Evaluates min{B0, B1} > B2 > ... > Bk on given per-hull class counts
/// (length >= 3).
ChainCheck evaluate_chain(std::vector<Count> class_counts);

/// Classifies and evaluates the chain; the raw outcome is an observation,
/// not an assertion. Requires n >= 2k and k >= 2.
ChainCheck conjecture_check(int n, int k, long q, const ClassifyOptions& opts = {});

} // namespace hullcensus

#endif // HULLCENSUS_CLASSIFY_HPP
