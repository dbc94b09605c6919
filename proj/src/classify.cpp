#include "hullcensus/classify.hpp"

#include "hullcensus/field.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hullcensus {

namespace {

void check_bounds(int n, int k, long q, const ClassifyOptions& opts) {
    if (q != 2 && q != 3)
        throw std::invalid_argument("classification supports q in {2, 3} only");
    if (k < 0 || k > n || n < 1)
        throw std::invalid_argument("bad (n, k)");
    if (!opts.allow_large) {
        int bound = q == 2 ? opts.max_n_binary : opts.max_n_ternary;
        if (n > bound)
            throw SizeBoundError("n = " + std::to_string(n) +
                                 " exceeds the orbit-scan bound for q = " + std::to_string(q) + " (" +
                                 std::to_string(bound) + "); set allow_large to override");
    }
}

Count factorial(int n) {
    Count r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Count monomial_group_order(int n, long q) {
    Count r = factorial(n);
    if (q == 3)
        r *= q_power(2, static_cast<unsigned long>(n));
    return r;
}

// Applies one monomial transform (column scalings first, then the column
// permutation: output column perm[c] = sign[c] * input column c), reduces,
// and packs the RREF. Scratch buffers are reused across group elements.
struct OrbitScanner {
    const Field& f;
    int n;
    int k;
    Matrix scratch;
    std::vector<int> perm;
    std::vector<Field::Elem> signs;

    OrbitScanner(const Field& field, int rows, int cols)
        : f(field), n(cols), k(rows), scratch(field, rows, cols),
          perm(static_cast<size_t>(cols)), signs(static_cast<size_t>(cols), 1) {}

    // Calls sink(packed_rref) for every element of the monomial group.
    template <typename Sink>
    void scan(const Matrix& gen, Sink&& sink) {
        std::iota(perm.begin(), perm.end(), 0);
        const int units = f.q() - 1;
        do {
            std::fill(signs.begin(), signs.end(), Field::Elem{1});
            while (true) {
                for (int c = 0; c < n; ++c) {
                    const int dst = perm[static_cast<size_t>(c)];
                    const Field::Elem s = signs[static_cast<size_t>(c)];
                    for (int r = 0; r < k; ++r)
                        scratch.set(r, dst, f.mul(s, gen.at(r, c)));
                }
                rref_in_place(scratch);
                sink(scratch);
                // next sign vector (odometer over units per column)
                int pos = n - 1;
                while (pos >= 0 && signs[static_cast<size_t>(pos)] == units) {
                    signs[static_cast<size_t>(pos)] = 1;
                    --pos;
                }
                if (pos < 0)
                    break;
                ++signs[static_cast<size_t>(pos)];
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
};

struct OrbitSummary {
    std::string min_key;
    std::size_t orbit_size = 0;
};

struct OrbitKeys {
    OrbitSummary summary;
    std::unordered_set<std::string> keys;
};

OrbitKeys scan_orbit(const Code& c) {
    OrbitScanner scanner(c.field(), c.k(), c.n());
    OrbitKeys out;
    scanner.scan(c.generator(), [&](const Matrix& r) {
        std::string key = r.packed();
        if (out.summary.min_key.empty() || key < out.summary.min_key)
            out.summary.min_key = key;
        out.keys.insert(std::move(key));
    });
    out.summary.orbit_size = out.keys.size();
    return out;
}

Matrix unpack(const Field& f, int rows, int cols, const std::string& key) {
    Matrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set(r, c, static_cast<Field::Elem>(key[static_cast<size_t>(r * cols + c)]));
    return m;
}

CodeClassRecord make_record(const Field& f, int n, int k, long q, const Count& group_order,
                            const OrbitSummary& orbit) {
    CodeClassRecord rec{.canonical_generator = unpack(f, k, n, orbit.min_key)};
    rec.n = n;
    rec.k = k;
    rec.q = q;
    rec.orbit_size = Count(static_cast<unsigned long>(orbit.orbit_size));
    rec.aut_order = exact_div(group_order, rec.orbit_size);
    Code rep = Code::span(rec.canonical_generator);
    rec.hull_dim = hull_dimension(rep);
    rec.min_d = k > 0 ? min_distance(rep) : 0;
    rec.dual_d = k < n ? dual_distance(rep) : 0;
    rec.even = q == 2 && is_even(rep);
    rec.self_orthogonal = k > 0 && rec.hull_dim == k;
    rec.lcd = rec.hull_dim == 0;
    return rec;
}

} // namespace

const char* to_string(CodeType t) {
    switch (t) {
    case CodeType::linear: return "linear";
    case CodeType::even: return "even";
    case CodeType::self_orthogonal: return "so";
    case CodeType::lcd: return "lcd";
    }
    return "?";
}

Count CensusTable::type_total(CodeType t) const {
    Count total = 0;
    for (const auto& [key, count] : cells)
        if (key.first == t)
            total += count;
    return total;
}

ClassificationResult classify(int n, int k, long q, const ClassifyOptions& opts) {
    check_bounds(n, k, q, opts);
    const Field& f = field_for_order(static_cast<int>(q));

    ClassificationResult result;
    result.q = q;
    result.n = n;
    result.k = k;
    result.group_order = monomial_group_order(n, q);

    // Workers race only on the dedup set; a class discovered twice in the
    // race window yields identical records that collapse in the final
    // sort-unique pass, so the outcome is independent of scheduling.
    std::unordered_set<std::string> seen;
    std::mutex seen_mu;
    EnumerationTask task;
    task.n = n;
    task.k = k;
    task.q = q;
    task.guard_limit = opts.guard_limit;
    task.threads = opts.threads;
    auto visit = [&](const Matrix& m) {
        std::string key = m.packed();
        {
            std::lock_guard<std::mutex> lock(seen_mu);
            if (seen.count(key))
                return;
        }
        OrbitKeys orbit = scan_orbit(Code::span(m));
        CodeClassRecord rec = make_record(f, n, k, q, result.group_order, orbit.summary);
        std::lock_guard<std::mutex> lock(seen_mu);
        for (const std::string& member : orbit.keys)
            seen.insert(member);
        if (seen.size() > opts.max_stored_forms)
            throw SizeBoundError("classification memory guard exceeded (stored RREFs > " +
                                 std::to_string(opts.max_stored_forms) + ")");
        result.records.push_back(std::move(rec));
    };
    if (opts.threads > 1)
        enumerate_rref_parallel(task, visit);
    else
        enumerate_rref(task, visit);

    std::sort(result.records.begin(), result.records.end(),
              [](const CodeClassRecord& a, const CodeClassRecord& b) {
                  return a.canonical_generator.packed() < b.canonical_generator.packed();
              });
    result.records.erase(std::unique(result.records.begin(), result.records.end(),
                                     [](const CodeClassRecord& a, const CodeClassRecord& b) {
                                         return a.canonical_generator == b.canonical_generator;
                                     }),
                         result.records.end());
    return result;
}

CensusTable census_from(const ClassificationResult& classes, const CodeFilters& filters) {
    CensusTable t;
    t.q = classes.q;
    t.n = classes.n;
    t.k = classes.k;
    t.filters = filters;
    for (const CodeClassRecord& rec : classes.records) {
        if (filters.min_d > 1 && rec.min_d < filters.min_d)
            continue;
        if (filters.min_dual_d > 1 && rec.dual_d < filters.min_dual_d)
            continue;
        if (filters.require_even && !rec.even)
            continue;
        if (filters.require_so && !rec.self_orthogonal)
            continue;
        if (filters.require_lcd && !rec.lcd)
            continue;
        t.cells[{CodeType::linear, rec.hull_dim}] += 1;
        if (rec.even)
            t.cells[{CodeType::even, rec.hull_dim}] += 1;
        if (rec.self_orthogonal)
            t.cells[{CodeType::self_orthogonal, rec.hull_dim}] += 1;
        if (rec.lcd)
            t.cells[{CodeType::lcd, rec.hull_dim}] += 1;
    }
    return t;
}

Matrix canonical_form(const Code& c, const ClassifyOptions& opts) {
    long q = c.field().q();
    if (q != 2 && q != 3)
        throw std::invalid_argument("canonical_form supports q in {2, 3} only");
    if (!opts.allow_large && c.n() > 10)
        throw SizeBoundError("canonical_form orbit bound is n <= 10");
    return unpack(c.field(), c.k(), c.n(), scan_orbit(c).summary.min_key);
}

Count aut_order(const Code& c, const ClassifyOptions& opts) {
    long q = c.field().q();
    if (q != 2 && q != 3)
        throw std::invalid_argument("aut_order supports q in {2, 3} only");
    if (!opts.allow_large && c.n() > 10)
        throw SizeBoundError("aut_order orbit bound is n <= 10");
    return exact_div(monomial_group_order(c.n(), q),
                     Count(static_cast<unsigned long>(scan_orbit(c).summary.orbit_size)));
}

MassCheck mass_formula_check(const ClassificationResult& classes, int l) {
    MassCheck check;
    check.hull_dim = l;
    check.class_sum = 0;
    for (const CodeClassRecord& rec : classes.records)
        if (rec.hull_dim == l)
            check.class_sum += exact_div(classes.group_order, rec.aut_order);
    check.labeled_count = sendrier_count(classes.n, classes.k, l, classes.q);
    check.ok = check.class_sum == check.labeled_count;
    return check;
}

Count lcd_count_recursion(const FilteredLcdTable& filtered, int n, int k) {
    if (k < 0 || n < k)
        throw std::invalid_argument("bad (n, k)");
    if (k == 0)
        return 1; // the zero code
    // Classes with d >= 2 strip their zero columns to a [m, k] class with
    // d, d-perp >= 2; classes with d = 1 split off a direct summand and
    // correspond to LCD [n-1, k-1] classes.
    Count total = lcd_count_recursion(filtered, n - 1, k - 1);
    for (int m = k + 1; m <= n; ++m) {
        auto it = filtered.find({m, k});
        if (it == filtered.end())
            throw std::invalid_argument("missing filtered LCD count for [" + std::to_string(m) +
                                        ", " + std::to_string(k) + "]");
        total += it->second;
    }
    return total;
}

ChainCheck evaluate_chain(std::vector<Count> class_counts) {
    if (class_counts.size() < 3)
        throw std::invalid_argument("chain needs counts for hull dimensions 0..k, k >= 2");
    ChainCheck chain;
    chain.class_counts = std::move(class_counts);
    const Count head = std::min(chain.class_counts[0], chain.class_counts[1]);
    chain.holds = head > chain.class_counts[2];
    for (size_t l = 2; l + 1 < chain.class_counts.size(); ++l)
        chain.holds = chain.holds && chain.class_counts[l] > chain.class_counts[l + 1];
    return chain;
}

ChainCheck conjecture_check(int n, int k, long q, const ClassifyOptions& opts) {
    if (k < 2 || n < 2 * k)
        throw std::invalid_argument("chain check requires n >= 2k and k >= 2");
    ClassificationResult classes = classify(n, k, q, opts);
    std::vector<Count> counts(static_cast<size_t>(k) + 1, Count(0));
    for (const CodeClassRecord& rec : classes.records)
        counts[static_cast<size_t>(rec.hull_dim)] += 1;
    return evaluate_chain(std::move(counts));
}

} // namespace hullcensus
