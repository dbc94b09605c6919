#include "hullcensus/enumerate.hpp"

#include "hullcensus/field.hpp"
#include "hullcensus/qbinom.hpp"

#include <json.hpp>

#include <atomic>
#include <limits>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hullcensus {

namespace {

using json = nlohmann::json;

struct Shard {
    long rank = 0;
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> free_cells; // row-major
};

long binom_long(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > static_cast<unsigned __int128>(std::numeric_limits<long>::max()))
            throw std::overflow_error("shard count overflows");
    }
    return static_cast<long>(r);
}

std::vector<Shard> make_shards(int n, int k, const std::optional<std::vector<long>>& restriction) {
    std::vector<bool> keep;
    if (restriction) {
        keep.assign(static_cast<size_t>(binom_long(n, k)), false);
        for (long r : *restriction) {
            if (r < 0 || r >= static_cast<long>(keep.size()))
                throw std::invalid_argument("shard rank out of range");
            keep[static_cast<size_t>(r)] = true;
        }
    }
    std::vector<Shard> shards;
    std::vector<int> comb(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        comb[static_cast<size_t>(i)] = i;
    long rank = 0;
    while (true) {
        if (!restriction || keep[static_cast<size_t>(rank)]) {
            Shard s;
            s.rank = rank;
            s.pivots = comb;
            std::vector<bool> is_pivot(static_cast<size_t>(n), false);
            for (int p : comb)
                is_pivot[static_cast<size_t>(p)] = true;
            for (int r = 0; r < k; ++r)
                for (int c = comb[static_cast<size_t>(r)] + 1; c < n; ++c)
                    if (!is_pivot[static_cast<size_t>(c)])
                        s.free_cells.emplace_back(r, c);
            shards.push_back(std::move(s));
        }
        // next lexicographic k-combination of {0..n-1}
        int i = k - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        ++rank;
    }
    return shards;
}

Count shard_volume(long q, size_t free_cells) {
    return q_power(q, static_cast<unsigned long>(free_cells));
}

// ---- generic (table-driven) engine ------------------------------------

// Walks one shard, calling visit(matrix, local_index) for every free-cell
// assignment in odometer order (last cell fastest).
template <typename Visit>
void run_shard_generic(const Field& f, int n, int k, const Shard& s, Visit&& visit) {
    Matrix m(f, k, n);
    for (int r = 0; r < k; ++r)
        m.set(r, s.pivots[static_cast<size_t>(r)], 1);
    const size_t fc = s.free_cells.size();
    std::vector<Field::Elem> digits(fc, 0);
    const int q = f.q();
    long local = 0;
    while (true) {
        visit(static_cast<const Matrix&>(m), local);
        ++local;
        size_t pos = fc;
        bool done = fc == 0;
        while (pos > 0) {
            --pos;
            auto [r, c] = s.free_cells[pos];
            if (++digits[pos] < q) {
                m.set(r, c, digits[pos]);
                break;
            }
            digits[pos] = 0;
            m.set(r, c, 0);
            if (pos == 0)
                done = true;
        }
        if (done)
            break;
    }
}

// ---- GF(2) word engine --------------------------------------------------

struct BinaryCode {
    std::uint64_t rows[16];
    int k = 0;
    int n = 0;
};

int binary_hull_dim(const BinaryCode& bc) {
    // Gram matrix row masks, then GF(2) rank by basis reduction.
    std::uint32_t g[16];
    for (int i = 0; i < bc.k; ++i) {
        std::uint32_t mask = 0;
        for (int j = 0; j < bc.k; ++j)
            mask |= static_cast<std::uint32_t>(__builtin_popcountll(bc.rows[i] & bc.rows[j]) & 1) << j;
        g[i] = mask;
    }
    std::uint32_t basis[16] = {0};
    int rank = 0;
    for (int i = 0; i < bc.k; ++i) {
        std::uint32_t v = g[i];
        while (v) {
            int b = __builtin_ctz(v);
            if (basis[b]) {
                v ^= basis[b];
            } else {
                basis[b] = v;
                ++rank;
                break;
            }
        }
    }
    return bc.k - rank;
}

template <typename Visit>
void run_shard_binary(int n, int k, const Shard& s, Visit&& visit) {
    BinaryCode bc;
    bc.k = k;
    bc.n = n;
    for (int r = 0; r < k; ++r)
        bc.rows[r] = std::uint64_t{1} << s.pivots[static_cast<size_t>(r)];
    const size_t fc = s.free_cells.size();
    std::vector<std::uint8_t> digits(fc, 0);
    long local = 0;
    while (true) {
        visit(static_cast<const BinaryCode&>(bc), local);
        ++local;
        size_t pos = fc;
        bool done = fc == 0;
        while (pos > 0) {
            --pos;
            auto [r, c] = s.free_cells[pos];
            const std::uint64_t bit = std::uint64_t{1} << c;
            if (digits[pos] == 0) {
                digits[pos] = 1;
                bc.rows[r] |= bit;
                break;
            }
            digits[pos] = 0;
            bc.rows[r] &= ~bit;
            if (pos == 0)
                done = true;
        }
        if (done)
            break;
    }
}

Matrix binary_to_matrix(const Field& f, const BinaryCode& bc) {
    Matrix m(f, bc.k, bc.n);
    for (int r = 0; r < bc.k; ++r)
        for (int c = 0; c < bc.n; ++c)
            if (bc.rows[r] >> c & 1)
                m.set(r, c, 1);
    return m;
}

// ---- hull / predicate evaluation ---------------------------------------

int generic_hull_dim(const Matrix& m) {
    Matrix g = gram(m);
    return m.rows() - rref_in_place(g);
}

void verify_hull(const Matrix& m, int hull) {
    Code c = Code::span(m);
    int check = hull_dimension_by_intersection(c);
    if (check != hull)
        throw std::logic_error("hull dimension mismatch: Gram rank says " + std::to_string(hull) +
                               ", intersection says " + std::to_string(check));
}

// ---- checkpoints --------------------------------------------------------

struct Checkpoint {
    std::map<long, std::vector<Count>> shard_tallies;
};

Checkpoint load_checkpoint(const std::string& path, int n, int k, long q, int width) {
    Checkpoint cp;
    std::ifstream in(path);
    if (!in.good())
        return cp;
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded())
        throw std::runtime_error("unreadable checkpoint file: " + path);
    if (doc.value("n", -1) != n || doc.value("k", -1) != k || doc.value("q", -1L) != q)
        throw std::runtime_error("checkpoint " + path + " belongs to different parameters");
    for (auto& [key, tally] : doc.at("shards").items()) {
        std::vector<Count> counts;
        for (const auto& s : tally)
            counts.emplace_back(s.get<std::string>());
        if (static_cast<int>(counts.size()) != width)
            throw std::runtime_error("checkpoint tally width mismatch");
        cp.shard_tallies[std::stol(key)] = std::move(counts);
    }
    return cp;
}

void save_checkpoint(const std::string& path, int n, int k, long q, const Checkpoint& cp) {
    json doc;
    doc["schema_version"] = 1;
    doc["n"] = n;
    doc["k"] = k;
    doc["q"] = q;
    json shards = json::object();
    for (const auto& [rank2, tally] : cp.shard_tallies) {
        json arr = json::array();
        for (const Count& c : tally)
            arr.push_back(c.get_str());
        shards[std::to_string(rank2)] = std::move(arr);
    }
    doc["shards"] = std::move(shards);
    std::ofstream out(path, std::ios::trunc);
    out << doc.dump();
    if (!out.good())
        throw std::runtime_error("cannot write checkpoint: " + path);
}

void check_guard(const EnumerationTask& task) {
    Count total = gaussian_binomial(task.n, task.k, task.q);
    if (total > task.guard_limit)
        throw GuardExceededError(total, task.guard_limit);
}

// Runs `body(shard)` over all shards on task.threads threads.
void parallel_over_shards(const std::vector<Shard>& shards, int threads,
                          const std::function<void(const Shard&)>& body) {
    if (threads <= 1 || shards.size() <= 1) {
        for (const Shard& s : shards)
            body(s);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= shards.size())
                return;
            try {
                body(shards[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure)
                    failure = std::current_exception();
                return;
            }
        }
    };
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace

long shard_count(int n, int k) {
    return binom_long(n, k);
}

Count enumerate_rref(const EnumerationTask& task,
                     const std::function<void(const Matrix&)>& visitor) {
    check_guard(task);
    const Field& f = field_for_order(static_cast<int>(task.q));
    auto shards = make_shards(task.n, task.k, task.shard_ranks);
    Count visited = 0;
    for (const Shard& s : shards) {
        run_shard_generic(f, task.n, task.k, s,
                          [&](const Matrix& m, long) { visitor(m); });
        visited += shard_volume(task.q, s.free_cells.size());
    }
    return visited;
}

Count enumerate_rref_parallel(const EnumerationTask& task,
                              const std::function<void(const Matrix&)>& visitor) {
    check_guard(task);
    const Field& f = field_for_order(static_cast<int>(task.q));
    auto shards = make_shards(task.n, task.k, task.shard_ranks);
    parallel_over_shards(shards, task.threads, [&](const Shard& s) {
        run_shard_generic(f, task.n, task.k, s, [&](const Matrix& m, long) { visitor(m); });
    });
    Count visited = 0;
    for (const Shard& s : shards)
        visited += shard_volume(task.q, s.free_cells.size());
    return visited;
}

HullSpectrum brute_spectrum(const EnumerationTask& task) {
    check_guard(task);
    const Field& f = field_for_order(static_cast<int>(task.q));
    auto shards = make_shards(task.n, task.k, task.shard_ranks);
    const int width = task.k + 1;

    Checkpoint cp;
    std::mutex cp_mu;
    if (!task.checkpoint_path.empty())
        cp = load_checkpoint(task.checkpoint_path, task.n, task.k, task.q, width);

    const bool use_binary = task.q == 2 && task.n <= 62 && task.k <= 16 && !task.force_generic;

    auto run_one = [&](const Shard& s) {
        {
            std::lock_guard<std::mutex> lock(cp_mu);
            if (cp.shard_tallies.count(s.rank))
                return; // already done in a previous run
        }
        std::vector<std::uint64_t> tally(static_cast<size_t>(width), 0);
        if (use_binary) {
            run_shard_binary(task.n, task.k, s, [&](const BinaryCode& bc, long local) {
                int hull = binary_hull_dim(bc);
                ++tally[static_cast<size_t>(hull)];
                if (task.verify_every > 0 && local % task.verify_every == 0)
                    verify_hull(binary_to_matrix(f, bc), hull);
            });
        } else {
            run_shard_generic(f, task.n, task.k, s, [&](const Matrix& m, long local) {
                int hull = generic_hull_dim(m);
                ++tally[static_cast<size_t>(hull)];
                if (task.verify_every > 0 && local % task.verify_every == 0)
                    verify_hull(m, hull);
            });
        }
        std::vector<Count> counts(tally.begin(), tally.end());
        std::lock_guard<std::mutex> lock(cp_mu);
        cp.shard_tallies[s.rank] = std::move(counts);
        if (!task.checkpoint_path.empty())
            save_checkpoint(task.checkpoint_path, task.n, task.k, task.q, cp);
    };

    parallel_over_shards(shards, task.threads, run_one);

    HullSpectrum spec;
    spec.q = task.q;
    spec.n = task.n;
    spec.k = task.k;
    spec.method = SpectrumMethod::brute_force;
    spec.counts.assign(static_cast<size_t>(width), Count(0));
    for (const auto& [rank2, tally] : cp.shard_tallies)
        for (int i = 0; i < width; ++i)
            spec.counts[static_cast<size_t>(i)] += tally[static_cast<size_t>(i)];
    if (!task.shard_ranks) {
        Count sum = 0;
        for (const Count& c : spec.counts)
            sum += c;
        if (sum != gaussian_binomial(task.n, task.k, task.q))
            throw std::logic_error("enumeration visit count disagrees with the Gaussian binomial");
    }
    return spec;
}

FilteredCounts brute_filtered_count(const EnumerationTask& task) {
    check_guard(task);
    const Field& f = field_for_order(static_cast<int>(task.q));
    if (task.filters.require_even && task.q != 2)
        throw std::invalid_argument("evenness filter requires q = 2");
    auto shards = make_shards(task.n, task.k, task.shard_ranks);

    std::mutex merge_mu;
    FilteredCounts result;

    auto classify_and_tally = [&](const Matrix& m, std::map<TypeCell, Count>& cells, Count& total) {
        const CodeFilters& ft = task.filters;
        TypeCell cell;
        cell.hull_dim = generic_hull_dim(m);
        cell.self_orthogonal = cell.hull_dim == task.k && task.k > 0;
        cell.lcd = cell.hull_dim == 0;
        if (task.q == 2) {
            cell.even = true;
            for (int r = 0; r < m.rows() && cell.even; ++r) {
                int wt = 0;
                for (int c = 0; c < m.cols(); ++c)
                    wt += m.at(r, c) != 0;
                cell.even = wt % 2 == 0;
            }
        }
        if (ft.require_even && !cell.even)
            return;
        if (ft.require_so && !cell.self_orthogonal)
            return;
        if (ft.require_lcd && !cell.lcd)
            return;
        if (ft.min_dual_d >= 2 && has_zero_column(m))
            return;
        if (ft.min_d > 1 || ft.min_dual_d > 2) {
            Code c = Code::span(m);
            if (ft.min_d > 1 && min_distance(c) < ft.min_d)
                return;
            if (ft.min_dual_d > 2 && dual_distance(c) < ft.min_dual_d)
                return;
        }
        cells[cell] += 1;
        total += 1;
    };

    auto run_one = [&](const Shard& s) {
        std::map<TypeCell, Count> cells;
        Count total = 0;
        run_shard_generic(f, task.n, task.k, s,
                          [&](const Matrix& m, long) { classify_and_tally(m, cells, total); });
        std::lock_guard<std::mutex> lock(merge_mu);
        for (auto& [cell, count] : cells)
            result.cells[cell] += count;
        result.total += total;
    };

    parallel_over_shards(shards, task.threads, run_one);
    return result;
}

} // namespace hullcensus
