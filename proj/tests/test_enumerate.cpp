#include "hullcensus/enumerate.hpp"

#include "hullcensus/classify.hpp"
#include "hullcensus/qbinom.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <set>

using namespace hullcensus;

namespace {

EnumerationTask task_for(int n, int k, long q) {
    EnumerationTask t;
    t.n = n;
    t.k = k;
    t.q = q;
    return t;
}

std::vector<long> seq(const HullSpectrum& s) {
    std::vector<long> out;
    for (const Count& c : s.counts)
        out.push_back(c.get_si());
    return out;
}

} // namespace

TEST_CASE("visit counts") {
    long visited = 0;
    CHECK(enumerate_rref(task_for(4, 2, 2), [&](const Matrix&) { ++visited; }) == 35);
    CHECK(visited == 35);

    visited = 0;
    enumerate_rref(task_for(3, 1, 2), [&](const Matrix&) { ++visited; });
    CHECK(visited == 7);

    visited = 0;
    enumerate_rref(task_for(6, 3, 3), [&](const Matrix&) { ++visited; });
    CHECK(visited == 33880);
}

TEST_CASE("every visited matrix is a distinct RREF") {
    std::set<std::string> keys;
    enumerate_rref(task_for(5, 2, 3), [&](const Matrix& m) {
        CHECK(rref(m).matrix == m);
        keys.insert(m.packed());
    });
    CHECK(keys.size() == gaussian_binomial(5, 2, 3).get_ui());
}

TEST_CASE("brute spectra of tiny parameter sets") {
    CHECK(seq(brute_spectrum(task_for(4, 2, 2))) == std::vector<long>{20, 12, 3});
    CHECK(seq(brute_spectrum(task_for(3, 1, 2))) == std::vector<long>{4, 3});
    CHECK(seq(brute_spectrum(task_for(2, 1, 3))) == std::vector<long>{4, 0});
}

TEST_CASE("brute spectrum matches the closed forms at (8, 4, 2)") {
    HullSpectrum s = brute_spectrum(task_for(8, 4, 2));
    Count total = 0;
    for (int l = 0; l <= 4; ++l) {
        CHECK(s.counts[static_cast<size_t>(l)] == product_count(8, 4, l, 2));
        total += s.counts[static_cast<size_t>(l)];
    }
    CHECK(total == 200787);
}

TEST_CASE("word engine and table engine are bit-identical") {
    for (auto [n, k] : {std::pair{6, 3}, std::pair{7, 3}, std::pair{7, 2}}) {
        EnumerationTask fast = task_for(n, k, 2);
        EnumerationTask generic = task_for(n, k, 2);
        generic.force_generic = true;
        CHECK(brute_spectrum(fast).counts == brute_spectrum(generic).counts);
    }
}

TEST_CASE("threaded runs match single-threaded runs") {
    EnumerationTask t = task_for(8, 4, 2);
    t.threads = 2;
    CHECK(brute_spectrum(t).counts == brute_spectrum(task_for(8, 4, 2)).counts);
}

TEST_CASE("debug verification path accepts correct hulls") {
    EnumerationTask t = task_for(5, 2, 3);
    t.verify_every = 1; // recheck every visit by explicit intersection
    CHECK(seq(brute_spectrum(t)) == seq(brute_spectrum(task_for(5, 2, 3))));

    EnumerationTask tb = task_for(6, 3, 2);
    tb.verify_every = 7;
    brute_spectrum(tb); // must not throw
}

TEST_CASE("shard partitions add up") {
    const long shards = shard_count(6, 3);
    std::mt19937 rng(5);
    std::vector<std::vector<long>> parts(3);
    for (long r = 0; r < shards; ++r)
        parts[static_cast<size_t>(rng() % 3)].push_back(r);

    HullSpectrum whole = brute_spectrum(task_for(6, 3, 2));
    std::vector<Count> merged(static_cast<size_t>(4), Count(0));
    Count visited = 0;
    for (const auto& ranks : parts) {
        if (ranks.empty())
            continue;
        EnumerationTask t = task_for(6, 3, 2);
        t.shard_ranks = ranks;
        HullSpectrum part = brute_spectrum(t);
        for (size_t i = 0; i < merged.size(); ++i)
            merged[i] += part.counts[i];
    }
    CHECK(merged == whole.counts);
}

TEST_CASE("guard refuses oversized enumerations with the exact count") {
    EnumerationTask t = task_for(30, 15, 2);
    CHECK_THROWS_AS(brute_spectrum(t), GuardExceededError);
    try {
        brute_spectrum(t);
    } catch (const GuardExceededError& e) {
        CHECK(e.required() == gaussian_binomial(30, 15, 2));
    }
    // raising the guard admits a formerly refused run
    EnumerationTask small = task_for(5, 2, 2);
    small.guard_limit = 10;
    CHECK_THROWS_AS(brute_spectrum(small), GuardExceededError);
    small.guard_limit = 1000;
    brute_spectrum(small);
}

TEST_CASE("filtered counts at (4, 2, 2)") {
    EnumerationTask t = task_for(4, 2, 2);
    t.filters.min_d = 2;
    t.filters.min_dual_d = 2;
    FilteredCounts fc = brute_filtered_count(t);
    // two classes survive: one LCD orbit of size 6, the self-dual orbit of size 3
    CHECK(fc.total == 9);
    Count lcd_cnt = 0, sd_cnt = 0;
    for (const auto& [cell, count] : fc.cells) {
        if (cell.hull_dim == 0)
            lcd_cnt += count;
        if (cell.hull_dim == 2)
            sd_cnt += count;
    }
    CHECK(lcd_cnt == 6);
    CHECK(sd_cnt == 3);
}

TEST_CASE("filtered LCD count matches the classification mass") {
    // labeled [6,3]_2 LCD codes with d >= 2, d-perp >= 2 equal the sum of
    // n!/|Aut| over the two surviving classes
    EnumerationTask t = task_for(6, 3, 2);
    t.filters.min_d = 2;
    t.filters.min_dual_d = 2;
    t.filters.require_lcd = true;
    FilteredCounts fc = brute_filtered_count(t);

    ClassificationResult classes = classify(6, 3, 2);
    Count mass = 0;
    for (const CodeClassRecord& rec : classes.records)
        if (rec.lcd && rec.min_d >= 2 && rec.dual_d >= 2)
            mass += exact_div(classes.group_order, rec.aut_order);
    CHECK(fc.total == mass);
}

TEST_CASE("filtered counts are independent of thread count") {
    EnumerationTask t = task_for(6, 3, 2);
    t.filters.min_d = 2;
    FilteredCounts single = brute_filtered_count(t);
    t.threads = 2;
    FilteredCounts threaded = brute_filtered_count(t);
    CHECK(single.total == threaded.total);
    CHECK(single.cells == threaded.cells);
}

TEST_CASE("self-orthogonal filter is empty above n/2") {
    EnumerationTask t = task_for(5, 3, 2);
    t.filters.require_so = true;
    CHECK(brute_filtered_count(t).total == 0);
}

TEST_CASE("checkpoints resume partial runs") {
    std::string path = "checkpoint_test.json";
    std::remove(path.c_str());

    // full run with checkpointing
    EnumerationTask t = task_for(6, 3, 2);
    t.checkpoint_path = path;
    HullSpectrum full = brute_spectrum(t);

    // drop some shards from the file, then resume
    {
        std::ifstream in(path);
        nlohmann::json doc = nlohmann::json::parse(in);
        auto& shards = doc.at("shards");
        int dropped = 0;
        for (auto it = shards.begin(); it != shards.end() && dropped < 5;) {
            it = shards.erase(it);
            ++dropped;
        }
        std::ofstream out(path, std::ios::trunc);
        out << doc.dump();
    }
    HullSpectrum resumed = brute_spectrum(t);
    CHECK(resumed.counts == full.counts);

    // a checkpoint for different parameters is rejected
    EnumerationTask other = task_for(6, 2, 2);
    other.checkpoint_path = path;
    CHECK_THROWS(brute_spectrum(other));
    std::remove(path.c_str());
}
