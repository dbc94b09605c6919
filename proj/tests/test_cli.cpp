#include "hullcensus/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <vector>

using namespace hullcensus;
using nlohmann::json;

namespace {

json run_json(const SpectrumArgs& args, int expect_code = kExitOk) {
    std::ostringstream out, err;
    SpectrumArgs a = args;
    a.format = OutputFormat::json;
    int code = cmd_spectrum(a, out, err);
    REQUIRE(code == expect_code);
    return json::parse(out.str());
}

struct CacheEnvGuard {
    CacheEnvGuard(const std::string& dir) { setenv("HULLCENSUS_CACHE", dir.c_str(), 1); }
    ~CacheEnvGuard() { setenv("HULLCENSUS_CACHE", "", 1); }
};

} // namespace

TEST_CASE("spectrum documents carry counts as decimal strings") {
    SpectrumArgs args;
    args.q = 3;
    args.n = 8;
    args.k = 4;
    json doc = run_json(args);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "spectrum");
    CHECK(doc["results"]["counts"] ==
          json::array({"48958182", "23587200", "3276000", "89600", "2240"}));
    CHECK(doc["results"]["counts"][0].is_string());
    CHECK(doc["provenance"]["method"] == "product_odd");
    CHECK(doc.contains("canonical_hash"));
    CHECK(doc.contains("timing"));
}

TEST_CASE("identical inputs yield identical canonical hashes") {
    SpectrumArgs args;
    args.q = 2;
    args.n = 10;
    args.k = 5;
    json a = run_json(args);
    json b = run_json(args);
    CHECK(a["canonical_hash"] == b["canonical_hash"]);
    // the full documents differ only in timing
    a.erase("timing");
    b.erase("timing");
    CHECK(a == b);
}

TEST_CASE("spectrum exit codes") {
    std::ostringstream out, err;
    SpectrumArgs bad;
    bad.q = 3;
    bad.n = 4;
    bad.k = 4; // k must be <= n-1
    CHECK(cmd_spectrum(bad, out, err) == kExitUsage);

    SpectrumArgs guarded;
    guarded.q = 2;
    guarded.n = 30;
    guarded.k = 15;
    guarded.method = "brute";
    guarded.no_cache = true;
    CHECK(cmd_spectrum(guarded, out, err) == kExitGuard);
    CHECK(err.str().find("guard") != std::string::npos);

    SpectrumArgs unknown;
    unknown.q = 2;
    unknown.n = 4;
    unknown.k = 2;
    unknown.method = "magic";
    CHECK(cmd_spectrum(unknown, out, err) == kExitUsage);
}

TEST_CASE("spectrum csv has the fixed column set") {
    SpectrumArgs args;
    args.q = 2;
    args.n = 4;
    args.k = 2;
    args.format = OutputFormat::csv;
    std::ostringstream out, err;
    REQUIRE(cmd_spectrum(args, out, err) == kExitOk);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "schema_version,q,n,k,method,l,count");
    std::string row;
    std::getline(lines, row);
    CHECK(row == "1,2,4,2,product_even,0,20");
}

TEST_CASE("ratios command") {
    RatiosArgs args;
    args.q = 3;
    args.n = 9;
    args.k = 4;
    args.format = OutputFormat::json;
    std::ostringstream out, err;
    REQUIRE(cmd_ratios(args, out, err) == kExitOk);
    json doc = json::parse(out.str());
    auto rows = doc["results"]["rows"];
    REQUIRE(rows.size() == 4);
    CHECK(rows[0]["ratio"] == "2.025");
    CHECK(rows[1]["ratio"] == "8.1");
    CHECK(rows[2]["ratio"] == "29.25");
    CHECK(rows[3]["ratio"] == "90");
    CHECK(rows[3]["mu"] == "90");

    RatiosArgs grid;
    grid.q = 5;
    grid.verify_grid = true;
    grid.max_n = 10;
    std::ostringstream out2, err2;
    CHECK(cmd_ratios(grid, out2, err2) == kExitOk);

    RatiosArgs degenerate;
    degenerate.q = 3;
    degenerate.n = 4;
    degenerate.k = 3; // k > n/2
    std::ostringstream out3, err3;
    CHECK(cmd_ratios(degenerate, out3, err3) == kExitUsage);
}

TEST_CASE("classify command with mass check") {
    ClassifyArgs args;
    args.q = 2;
    args.n = 4;
    args.k = 2;
    args.mass_check = true;
    args.per_class = true;
    args.no_cache = true;
    args.format = OutputFormat::json;
    std::ostringstream out, err;
    REQUIRE(cmd_classify(args, out, err) == kExitOk);
    json doc = json::parse(out.str());
    CHECK(doc["results"]["class_count"] == 6);
    CHECK(doc["results"]["census_unfiltered"]["cells"]["linear"]["0"] == "4");
    CHECK(doc["results"]["census_unfiltered"]["cells"]["linear"]["1"] == "1");
    CHECK(doc["results"]["census_unfiltered"]["cells"]["linear"]["2"] == "1");
    for (const auto& chk : doc["results"]["mass_check"])
        CHECK(chk["ok"] == true);
    CHECK(doc["results"]["classes"].size() == 6);

    ClassifyArgs bounds;
    bounds.q = 3;
    bounds.n = 9;
    bounds.k = 3;
    bounds.no_cache = true;
    std::ostringstream out2, err2;
    CHECK(cmd_classify(bounds, out2, err2) == kExitGuard);

    ClassifyArgs badq;
    badq.q = 5;
    badq.n = 4;
    badq.k = 2;
    badq.no_cache = true;
    std::ostringstream out3, err3;
    CHECK(cmd_classify(badq, out3, err3) == kExitUsage);
}

TEST_CASE("classify csv per-class export is stable and well-formed") {
    ClassifyArgs args;
    args.q = 2;
    args.n = 4;
    args.k = 2;
    args.per_class = true;
    args.no_cache = true;
    args.format = OutputFormat::csv;
    std::ostringstream out, err;
    REQUIRE(cmd_classify(args, out, err) == kExitOk);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "schema_version,n,k,q,hull_dim,min_d,dual_d,even,so,lcd,aut_order,canonical");
    std::vector<std::string> canon;
    std::string row;
    while (std::getline(lines, row)) {
        auto pos = row.rfind(',');
        canon.push_back(row.substr(pos + 1));
        CHECK(canon.back().size() == 8); // 2x4 generator, one hex digit per entry
    }
    CHECK(canon.size() == 6);
    CHECK(std::is_sorted(canon.begin(), canon.end()));
}

TEST_CASE("crosscheck command") {
    CrosscheckArgs args;
    args.q = 4;
    args.max_n = 8;
    args.format = OutputFormat::json;
    std::ostringstream out, err;
    REQUIRE(cmd_crosscheck(args, out, err) == kExitOk);
    json doc = json::parse(out.str());
    CHECK(doc["results"]["ok"] == true);
    CHECK(doc["results"]["formula_tuples_checked"].get<long>() > 0);

    CrosscheckArgs brute;
    brute.q = 3;
    brute.max_n = 5;
    brute.with_brute = true;
    std::ostringstream out2, err2;
    CHECK(cmd_crosscheck(brute, out2, err2) == kExitOk);
}

TEST_CASE("the result cache is a pure memo") {
    std::string dir = (std::filesystem::temp_directory_path() / "hullcensus_cache_test").string();
    std::filesystem::remove_all(dir);
    CacheEnvGuard guard(dir);

    ClassifyArgs args;
    args.q = 2;
    args.n = 5;
    args.k = 2;
    args.format = OutputFormat::json;

    std::ostringstream out1, err1;
    REQUIRE(cmd_classify(args, out1, err1) == kExitOk);
    json first = json::parse(out1.str());
    CHECK(first["timing"]["cache_hit"] == false);

    std::ostringstream out2, err2;
    REQUIRE(cmd_classify(args, out2, err2) == kExitOk);
    json second = json::parse(out2.str());
    CHECK(second["timing"]["cache_hit"] == true);
    CHECK(first["canonical_hash"] == second["canonical_hash"]);
    first.erase("timing");
    second.erase("timing");
    CHECK(first == second);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
    CacheEnvGuard guard("/tmp/hc_cache_xyz");
    CHECK(cache_directory() == "/tmp/hc_cache_xyz");
    setenv("HULLCENSUS_CACHE", "", 1);
    CHECK(cache_directory() == ""); // empty disables caching
}
