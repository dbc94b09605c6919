#include "hullcensus/commands.hpp"

#include "hullcensus/classify.hpp"
#include "hullcensus/enumerate.hpp"
#include "hullcensus/qbinom.hpp"
#include "hullcensus/ratio.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hullcensus {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Maps exceptions onto the documented exit codes.
int run_guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const GuardExceededError& e) {
        err << "guard refusal: " << e.what() << "\n";
        return kExitGuard;
    } catch (const SizeBoundError& e) {
        err << "guard refusal: " << e.what() << "\n";
        return kExitGuard;
    } catch (const DegenerateRatioError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IntegralityError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitMismatch;
    }
}

// ---- result cache (a pure memo; correctness never depends on it) --------

std::string cache_key_path(const std::string& key) {
    std::string dir = cache_directory();
    if (dir.empty())
        return {};
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(key)));
    return dir + "/" + buf + ".json";
}

bool cache_load(const std::string& key, json& results) {
    std::string path = cache_key_path(key);
    if (path.empty())
        return false;
    std::ifstream in(path);
    if (!in.good())
        return false;
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || doc.value("key", "") != key)
        return false;
    results = doc.at("results");
    return true;
}

void cache_store(const std::string& key, const json& results) {
    std::string path = cache_key_path(key);
    if (path.empty())
        return;
    std::error_code ec;
    std::filesystem::create_directories(cache_directory(), ec);
    if (ec)
        return;
    json doc;
    doc["key"] = key;
    doc["results"] = results;
    std::ofstream out(path, std::ios::trunc);
    out << doc.dump();
}

void emit_json(const OutputDocument& doc, std::ostream& out) {
    out << doc.to_json().dump(2) << "\n";
}

std::string ratio_field(const Ratio& r) {
    return Count(r.get_num()).get_str() + "/" + Count(r.get_den()).get_str();
}

// ---- spectrum ------------------------------------------------------------

HullSpectrum compute_spectrum(const SpectrumArgs& args) {
    if (args.method == "sendrier")
        return spectrum(args.n, args.k, args.q, SpectrumMethod::sendrier);
    if (args.method == "product" || args.method == "auto")
        return spectrum(args.n, args.k, args.q,
                        args.q % 2 == 0 ? SpectrumMethod::product_even : SpectrumMethod::product_odd);
    if (args.method == "brute") {
        EnumerationTask task;
        task.n = args.n;
        task.k = args.k;
        task.q = args.q;
        task.threads = args.threads;
        task.guard_limit = args.guard_limit;
        task.checkpoint_path = args.checkpoint;
        task.force_generic = args.force_generic;
        return brute_spectrum(task);
    }
    throw std::invalid_argument("unknown method '" + args.method +
                                "' (expected auto, sendrier, product or brute)");
}

} // namespace

std::string cache_directory() {
    if (const char* env = std::getenv("HULLCENSUS_CACHE"))
        return *env ? std::string(env) : std::string();
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::string(xdg) + "/hullcensus";
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.cache/hullcensus";
    return {};
}

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        if (args.method == "brute") {
            // An overridden guard still announces the projected volume.
            Count projected = gaussian_binomial(args.n, args.k, args.q);
            if (projected > Count(1000000000))
                err << "note: enumeration will visit " << projected.get_str() << " subspaces\n";
        }
        auto start = Clock::now();
        OutputDocument doc;
        doc.command = "spectrum";
        doc.parameters = {{"q", args.q},
                          {"n", args.n},
                          {"k", args.k},
                          {"method", args.method}};

        std::string method_used;
        json counts = json::array();
        bool hit = false;
        std::string key;
        if (args.method == "brute" && !args.no_cache) {
            key = "spectrum|q=" + std::to_string(args.q) + "|n=" + std::to_string(args.n) +
                  "|k=" + std::to_string(args.k) + "|schema=1";
            json cached;
            if (cache_load(key, cached)) {
                hit = true;
                counts = cached.at("counts");
                method_used = cached.at("method").get<std::string>();
            }
        }
        if (!hit) {
            HullSpectrum s = compute_spectrum(args);
            method_used = to_string(s.method);
            for (const Count& c : s.counts)
                counts.push_back(c.get_str());
            if (!key.empty())
                cache_store(key, json{{"counts", counts}, {"method", method_used}});
        }

        doc.results["counts"] = counts;
        doc.results["total"] = gaussian_binomial(args.n, args.k, args.q).get_str();
        doc.provenance = {{"method", method_used},
                          {"partition_checked", true}};
        doc.seconds = seconds_since(start);
        doc.cache_hit = hit;

        switch (args.format) {
        case OutputFormat::json:
            emit_json(doc, out);
            break;
        case OutputFormat::csv:
            out << "schema_version,q,n,k,method,l,count\n";
            for (size_t l = 0; l < counts.size(); ++l)
                out << 1 << ',' << args.q << ',' << args.n << ',' << args.k << ',' << method_used
                    << ',' << l << ',' << counts[l].get<std::string>() << "\n";
            break;
        case OutputFormat::table:
            out << "hull spectrum  q=" << args.q << " n=" << args.n << " k=" << args.k
                << "  method=" << method_used << "\n";
            out << "counts:";
            for (const auto& c : counts)
                out << ' ' << c.get<std::string>();
            out << "\ntotal codes: " << doc.results["total"].get<std::string>() << "\n";
            break;
        }
        return kExitOk;
    });
}

int cmd_ratios(const RatiosArgs& args, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        auto start = Clock::now();
        OutputDocument doc;
        doc.command = "ratios";

        if (args.verify_grid) {
            doc.parameters = {{"q", args.q}, {"max_n", args.max_n}, {"verify_grid", true}};
            VerificationResult res = verify_ratio_bounds({{args.q}, args.max_n});
            doc.results["tuples_checked"] = res.reports.size();
            doc.results["violations"] = json::array();
            for (const RatioReport& v : res.violations)
                doc.results["violations"].push_back({{"q", v.q}, {"n", v.n}, {"k", v.k}, {"l", v.l}});
            doc.results["ok"] = res.violations.empty();
            doc.provenance = {{"method", "closed-form ratio verification"}};
            doc.seconds = seconds_since(start);
            if (args.format == OutputFormat::json)
                emit_json(doc, out);
            else
                out << "checked " << res.reports.size() << " tuples (q=" << args.q
                    << ", n <= " << args.max_n << "): "
                    << (res.violations.empty() ? "all bounds hold"
                                               : std::to_string(res.violations.size()) + " violations")
                    << "\n";
            return res.violations.empty() ? kExitOk : kExitMismatch;
        }

        doc.parameters = {{"q", args.q}, {"n", args.n}, {"k", args.k}};
        json rows = json::array();
        std::vector<RatioReport> reports;
        for (int l = 0; l < args.k; ++l) {
            RatioReport rep = ratio_report(args.n, args.k, l, args.q);
            json row = {{"l", l},
                        {"bound", rep.bound.get_str()},
                        {"half_bound", rep.half_bound},
                        {"tight", rep.tight},
                        {"degenerate", rep.degenerate},
                        {"branch", rep.branch}};
            if (rep.ratio) {
                row["ratio"] = ratio_display(*rep.ratio);
                row["ratio_exact"] = ratio_field(*rep.ratio);
            }
            if (rep.alpha)
                row["alpha"] = ratio_field(*rep.alpha);
            if (rep.mu)
                row["mu"] = rep.mu->get_str();
            rows.push_back(std::move(row));
            reports.push_back(std::move(rep));
        }
        doc.results["rows"] = rows;
        doc.provenance = {{"method", "product formula ratios"},
                          {"ratio_rendering", "6 significant digits, round half even (display only)"}};
        doc.seconds = seconds_since(start);

        switch (args.format) {
        case OutputFormat::json:
            emit_json(doc, out);
            break;
        case OutputFormat::csv:
            out << "schema_version,q,n,k,l,ratio,alpha,mu,bound,half_bound,tight,degenerate,branch\n";
            for (const auto& row : rows)
                out << 1 << ',' << args.q << ',' << args.n << ',' << args.k << ','
                    << row["l"].get<size_t>() << ',' << row.value("ratio", "") << ','
                    << row.value("alpha", "") << ',' << row.value("mu", "") << ','
                    << row["bound"].get<std::string>() << ',' << row["half_bound"].get<bool>() << ','
                    << row["tight"].get<bool>() << ',' << row["degenerate"].get<bool>() << ",\""
                    << row["branch"].get<std::string>() << "\"\n";
            break;
        case OutputFormat::table: {
            out << "consecutive ratios  q=" << args.q << " n=" << args.n << " k=" << args.k << "\n";
            out << std::left << std::setw(4) << "l" << std::setw(12) << "ratio" << std::setw(14)
                << "alpha" << std::setw(12) << "mu" << std::setw(12) << "bound"
                << "branch\n";
            for (const RatioReport& rep : reports) {
                out << std::left << std::setw(4) << rep.l << std::setw(12)
                    << (rep.ratio ? ratio_display(*rep.ratio) : "-") << std::setw(14)
                    << (rep.alpha ? ratio_field(*rep.alpha) : "-") << std::setw(12)
                    << (rep.mu ? rep.mu->get_str() : "-") << std::setw(12) << rep.bound.get_str()
                    << rep.branch << (rep.tight ? " [tight]" : "") << "\n";
            }
            break;
        }
        }
        return kExitOk;
    });
}

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        auto start = Clock::now();
        OutputDocument doc;
        doc.command = "classify";
        doc.parameters = {{"q", args.q},       {"n", args.n},
                          {"k", args.k},       {"min_d", args.min_d},
                          {"min_dd", args.min_dual_d}, {"mass_check", args.mass_check},
                          {"per_class", args.per_class}};

        ClassifyOptions opts;
        opts.allow_large = args.allow_large;
        opts.threads = args.threads;

        // Cache the expensive unfiltered classification; censuses and mass
        // checks are derived views.
        json classes_json;
        bool hit = false;
        std::string key = "classify|q=" + std::to_string(args.q) + "|n=" + std::to_string(args.n) +
                          "|k=" + std::to_string(args.k) + "|schema=1";
        if (!args.no_cache) {
            json cached;
            if (cache_load(key, cached)) {
                classes_json = cached;
                hit = true;
            }
        }

        ClassificationResult classes;
        if (!hit) {
            classes = classify(args.n, args.k, args.q, opts);
            classes_json["group_order"] = classes.group_order.get_str();
            classes_json["records"] = json::array();
            for (const CodeClassRecord& rec : classes.records)
                classes_json["records"].push_back({{"canonical", rec.canonical_generator.hex_packed()},
                                                   {"hull_dim", rec.hull_dim},
                                                   {"min_d", rec.min_d},
                                                   {"dual_d", rec.dual_d},
                                                   {"even", rec.even},
                                                   {"so", rec.self_orthogonal},
                                                   {"lcd", rec.lcd},
                                                   {"aut_order", rec.aut_order.get_str()},
                                                   {"orbit_size", rec.orbit_size.get_str()}});
            if (!args.no_cache)
                cache_store(key, classes_json);
        } else {
            // Rebuild records from the cache.
            classes.q = args.q;
            classes.n = args.n;
            classes.k = args.k;
            classes.group_order = Count(classes_json.at("group_order").get<std::string>());
            const Field& f = field_for_order(static_cast<int>(args.q));
            for (const auto& r : classes_json.at("records")) {
                Matrix gen(f, args.k, args.n);
                const std::string hex = r.at("canonical").get<std::string>();
                for (int i = 0; i < args.k * args.n; ++i) {
                    char c = hex[static_cast<size_t>(i)];
                    gen.entries()[static_cast<size_t>(i)] =
                        static_cast<Field::Elem>(c <= '9' ? c - '0' : c - 'a' + 10);
                }
                CodeClassRecord rec{.canonical_generator = gen,
                                    .n = args.n,
                                    .k = args.k,
                                    .q = args.q,
                                    .hull_dim = r.at("hull_dim").get<int>(),
                                    .min_d = r.at("min_d").get<int>(),
                                    .dual_d = r.at("dual_d").get<int>(),
                                    .aut_order = Count(r.at("aut_order").get<std::string>()),
                                    .orbit_size = Count(r.at("orbit_size").get<std::string>()),
                                    .even = r.at("even").get<bool>(),
                                    .self_orthogonal = r.at("so").get<bool>(),
                                    .lcd = r.at("lcd").get<bool>()};
                classes.records.push_back(std::move(rec));
            }
        }

        CodeFilters filters;
        filters.min_d = args.min_d;
        filters.min_dual_d = args.min_dual_d;
        CensusTable census = census_from(classes, filters);
        CensusTable unfiltered = census_from(classes, CodeFilters{});

        auto census_json = [](const CensusTable& t) {
            json cells = json::object();
            for (const auto& [cell_key, count] : t.cells) {
                std::string type = to_string(cell_key.first);
                cells[type][std::to_string(cell_key.second)] = count.get_str();
            }
            json totals = json::object();
            for (CodeType ct : {CodeType::linear, CodeType::even, CodeType::self_orthogonal, CodeType::lcd})
                totals[to_string(ct)] = t.type_total(ct).get_str();
            return json{{"cells", cells}, {"totals", totals}};
        };
        doc.results["census"] = census_json(census);
        doc.results["census_unfiltered"] = census_json(unfiltered);
        doc.results["class_count"] = classes.records.size();

        bool mass_ok = true;
        if (args.mass_check) {
            json checks = json::array();
            for (int l = 0; l <= args.k; ++l) {
                MassCheck mc = mass_formula_check(classes, l);
                mass_ok = mass_ok && mc.ok;
                checks.push_back({{"l", l},
                                  {"class_sum", mc.class_sum.get_str()},
                                  {"labeled_count", mc.labeled_count.get_str()},
                                  {"ok", mc.ok}});
            }
            doc.results["mass_check"] = checks;
        }
        if (args.per_class)
            doc.results["classes"] = classes_json.at("records");

        // Unfiltered class-count chain, reported (never asserted) when the
        // parameters admit it.
        if (args.k >= 2 && args.n >= 2 * args.k) {
            std::vector<Count> counts(static_cast<size_t>(args.k) + 1, Count(0));
            for (const CodeClassRecord& rec : classes.records)
                counts[static_cast<size_t>(rec.hull_dim)] += 1;
            ChainCheck chain = evaluate_chain(std::move(counts));
            json chain_json;
            chain_json["class_counts"] = json::array();
            for (const Count& v : chain.class_counts)
                chain_json["class_counts"].push_back(v.get_str());
            chain_json["decreasing_chain_holds"] = chain.holds;
            doc.results["class_count_chain"] = chain_json;
        }

        doc.provenance = {{"method", "orbit-scan classification"},
                          {"group", args.q == 2 ? "coordinate permutations"
                                                : "monomial (signs, then permutation)"},
                          {"group_order", classes.group_order.get_str()}};
        doc.seconds = seconds_since(start);
        doc.cache_hit = hit;

        switch (args.format) {
        case OutputFormat::json:
            emit_json(doc, out);
            break;
        case OutputFormat::csv:
            if (args.per_class) {
                out << "schema_version,n,k,q,hull_dim,min_d,dual_d,even,so,lcd,aut_order,canonical\n";
                for (const CodeClassRecord& rec : classes.records)
                    out << 1 << ',' << rec.n << ',' << rec.k << ',' << rec.q << ',' << rec.hull_dim
                        << ',' << rec.min_d << ',' << rec.dual_d << ',' << rec.even << ','
                        << rec.self_orthogonal << ',' << rec.lcd << ',' << rec.aut_order.get_str()
                        << ',' << rec.canonical_generator.hex_packed() << "\n";
            } else {
                out << "schema_version,q,n,k,min_d,min_dd,type,hull_dim,classes\n";
                for (const auto& [cell_key, count] : census.cells)
                    out << 1 << ',' << args.q << ',' << args.n << ',' << args.k << ',' << args.min_d
                        << ',' << args.min_dual_d << ',' << to_string(cell_key.first) << ','
                        << cell_key.second << ',' << count.get_str() << "\n";
            }
            break;
        case OutputFormat::table: {
            out << "classification  q=" << args.q << " n=" << args.n << " k=" << args.k;
            if (filters.any())
                out << "  (d >= " << args.min_d << ", d-perp >= " << args.min_dual_d << ")";
            out << "\n";
            out << "classes: " << classes.records.size() << " (unfiltered)\n";
            for (CodeType ct : {CodeType::linear, CodeType::even, CodeType::self_orthogonal, CodeType::lcd}) {
                if (args.q != 2 && ct == CodeType::even)
                    continue;
                out << std::left << std::setw(8) << to_string(ct) << census.type_total(ct).get_str();
                out << "  (by hull dim:";
                for (int l = 0; l <= args.k; ++l) {
                    auto it = census.cells.find({ct, l});
                    out << ' ' << (it == census.cells.end() ? "0" : it->second.get_str());
                }
                out << ")\n";
            }
            if (args.mass_check)
                for (const auto& chk : doc.results["mass_check"])
                    out << "mass check l=" << chk["l"].get<int>() << ": sum "
                        << chk["class_sum"].get<std::string>() << " vs "
                        << chk["labeled_count"].get<std::string>()
                        << (chk["ok"].get<bool>() ? "  ok" : "  MISMATCH") << "\n";
            if (args.per_class) {
                out << std::left << std::setw(10) << "canonical" << std::setw(6) << "hull"
                    << std::setw(5) << "d" << std::setw(5) << "dd" << std::setw(7) << "flags"
                    << "|Aut|\n";
                for (const CodeClassRecord& rec : classes.records) {
                    std::string flags;
                    if (rec.even)
                        flags += 'e';
                    if (rec.self_orthogonal)
                        flags += 's';
                    if (rec.lcd)
                        flags += 'l';
                    if (flags.empty())
                        flags = "-";
                    out << std::left << std::setw(10) << rec.canonical_generator.hex_packed()
                        << std::setw(6) << rec.hull_dim << std::setw(5) << rec.min_d << std::setw(5)
                        << rec.dual_d << std::setw(7) << flags << rec.aut_order.get_str() << "\n";
                }
            }
            break;
        }
        }
        return mass_ok ? kExitOk : kExitMismatch;
    });
}

int cmd_crosscheck(const CrosscheckArgs& args, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        auto start = Clock::now();
        OutputDocument doc;
        doc.command = "crosscheck";
        doc.parameters = {{"q", args.q}, {"max_n", args.max_n}, {"with_brute", args.with_brute}};

        long tuples = 0;
        long brute_cells = 0;
        long brute_skipped = 0;
        json mismatch;
        bool ok = true;

        for (int n = 2; n <= args.max_n && ok; ++n) {
            for (int k = 1; k <= n - 1 && ok; ++k) {
                for (int l = 0; l <= k && ok; ++l) {
                    Count a = sendrier_count(n, k, l, args.q);
                    Count b = product_count(n, k, l, args.q);
                    ++tuples;
                    if (a != b) {
                        ok = false;
                        mismatch = {{"n", n}, {"k", k}, {"l", l},
                                    {"sendrier", a.get_str()}, {"product", b.get_str()}};
                    }
                }
                if (!ok)
                    break;
                // The spectrum constructor verifies the partition identity.
                spectrum(n, k, args.q, SpectrumMethod::sendrier);
                if (args.with_brute) {
                    if (gaussian_binomial(n, k, args.q) > args.guard_limit) {
                        ++brute_skipped;
                        continue;
                    }
                    EnumerationTask task;
                    task.n = n;
                    task.k = k;
                    task.q = args.q;
                    task.threads = args.threads;
                    task.guard_limit = args.guard_limit;
                    HullSpectrum bs = brute_spectrum(task);
                    for (int l = 0; l <= k; ++l) {
                        Count c = product_count(n, k, l, args.q);
                        ++brute_cells;
                        if (bs.counts[static_cast<size_t>(l)] != c) {
                            ok = false;
                            mismatch = {{"n", n}, {"k", k}, {"l", l},
                                        {"brute", bs.counts[static_cast<size_t>(l)].get_str()},
                                        {"product", c.get_str()}};
                            break;
                        }
                    }
                }
            }
        }

        doc.results["formula_tuples_checked"] = tuples;
        doc.results["brute_cells_checked"] = brute_cells;
        doc.results["brute_pairs_skipped_by_guard"] = brute_skipped;
        doc.results["ok"] = ok;
        if (!ok)
            doc.results["first_mismatch"] = mismatch;
        doc.provenance = {{"method", "sum formula vs product formula" +
                                         std::string(args.with_brute ? " vs exhaustive enumeration" : "")}};
        doc.seconds = seconds_since(start);

        if (args.format == OutputFormat::json) {
            emit_json(doc, out);
        } else {
            out << "crosscheck q=" << args.q << " n<=" << args.max_n << ": " << tuples
                << " formula tuples";
            if (args.with_brute)
                out << ", " << brute_cells << " brute cells";
            out << (ok ? " -- all equal\n" : " -- MISMATCH\n");
            if (!ok)
                out << "first mismatch: " << mismatch.dump() << "\n";
        }
        return ok ? kExitOk : kExitMismatch;
    });
}

} // namespace hullcensus
