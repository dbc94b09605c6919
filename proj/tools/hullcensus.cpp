// hullcensus: exact counts and classification of linear codes over small
// finite fields by hull dimension.

#include "hullcensus/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace hullcensus;

int main(int argc, char** argv) {
    CLI::App app{"exact hull-dimension censuses of linear codes over small finite fields"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string guard;

    SpectrumArgs spec_args;
    CLI::App* spec = app.add_subcommand(
        "spectrum", "count [n,k]_q codes by hull dimension (closed forms or exhaustive)");
    spec->add_option("--q", spec_args.q, "field order (prime power <= 32)")->required();
    spec->add_option("--n", spec_args.n, "code length")->required();
    spec->add_option("--k", spec_args.k, "code dimension")->required();
    spec->add_option("--method", spec_args.method, "auto | sendrier | product | brute");
    spec->add_option("--format", format, "table | json | csv");
    spec->add_option("--threads", spec_args.threads, "shard parallelism for --method brute");
    spec->add_option("--checkpoint", spec_args.checkpoint, "resumable per-shard tally file (brute)");
    spec->add_option("--guard-limit", guard, "max subspaces an enumeration may visit");
    spec->add_flag("--force-generic", spec_args.force_generic,
                   "disable the GF(2) word engine (debugging)");
    spec->add_flag("--no-cache", spec_args.no_cache, "bypass the result cache");

    RatiosArgs ratio_args;
    CLI::App* ratios = app.add_subcommand(
        "ratios", "consecutive spectrum ratios, their closed-form coefficients and bounds");
    ratios->add_option("--q", ratio_args.q, "field order")->required();
    ratios->add_option("--n", ratio_args.n, "code length");
    ratios->add_option("--k", ratio_args.k, "code dimension");
    ratios->add_flag("--verify-grid", ratio_args.verify_grid,
                     "verify the decrease bounds over the whole grid n <= max-n");
    ratios->add_option("--max-n", ratio_args.max_n, "grid bound for --verify-grid");
    ratios->add_option("--format", format, "table | json | csv");

    ClassifyArgs cls_args;
    CLI::App* cls = app.add_subcommand(
        "classify", "classify codes up to monomial equivalence (q = 2 or 3)");
    cls->add_option("--q", cls_args.q, "field order (2 or 3)")->required();
    cls->add_option("--n", cls_args.n, "code length")->required();
    cls->add_option("--k", cls_args.k, "code dimension")->required();
    cls->add_option("--min-d", cls_args.min_d, "census filter: minimum distance >= this");
    cls->add_option("--min-dd", cls_args.min_dual_d, "census filter: dual distance >= this");
    cls->add_flag("--mass-check", cls_args.mass_check,
                  "verify sum group/|Aut| against the labeled count for every hull dimension");
    cls->add_flag("--per-class", cls_args.per_class, "list one row per equivalence class");
    cls->add_flag("--allow-large", cls_args.allow_large, "override the orbit-scan size bounds");
    cls->add_option("--threads", cls_args.threads, "shard parallelism (result independent of it)");
    cls->add_option("--format", format, "table | json | csv");
    cls->add_flag("--no-cache", cls_args.no_cache, "bypass the result cache");

    CrosscheckArgs cc_args;
    CLI::App* cc = app.add_subcommand(
        "crosscheck", "compare the sum formula, product formula and (optionally) enumeration");
    cc->add_option("--q", cc_args.q, "field order")->required();
    cc->add_option("--max-n", cc_args.max_n, "check all n up to this bound")->required();
    cc->add_flag("--with-brute", cc_args.with_brute, "also compare against exhaustive enumeration");
    cc->add_option("--threads", cc_args.threads, "shard parallelism for enumeration");
    cc->add_option("--guard-limit", guard, "max subspaces an enumeration may visit");
    cc->add_option("--format", format, "table | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!guard.empty()) {
            Count limit(guard);
            spec_args.guard_limit = limit;
            cc_args.guard_limit = limit;
        }
        OutputFormat fmt = parse_format(format);
        if (spec->parsed()) {
            spec_args.format = fmt;
            return cmd_spectrum(spec_args, std::cout, std::cerr);
        }
        if (ratios->parsed()) {
            ratio_args.format = fmt;
            if (!ratio_args.verify_grid && (ratio_args.n <= 0 || ratio_args.k <= 0)) {
                std::cerr << "ratios requires --n and --k (or --verify-grid)\n";
                return kExitUsage;
            }
            return cmd_ratios(ratio_args, std::cout, std::cerr);
        }
        if (cls->parsed()) {
            cls_args.format = fmt;
            return cmd_classify(cls_args, std::cout, std::cerr);
        }
        cc_args.format = fmt;
        return cmd_crosscheck(cc_args, std::cout, std::cerr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    }
}
