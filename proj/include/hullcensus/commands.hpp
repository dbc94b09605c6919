#ifndef HULLCENSUS_COMMANDS_HPP
#define HULLCENSUS_COMMANDS_HPP

#include "hullcensus/document.hpp"
#include "hullcensus/exact.hpp"

#include <iosfwd>
#include <string>

namespace hullcensus {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1; // verification failure (or broken internal invariant)
inline constexpr int kExitUsage = 2;    // usage / domain error
inline constexpr int kExitGuard = 3;    // resource guard refusal

struct SpectrumArgs {
    long q = 2;
    int n = 0;
    int k = 0;
    std::string method = "auto"; // auto | sendrier | product | brute
    OutputFormat format = OutputFormat::table;
    int threads = 1;
    std::string checkpoint;
    Count guard_limit = Count(1000000000);
    bool force_generic = false;
    bool no_cache = false;
};

struct RatiosArgs {
    long q = 2;
    int n = 0;
    int k = 0;
    bool verify_grid = false;
    int max_n = 14;
    OutputFormat format = OutputFormat::table;
};

struct ClassifyArgs {
    long q = 2;
    int n = 0;
    int k = 0;
    int min_d = 1;
    int min_dual_d = 1;
    bool mass_check = false;
    bool per_class = false;
    bool allow_large = false;
    int threads = 1;
    OutputFormat format = OutputFormat::table;
    bool no_cache = false;
};

struct CrosscheckArgs {
    long q = 2;
    int max_n = 8;
    bool with_brute = false;
    int threads = 1;
    Count guard_limit = Count(1000000000);
    OutputFormat format = OutputFormat::table;
};

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out, std::ostream& err);
int cmd_ratios(const RatiosArgs& args, std::ostream& out, std::ostream& err);
int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_crosscheck(const CrosscheckArgs& args, std::ostream& out, std::ostream& err);

/// Result cache root: $HULLCENSUS_CACHE, else $XDG_CACHE_HOME/hullcensus,
/// else $HOME/.cache/hullcensus. Empty string disables caching.
std::string cache_directory();

} // namespace hullcensus

#endif // HULLCENSUS_COMMANDS_HPP
