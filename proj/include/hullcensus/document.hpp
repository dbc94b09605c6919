#ifndef HULLCENSUS_DOCUMENT_HPP
#define HULLCENSUS_DOCUMENT_HPP

#include <json.hpp>

#include <cstdint>
#include <string>

namespace hullcensus {

enum class OutputFormat { table, json, csv };

OutputFormat parse_format(const std::string& name);

/// Machine-readable result envelope. Counts are always decimal strings;
/// identical inputs yield identical canonical hashes (timing and cache
/// bookkeeping are excluded from the hash).
struct OutputDocument {
    int schema_version = 1;
    std::string command;             // subcommand echo
    nlohmann::json parameters;       // object
    nlohmann::json results;          // object
    nlohmann::json provenance;       // object
    double seconds = 0.0;
    bool cache_hit = false;

    /// FNV-1a 64 over the canonical subset (everything except timing).
    std::string canonical_hash() const;

    /// Full document including timing and the canonical hash.
    nlohmann::json to_json() const;
};

std::uint64_t fnv1a64(const std::string& bytes);

} // namespace hullcensus

#endif // HULLCENSUS_DOCUMENT_HPP
