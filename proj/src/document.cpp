#include "hullcensus/document.hpp"

#include <stdexcept>

namespace hullcensus {

OutputFormat parse_format(const std::string& name) {
    if (name == "table")
        return OutputFormat::table;
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    throw std::invalid_argument("unknown format '" + name + "' (expected table, json or csv)");
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

std::string OutputDocument::canonical_hash() const {
    nlohmann::json canon;
    canon["schema_version"] = schema_version;
    canon["command"] = command;
    canon["parameters"] = parameters;
    canon["results"] = results;
    canon["provenance"] = provenance;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canon.dump())));
    return buf;
}

nlohmann::json OutputDocument::to_json() const {
    nlohmann::json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["parameters"] = parameters;
    doc["results"] = results;
    doc["provenance"] = provenance;
    doc["canonical_hash"] = canonical_hash();
    doc["timing"] = {{"seconds", seconds}, {"cache_hit", cache_hit}};
    return doc;
}

} // namespace hullcensus
