#pragma once
// Report serialization (JSON / CSV / plain text), module dumps, and the
// report cache. All output is byte-deterministic for a fixed input: maps are
// iterated in their canonical order and JSON uses ordered keys.

#include "modcohom/cohomology.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace modcohom {

inline constexpr const char* kVersion = "1.0.0";

// "k" for (0,0), otherwise "L(a,b)^(1)"; multiplicity prefixed as "2*".
std::string factor_name(const CohomFactor& f);

nlohmann::ordered_json report_to_json(const CohomologyReport& report);
CohomologyReport report_from_json(const nlohmann::ordered_json& j);

// Renders degrees lo..hi inclusive (clamped to the report).
std::string render_report(const CohomologyReport& report, const std::string& format,
                          bool only_nonzero, std::size_t lo = 0,
                          std::size_t hi = std::size_t(-1));

// Representation dump: basis weights and sparse action triplets.
nlohmann::ordered_json repr_to_json(const Representation& rep);

std::string cache_key(std::uint32_t p, const std::string& algebra, const ModuleSelector& sel);
std::optional<CohomologyReport> cache_load(const std::filesystem::path& dir,
                                           const std::string& key);
void cache_store(const std::filesystem::path& dir, const std::string& key,
                 const CohomologyReport& report);

}  // namespace modcohom
