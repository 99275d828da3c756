#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "pathmean/brownian.hpp"
#include "pathmean/sweep.hpp"

namespace pathmean {

/// 17 significant digits; round trips double values exactly through text.
std::string format_double(double x);

/// FNV-1a 64-bit over the given bytes, as 16 hex characters.
std::string digest_hex(std::string_view bytes);

// Documented JSON shapes: {ctx: {family, n}, N|K, [class], data: row-major}.
nlohmann::json to_json(const StepPath& f);
nlohmann::json to_json(const GroupPath& g);
StepPath step_path_from_json(const nlohmann::json& j);
GroupPath group_path_from_json(const nlohmann::json& j);

/// include_timing = false yields the canonical form used for digests; wall
/// clock readings are the only non-deterministic fields.
nlohmann::json to_json(const DefectReport& r, bool include_timing = true);
nlohmann::json to_json(const SweepResult& s, bool include_timing = true);

std::string defect_csv_header(bool include_timing = true);
std::string defect_csv_row(const DefectReport& r, bool include_timing = true);

std::string geometry_csv_header();
std::string geometry_csv_row(int n, double s, double exact, const McEstimate& mc, int M,
                             std::uint64_t seed);

} // namespace pathmean
