#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qta {

/// One benchmark run, as serialized in the machine-readable summary.
/// Baseline rows carry the instance name suffixed with ":qbsolv-approx".
struct RunRecord {
    std::string instance;
    std::uint64_t seed = 0;
    double cost = 0.0;
    long long accesses = 0;
    long long hits = 0;
    long long wall_ms = 0;
};

/// Tab-separated lines with fixed field order:
/// instance seed cost accesses hits wall_ms
std::string summary_lines(const std::vector<RunRecord>& records);

/// Parse summary lines back into records (inverse of summary_lines).
std::vector<RunRecord> parse_summary(std::string_view text);

/// Human-readable table with one row per instance (avg/std/best cost and
/// average accesses). A pure function of the records, so regenerating the
/// table from a summary file is byte-identical.
std::string render_table(const std::vector<RunRecord>& records);

} // namespace qta
