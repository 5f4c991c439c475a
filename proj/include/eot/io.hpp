#pragma once

#include <string>

#include "eot/analysis.hpp"
#include "eot/oracle.hpp"

namespace eot {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Deterministic formatting: fixed significant digits, no locale.
std::string format_double(double v);

// One-line JSON of the run configuration, embedded in every output file.
std::string config_json(const ProtocolParams& params, const AttackSpec& attack,
                        int64_t trials, uint64_t master_seed);

// Summary CSV: provenance comment lines, a header row, one data row.
std::string stats_summary_csv(const Stats& st);
// Raw CSV: provenance lines, header, one row per trial.
std::string stats_rows_csv(const Stats& st);
// Full JSON document for the same stats.
std::string stats_json(const Stats& st);

std::string capacity_csv_header();
std::string capacity_csv_row(const CapacityReport& r);
std::string capacity_json(const CapacityReport& r);

std::string region_json(double eps1, double eps2, const RateRegion& r);

std::string leakage_json(const OracleConfig& cfg, const LeakageReport& rep);

void write_file(const std::string& path, const std::string& content); // throws on failure

} // namespace eot
