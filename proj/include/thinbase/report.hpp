#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "thinbase/analysis.hpp"
#include "thinbase/coverage.hpp"
#include "thinbase/sequence.hpp"

namespace thinbase {

inline constexpr char kReportSchema[] = "thinbase_report_v1";
inline constexpr char kArtifactVersion[] = "thinbase 0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 0x5eedc0deULL;

/// Parsed command-line run configuration.
struct RunConfig {
    std::string command;          // generate|verify|analyze|embed|selftest
    nlohmann::json construction;  // {"construction": name, "params": {...}}, or null
    unsigned order = 0;           // 0: use the construction's intrinsic order
    std::optional<std::uint64_t> window;
    std::optional<Interval> target;
    std::string seq_path;
    std::string out_path;
    std::string format;  // json|csv; empty picks the command's default
    std::uint64_t seed = kDefaultSeed;
    std::size_t burn_in = 0;
    std::size_t precision = 12;   // fractional digits in rendered decimals
    std::string bitmap_cache;     // verify: reuse/save the sumset bitmap here
};

/// A generated basis prefix plus construction-specific metadata tables.
struct BuiltConstruction {
    MonotoneSequence elements;
    unsigned intrinsic_order = 0;  // 0 when the construction has no fixed order
    nlohmann::json meta;
};

/// Dispatches a ConstructionSpec JSON document {"construction", "params"}.
/// Throws std::invalid_argument on malformed specs and hypothesis_error when
/// a construction's theorem hypotheses fail.
BuiltConstruction build_construction(const nlohmann::json& spec);

struct VerificationReport {
    nlohmann::json config_echo;  // full ConstructionSpec and run parameters
    nlohmann::json construction_meta;
    std::optional<CoverageReport> coverage;
    nlohmann::json metrics;
    double timing_ms = 0;  // volatile; never part of the canonical bytes
};

/// Canonical JSON: keys sorted, Naturals and rationals as decimal strings,
/// no floats, no timing. Identical configs on identical versions give
/// byte-identical output.
std::string emit_report_json(const VerificationReport& report);

/// Fixed-schema CSV of a metrics table. Header:
/// kind,index_or_x,value_numerator,value_denominator,value_decimal
/// Root-valued kinds (counting_ratio, gap_power) carry value^h in the
/// numerator/denominator columns; the decimal column always renders the
/// real value (truncated at frac_digits fractional digits).
std::string growth_metrics_csv(const GrowthMetrics& gm, std::size_t frac_digits = 12);

nlohmann::json growth_metrics_json(const GrowthMetrics& gm, std::size_t frac_digits = 12);

// JSON building blocks shared by the CLI
nlohmann::json natural_json(const Natural& n);
nlohmann::json rational_json(const Rational& r, std::size_t frac_digits = 12);
nlohmann::json rootratio_json(const RootRatio& r, std::size_t frac_digits = 12);
nlohmann::json interval_json(const Interval& iv);
nlohmann::json coverage_json(const CoverageReport& rep);
Natural natural_from_json(const nlohmann::json& j, const char* what);

}  // namespace thinbase
