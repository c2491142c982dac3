#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dressage/dressing.hpp"
#include "dressage/qstates.hpp"

namespace dressage {

/// One named check: `pass` is `measured <= bound` unless `at_least` flips the
/// direction (spread-style witnesses).
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool at_least = false;
    bool pass = false;
};

CheckResult check_at_most(std::string name, double measured, double bound);
CheckResult check_at_least(std::string name, double measured, double bound);

struct Report {
    nlohmann::json config;
    std::vector<CheckResult> checks;

    bool overall_pass() const;
    /// Schema "dressage-report-1". The timestamp lives in its own field so
    /// golden-file comparison can drop it.
    nlohmann::json to_json(bool include_timestamp = true) const;
};

/// Knobs for the seeded invariance-contrast run.
struct GaugeTestConfig {
    std::uint64_t seed = 1;
    int transforms = 100;
    double smoothness = 1.0;
    double coupling = 1.0;
    double constant_offset = 0.0;
    int charge_sign = +1;
    int anchors = 512;
    double tolerance = 1e-10;
    double bare_spread_min = 0.1;
};

/// Invariance contrast for one dressed charge: dressed multiplier locked to
/// its global phase, bare phase visibly not, global phase matching
/// exp(-i q mean(alpha)).
std::vector<CheckResult> run_gauge_contrast(const DressingKernel& kernel,
                                            const GaugeTestConfig& cfg);

/// Neutral pair: two strings meeting at a shared sink, charges +1/-1;
/// exactly invariant, global phase 1.
std::vector<CheckResult> run_neutral_pair_checks(const Lattice& lat,
                                                 std::span<const PathStep> steps,
                                                 const GaugeTestConfig& cfg);

struct SuiteConfig {
    std::uint64_t seed = 1;
    double coupling = 1.0;
    double smoothness = 1.0;
    int contrast_transforms = 100;
    int phase_law_transforms = 20;
    int invariant_seeds = 50;
    int sbp_pairs = 100;
    double tolerance = 1e-10;
    bool include_large = true; // 16^3 Gauss + 32^3 profile
};

/// The full self-check battery behind `report --all`.
Report run_full_suite(const SuiteConfig& cfg);

} // namespace dressage
