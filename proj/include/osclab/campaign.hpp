#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osclab/functionals.hpp"
#include "osclab/record.hpp"
#include "osclab/rng.hpp"
#include "osclab/transforms.hpp"

namespace osclab {

/// Configuration for a property-verification run.
struct CampaignConfig {
    std::uint64_t seed = 20260819;
    int samples = 100;
    int max_segments = 8;          ///< k_max for generated step functions
    double value_lo = -3.0;
    double value_hi = 3.0;
    /// Weight descriptors used by weight-parametrized checks.
    std::vector<std::string> weights{"power:1", "power:1.5", "power:2", "exp", "cosh"};
    /// Check names (see campaign_check_names()); "all" expands to every check.
    std::vector<std::string> checks{"all"};
    OptimizerConfig optimizer{};
    /// Failing sup-inequality records are always re-examined with the grid
    /// engine at 4x resolution (the rechecked slack is authoritative and both
    /// grid values are recorded); when true, every record of those checks is
    /// rechecked, not just the failing ones.
    bool oracle_mode = false;
    double violation_tol = 1e-6;
    /// 0 = one worker per hardware thread; OSC_LAB_WORKERS overrides both.
    int workers = 0;
    int induction_depth = 8;

    void validate() const;
    /// The checks list with "all" expanded, in canonical order.
    std::vector<std::string> expanded_checks() const;
};

struct CampaignSummary {
    long pass = 0;
    long fail = 0;
    long skipped = 0;
    double runtime_s = 0.0;
};

/// Canonical check names in execution order.
const std::vector<std::string>& campaign_check_names();

/// Seeded random step function on [0,1]: k uniform in [1, k_max], lengths
/// a normalized simplex draw, values uniform in [lo, hi].
StepFunction gen_random_step(std::uint64_t seed, int k_max, double lo, double hi);
StepFunction gen_random_step(SplitMix64& rng, int k_max, double lo, double hi);

/// Random 1-Lipschitz piecewise-linear function with 1-3 breakpoints
/// inside [lo, hi].
LipschitzPL gen_lipschitz(SplitMix64& rng, double lo, double hi);

/// Run every requested check on every sample. Records are appended in
/// deterministic order (sample-major, canonical check order) regardless of
/// the worker count.
CampaignSummary run_campaign(const CampaignConfig& cfg, std::vector<CampaignRecord>& records);

/// Same, streaming the records to a CSV file (header + one row per record).
CampaignSummary run_campaign_csv(const CampaignConfig& cfg, const std::string& csv_path,
                                 std::vector<CampaignRecord>* records_out = nullptr);

} // namespace osclab
