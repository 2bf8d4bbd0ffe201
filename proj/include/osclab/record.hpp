#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "osclab/interval.hpp"

namespace osclab {

/// Render a double with 17 significant digits (round-trip safe).
std::string format_float(double x);

enum class RecordStatus { pass, fail, skipped };

/// One verified inequality (or equality) instance.
///
/// `slack` is oriented so that the claim holds iff slack >= -tol; `status`
/// is pass/fail by exactly that rule, or skipped when a precondition could
/// not be certified (skips never count as failures). When a flagged
/// violation was re-examined on a fine grid, `has_oracle` is set, the
/// grid values land in oracle_lhs/oracle_rhs, and `slack` is the rechecked
/// (authoritative) slack while lhs/rhs keep the primary estimates.
struct CampaignRecord {
    long sample_id = 0;
    std::uint64_t seed = 0;
    std::string check;
    std::string weight;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tol = 1e-6;
    Interval lhs_witness{0.0, 1.0};
    Interval rhs_witness{0.0, 1.0};
    bool has_oracle = false;
    double oracle_lhs = 0.0;
    double oracle_rhs = 0.0;
    RecordStatus status = RecordStatus::pass;
    double runtime_ms = 0.0;
};

/// "pass", "fail" or "skipped-precondition".
std::string to_string(RecordStatus s);

/// Header matching write_record_csv_row (runtime_ms is the last column so
/// determinism comparisons can drop it).
extern const char* const kRecordCsvHeader;

void write_record_csv_row(std::ostream& os, const CampaignRecord& r);

/// Apply the uniform status rule: fail iff slack < -tol.
RecordStatus status_from_slack(double slack, double tol);

} // namespace osclab
