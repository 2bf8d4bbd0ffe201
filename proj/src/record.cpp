#include "osclab/record.hpp"

#include <cstdio>

namespace osclab {

std::string format_float(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string to_string(RecordStatus s) {
    switch (s) {
        case RecordStatus::pass: return "pass";
        case RecordStatus::fail: return "fail";
        case RecordStatus::skipped: return "skipped-precondition";
    }
    return "?";
}

const char* const kRecordCsvHeader =
    "sample_id,seed,check,weight,lhs,rhs,slack,tol,"
    "lhs_witness_a,lhs_witness_b,rhs_witness_a,rhs_witness_b,"
    "oracle_lhs,oracle_rhs,status,runtime_ms";

void write_record_csv_row(std::ostream& os, const CampaignRecord& r) {
    os << r.sample_id << ',' << r.seed << ',' << r.check << ',' << r.weight << ','
       << format_float(r.lhs) << ',' << format_float(r.rhs) << ',' << format_float(r.slack) << ','
       << format_float(r.tol) << ',' << format_float(r.lhs_witness.a) << ','
       << format_float(r.lhs_witness.b) << ',' << format_float(r.rhs_witness.a) << ','
       << format_float(r.rhs_witness.b) << ',';
    if (r.has_oracle)
        os << format_float(r.oracle_lhs) << ',' << format_float(r.oracle_rhs);
    else
        os << ',';
    os << ',' << to_string(r.status) << ',' << format_float(r.runtime_ms) << '\n';
}

RecordStatus status_from_slack(double slack, double tol) {
    return slack < -tol ? RecordStatus::fail : RecordStatus::pass;
}

} // namespace osclab
