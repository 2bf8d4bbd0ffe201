#include "osclab/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace osclab {

namespace {

double require_finite_number(const nlohmann::json& j, const char* what) {
    if (!j.is_number())
        throw argument_error(std::string("step-function JSON: ") + what + " must be a number");
    const double x = j.get<double>();
    if (!std::isfinite(x))
        throw argument_error(std::string("step-function JSON: ") + what + " must be finite");
    return x;
}

} // namespace

StepFunction step_function_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw argument_error(std::string("step-function JSON: parse failure: ") + e.what());
    }
    if (!j.is_object())
        throw argument_error("step-function JSON: top level must be an object");

    Interval domain(0.0, 1.0);
    if (j.contains("domain")) {
        const auto& d = j["domain"];
        if (!d.is_array() || d.size() != 2)
            throw argument_error("step-function JSON: \"domain\" must be [a, b]");
        const double a = require_finite_number(d[0], "domain endpoint");
        const double b = require_finite_number(d[1], "domain endpoint");
        if (!(a < b))
            throw argument_error("step-function JSON: domain requires a < b");
        domain = Interval(a, b);
    }

    if (!j.contains("segments") || !j["segments"].is_array() || j["segments"].empty())
        throw argument_error("step-function JSON: \"segments\" must be a non-empty array");

    std::vector<Segment> segs;
    segs.reserve(j["segments"].size());
    double total = 0.0;
    for (const auto& s : j["segments"]) {
        if (!s.is_object() || !s.contains("len") || !s.contains("val"))
            throw argument_error("step-function JSON: each segment needs \"len\" and \"val\"");
        Segment seg;
        seg.len = require_finite_number(s["len"], "segment length");
        seg.val = require_finite_number(s["val"], "segment value");
        if (!(seg.len > 0.0))
            throw argument_error("step-function JSON: segment lengths must be positive");
        total += seg.len;
        segs.push_back(seg);
    }

    const double L = domain.length();
    if (std::fabs(total - L) > 1e-9 * std::max(1.0, L))
        throw argument_error("step-function JSON: segment lengths sum to " + std::to_string(total) +
                             ", expected the domain length " + std::to_string(L));
    const double scale = L / total;
    for (auto& s : segs) s.len *= scale;
    return StepFunction(domain, std::move(segs));
}

std::string step_function_to_json(const StepFunction& f) {
    nlohmann::json j;
    j["domain"] = {f.domain().a, f.domain().b};
    j["segments"] = nlohmann::json::array();
    for (const auto& s : f.segments())
        j["segments"].push_back({{"len", s.len}, {"val", s.val}});
    return j.dump(2);
}

StepFunction load_step_function(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error("cannot open step-function file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return step_function_from_json(buf.str());
}

void save_step_function(const StepFunction& f, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw error("cannot write step-function file: " + path);
    out << step_function_to_json(f) << '\n';
    if (!out)
        throw error("write failure on: " + path);
}

} // namespace osclab
