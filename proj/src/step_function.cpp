#include "osclab/step_function.hpp"

#include <algorithm>
#include <cmath>

namespace osclab {

StepFunction::StepFunction(Interval domain, std::vector<Segment> segments)
    : domain_(domain), segments_(std::move(segments)) {
    if (segments_.empty())
        throw argument_error("StepFunction requires at least one segment");

    double total = 0.0;
    for (const auto& s : segments_) {
        if (!std::isfinite(s.len) || s.len <= 0.0)
            throw argument_error("segment lengths must be positive and finite");
        if (!std::isfinite(s.val))
            throw argument_error("segment values must be finite");
        total += s.len;
    }
    const double L = domain_.length();
    if (std::fabs(total - L) > 1e-12 * std::max(1.0, L))
        throw argument_error("segment lengths must sum to the domain length");

    breakpoints_.resize(segments_.size() + 1);
    breakpoints_[0] = domain_.a;
    for (std::size_t i = 0; i < segments_.size(); ++i)
        breakpoints_[i + 1] = breakpoints_[i] + segments_[i].len;
    breakpoints_.back() = domain_.b; // kill accumulated roundoff at the right end
}

StepFunction StepFunction::constant(double value, Interval domain) {
    return StepFunction(domain, {Segment{domain.length(), value}});
}

StepFunction StepFunction::from_values(const std::vector<double>& values, Interval domain) {
    if (values.empty())
        throw argument_error("from_values requires at least one value");
    const double len = domain.length() / static_cast<double>(values.size());
    std::vector<Segment> segs;
    segs.reserve(values.size());
    for (double v : values) segs.push_back({len, v});
    return StepFunction(domain, std::move(segs));
}

double StepFunction::value_at(double x) const {
    if (!domain_.contains(x))
        throw domain_error("value_at: point outside the domain");
    if (x >= breakpoints_[segments_.size() - 1]) // last segment owns its right end
        return segments_.back().val;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
    return segments_[i - 1].val;
}

StepFunction StepFunction::normalized() const {
    std::vector<Segment> merged;
    merged.reserve(segments_.size());
    for (const auto& s : segments_) {
        if (!merged.empty() && merged.back().val == s.val)
            merged.back().len += s.len;
        else
            merged.push_back(s);
    }
    return StepFunction(domain_, std::move(merged));
}

namespace {

Interval clamp_to_domain(const StepFunction& f, Interval J) {
    const Interval& D = f.domain();
    const double slack = 1e-12 * std::max(1.0, D.length());
    if (!J.within(D, slack))
        throw domain_error("subinterval not contained in the function's domain");
    return Interval(std::max(J.a, D.a), std::min(J.b, D.b));
}

} // namespace

void cut_segments(const StepFunction& f, Interval J, std::vector<Segment>& out) {
    out.clear();
    J = clamp_to_domain(f, J);
    const auto& bp = f.breakpoints();
    const auto& segs = f.segments();

    auto it = std::upper_bound(bp.begin(), bp.end(), J.a);
    std::size_t i = static_cast<std::size_t>(it - bp.begin());
    if (i > 0) --i;
    for (; i < segs.size() && bp[i] < J.b; ++i) {
        const double lo = std::max(bp[i], J.a);
        const double hi = std::min(bp[i + 1], J.b);
        if (hi > lo) out.push_back({hi - lo, segs[i].val});
    }
}

StepFunction restrict(const StepFunction& f, Interval J) {
    std::vector<Segment> cut;
    cut_segments(f, J, cut);
    J = clamp_to_domain(f, J);
    return StepFunction(J, std::move(cut));
}

double average_of(const StepFunction& f, Interval J) {
    std::vector<Segment> cut;
    cut_segments(f, J, cut);
    double mass = 0.0, total = 0.0;
    for (const auto& s : cut) {
        mass += s.len;
        total += s.len * s.val;
    }
    return total / mass;
}

std::pair<double, double> range_on(const StepFunction& f, Interval J) {
    std::vector<Segment> cut;
    cut_segments(f, J, cut);
    double lo = cut.front().val, hi = lo;
    for (const auto& s : cut) {
        lo = std::min(lo, s.val);
        hi = std::max(hi, s.val);
    }
    return {lo, hi};
}

} // namespace osclab
