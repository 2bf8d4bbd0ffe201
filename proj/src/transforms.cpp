#include "osclab/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace osclab {

LipschitzPL::LipschitzPL(std::vector<double> breakpoints, std::vector<double> slopes,
                         double anchor)
    : breakpoints_(std::move(breakpoints)), slopes_(std::move(slopes)) {
    if (breakpoints_.empty())
        throw argument_error("LipschitzPL requires at least one breakpoint");
    if (slopes_.size() != breakpoints_.size() + 1)
        throw argument_error("LipschitzPL requires one more slope than breakpoints");
    if (!std::isfinite(anchor))
        throw argument_error("LipschitzPL anchor must be finite");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!std::isfinite(breakpoints_[i]))
            throw argument_error("LipschitzPL breakpoints must be finite");
        if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1]))
            throw argument_error("LipschitzPL breakpoints must be strictly increasing");
    }
    for (double s : slopes_)
        if (!std::isfinite(s) || std::fabs(s) > 1.0)
            throw argument_error("LipschitzPL slopes must satisfy |slope| <= 1");

    values_.resize(breakpoints_.size());
    values_[0] = anchor;
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        values_[i] = values_[i - 1] + slopes_[i] * (breakpoints_[i] - breakpoints_[i - 1]);
}

LipschitzPL LipschitzPL::identity() {
    return LipschitzPL({0.0}, {1.0, 1.0}, 0.0);
}

LipschitzPL LipschitzPL::truncation(double A, double B) {
    if (!(A <= B))
        throw argument_error("truncation requires A <= B");
    if (A == B) return LipschitzPL({A}, {0.0, 0.0}, A);
    return LipschitzPL({A, B}, {0.0, 1.0, 0.0}, A);
}

double LipschitzPL::eval(double x) const {
    if (!std::isfinite(x))
        throw argument_error("LipschitzPL evaluated at a non-finite point");
    if (x <= breakpoints_.front())
        return values_.front() + slopes_.front() * (x - breakpoints_.front());
    if (x >= breakpoints_.back())
        return values_.back() + slopes_.back() * (x - breakpoints_.back());
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
    return values_[i - 1] + slopes_[i] * (x - breakpoints_[i - 1]);
}

StepFunction rearrange_decreasing(const StepFunction& f) {
    std::vector<Segment> segs = f.segments();
    std::stable_sort(segs.begin(), segs.end(),
                     [](const Segment& x, const Segment& y) { return x.val > y.val; });
    std::vector<Segment> merged;
    merged.reserve(segs.size());
    for (const auto& s : segs) {
        if (!merged.empty() && merged.back().val == s.val)
            merged.back().len += s.len;
        else
            merged.push_back(s);
    }
    return StepFunction(f.domain(), std::move(merged));
}

StepFunction truncate(const StepFunction& f, double A, double B) {
    if (!std::isfinite(A) || !std::isfinite(B) || !(A <= B))
        throw argument_error("truncate requires finite bounds with A <= B");
    return f.map_values([A, B](double v) { return std::clamp(v, A, B); });
}

StepFunction concatenate(const StepFunction& f_minus, const StepFunction& f_plus, double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0)
        throw argument_error("concatenate requires alpha in [0, 1]");

    std::vector<Segment> segs;
    segs.reserve(f_minus.size() + f_plus.size());
    if (alpha > 0.0) {
        const double scale = alpha / f_minus.domain().length();
        for (const auto& s : f_minus.segments()) segs.push_back({s.len * scale, s.val});
    }
    if (alpha < 1.0) {
        const double scale = (1.0 - alpha) / f_plus.domain().length();
        for (const auto& s : f_plus.segments()) segs.push_back({s.len * scale, s.val});
    }
    return StepFunction(Interval(0.0, 1.0), std::move(segs));
}

StepFunction compose_lipschitz(const LipschitzPL& g, const StepFunction& f) {
    return f.map_values([&g](double v) { return g.eval(v); });
}

ConvexWeight regularized_weight(const ConvexWeight& Q, int n) {
    return ConvexWeight::regularized(Q, n);
}

StepFunction weight_from_phi(const StepFunction& f) {
    return f.map_values([](double v) { return std::exp(v); });
}

StepFunction phi_from_weight(const StepFunction& w) {
    for (const auto& s : w.segments())
        if (!(s.val > 0.0))
            throw argument_error("phi_from_weight requires strictly positive values");
    return w.map_values([](double v) { return std::log(v); });
}

} // namespace osclab
