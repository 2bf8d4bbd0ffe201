#pragma once

#include <vector>

#include "osclab/step_function.hpp"
#include "osclab/weight.hpp"

namespace osclab {

/// Piecewise-linear function with |slope| <= 1 everywhere.
///
/// `breakpoints` are strictly increasing; `slopes` has one more entry:
/// slopes[0] left of the first breakpoint, slopes[i] between breakpoints
/// i-1 and i, slopes[m] right of the last one. The function is anchored
/// by its value at the first breakpoint.
class LipschitzPL {
public:
    LipschitzPL(std::vector<double> breakpoints, std::vector<double> slopes, double anchor);

    /// f(x) = x.
    static LipschitzPL identity();
    /// Clamp to [A, B] (A <= B).
    static LipschitzPL truncation(double A, double B);

    double operator()(double x) const { return eval(x); }
    double eval(double x) const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& slopes() const { return slopes_; }

private:
    std::vector<double> breakpoints_;
    std::vector<double> slopes_;
    std::vector<double> values_; // value at each breakpoint
};

/// Equimeasurable non-increasing rearrangement on the same domain:
/// segments sorted by value (descending), equal-valued neighbors merged.
StepFunction rearrange_decreasing(const StepFunction& f);

/// Clamp values to [A, B] (A <= B), keeping the partition.
StepFunction truncate(const StepFunction& f, double A, double B);

/// Glue f_minus and f_plus onto [0, 1], giving the left part total length
/// `alpha` and the right part 1 - alpha (each part keeps its internal
/// proportions). alpha in [0, 1]; at 0 or 1 the vanishing side is dropped.
StepFunction concatenate(const StepFunction& f_minus, const StepFunction& f_plus, double alpha);

/// Valuewise composition g(f), keeping the partition.
StepFunction compose_lipschitz(const LipschitzPL& g, const StepFunction& f);

/// Q(t) + t^2 / n: strictly convex regularization of any convex weight.
ConvexWeight regularized_weight(const ConvexWeight& Q, int n);

/// exp(f) valuewise (a positive weight function from a log-density).
StepFunction weight_from_phi(const StepFunction& f);

/// log(w) valuewise; every value of w must be strictly positive.
StepFunction phi_from_weight(const StepFunction& w);

} // namespace osclab
