#pragma once

#include <functional>
#include <vector>

#include "osclab/step_function.hpp"
#include "osclab/weight.hpp"

namespace osclab {

/// Knobs for the one-dimensional minimizer and the interval-sup search.
struct OptimizerConfig {
    /// Bracket width at which the golden-section minimization over the
    /// shift constant stops.
    double c_tol = 1e-11;
    /// Relative improvement under which sup refinement passes stop early.
    double w_rel_tol = 1e-9;
    /// Grid oracle resolution (the grid has grid_resolution + 1 points).
    int grid_resolution = 512;
    /// Number of top candidates carried into coordinate refinement.
    int multistart_top = 8;
    /// Maximum golden-section iterations per endpoint line search.
    int refine_iters = 60;

    void validate() const;
};

/// Result of minimizing the averaged weight over the shift constant.
struct FunctionalResult {
    double value = 0.0;   ///< minimal averaged weight
    double c_star = 0.0;  ///< minimizing constant (convention: midpoint of the minimizer set)
    bool c_star_unique = true;
    int iterations = 0;   ///< inner evaluations spent (0 for closed forms)
};

/// How an interval supremum was obtained.
enum class SupMethod { BreakpointEnum, RefinedLocal, GridOracle };

/// Lower estimate of a supremum over subintervals, with the best witness.
struct SupremumResult {
    double value = 0.0;
    Interval witness{0.0, 1.0};
    SupMethod method = SupMethod::BreakpointEnum;
    long evaluations = 0; ///< objective evaluations performed
};

/// Average of Q(f - c) over J: (1/|J|) * integral_J Q(f(x) - c) dx.
double deviation_average(const StepFunction& f, Interval J, double c, const ConvexWeight& Q);

/// Minimize deviation_average over the constant c.
///
/// Closed forms: Q = power:2 uses the weighted mean, Q = power:1 the
/// weighted median (midpoint of the median set when it is an interval;
/// c_star_unique = false). Every other weight is minimized by
/// golden-section search on [min f, max f], reporting the value at the
/// final bracket midpoint.
FunctionalResult min_deviation(const StepFunction& f, Interval J, const ConvexWeight& Q,
                               const OptimizerConfig& cfg = {});

/// Lower estimate of sup over subintervals L of J of min_deviation(f, L, Q).
///
/// Multistart search: enumerate all pairs of breakpoints of f in J
/// (including J's endpoints) as candidate intervals, add symmetric
/// straddles [x - s, x + s] around each interior breakpoint (s at scales
/// {1, 1/4, 1/16} of the larger value fitting the neighboring segments),
/// then refine the top multistart_top candidates by alternating
/// golden-section line searches in each endpoint. The best value seen
/// across *all* evaluations is returned; ties in value resolve to the
/// lexicographically smallest (a, b).
SupremumResult sup_deviation(const StepFunction& f, Interval J, const ConvexWeight& Q,
                             const OptimizerConfig& cfg = {});

/// Brute-force lower estimate: evaluate min_deviation on every pair of
/// points from a uniform grid of resolution + 1 points on J.
SupremumResult sup_deviation_grid(const StepFunction& f, Interval J, const ConvexWeight& Q,
                                  int resolution, const OptimizerConfig& cfg = {});

/// Objective for the generic interval-sup engines: value on [a, b].
using IntervalObjective = std::function<double(double, double)>;

/// Generic multistart engine behind sup_deviation; `inner_points` are the
/// structure points of the objective strictly inside J (typically the
/// function's interior breakpoints).
SupremumResult sup_search(Interval J, const std::vector<double>& inner_points,
                          const IntervalObjective& objective, const OptimizerConfig& cfg);

/// Generic uniform-grid engine behind sup_deviation_grid.
SupremumResult sup_grid(Interval J, const IntervalObjective& objective, int resolution);

namespace detail {

/// min_deviation on an already-cut list of segments (mass = sum of lengths).
FunctionalResult minimize_on_cut(const std::vector<Segment>& cut, const ConvexWeight& Q,
                                 const OptimizerConfig& cfg);

/// deviation_average on an already-cut list of segments.
double average_on_cut(const std::vector<Segment>& cut, double c, const ConvexWeight& Q);

/// Interior breakpoints of f strictly inside J.
std::vector<double> inner_breakpoints(const StepFunction& f, Interval J);

} // namespace detail

} // namespace osclab
