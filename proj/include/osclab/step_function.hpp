#pragma once

#include <vector>

#include "osclab/interval.hpp"

namespace osclab {

/// One constant piece: positive length and a finite value.
struct Segment {
    double len = 0.0;
    double val = 0.0;

    friend bool operator==(const Segment& x, const Segment& y) {
        return x.len == y.len && x.val == y.val;
    }
};

/// Piecewise-constant function on a closed interval.
///
/// Segments tile the domain left to right; the value at an internal
/// breakpoint is the value of the segment to its right (half-open
/// convention), and the right endpoint of the domain takes the last
/// segment's value.
class StepFunction {
public:
    /// Segment lengths must be positive and sum to the domain length
    /// within 1e-12 (absolute, scaled by max(1, length)).
    StepFunction(Interval domain, std::vector<Segment> segments);

    /// Constant function on `domain`.
    static StepFunction constant(double value, Interval domain = Interval(0.0, 1.0));

    /// Equal-length segments with the given values, on `domain`.
    static StepFunction from_values(const std::vector<double>& values,
                                    Interval domain = Interval(0.0, 1.0));

    const Interval& domain() const { return domain_; }
    const std::vector<Segment>& segments() const { return segments_; }
    std::size_t size() const { return segments_.size(); }

    /// Cumulative breakpoints: breakpoints()[0] == domain().a,
    /// breakpoints().back() == domain().b, size() + 1 entries.
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    /// Value at x (half-open convention; x must lie in the domain).
    double value_at(double x) const;

    /// Copy with equal-valued adjacent segments merged.
    StepFunction normalized() const;

    /// Apply `f` to every value, keeping the partition.
    template <typename F>
    StepFunction map_values(F&& f) const {
        std::vector<Segment> segs = segments_;
        for (auto& s : segs) s.val = f(s.val);
        return StepFunction(domain_, std::move(segs));
    }

    friend bool operator==(const StepFunction& x, const StepFunction& y) {
        return x.domain_ == y.domain_ && x.segments_ == y.segments_;
    }

private:
    Interval domain_;
    std::vector<Segment> segments_;
    std::vector<double> breakpoints_;
};

/// Pieces of `f` covering the subinterval J of the domain, clipped to J.
/// Pieces are appended to `out` (which is cleared first); their lengths sum
/// to J.length() up to roundoff. Throws domain_error if J is not contained
/// in the domain (1e-12 slack, then clamped).
void cut_segments(const StepFunction& f, Interval J, std::vector<Segment>& out);

/// Restriction of `f` to the subinterval J (a StepFunction on J).
StepFunction restrict(const StepFunction& f, Interval J);

/// Mean value of `f` over J: (1/|J|) * integral of f over J.
double average_of(const StepFunction& f, Interval J);

/// Minimum and maximum value attained on J.
std::pair<double, double> range_on(const StepFunction& f, Interval J);

} // namespace osclab
