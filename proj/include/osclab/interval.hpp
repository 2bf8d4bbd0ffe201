#pragma once

#include <cmath>
#include <string>

#include "osclab/errors.hpp"

namespace osclab {

/// Closed interval [a, b] with a < b.
struct Interval {
    double a = 0.0;
    double b = 1.0;

    Interval() = default;
    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
            throw argument_error("Interval requires finite endpoints with a < b (got [" +
                                 std::to_string(a_) + ", " + std::to_string(b_) + "])");
    }

    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
    bool contains(double x) const { return x >= a && x <= b; }

    /// True if [a, b] lies inside `outer` up to `tol` of slack on each side.
    bool within(const Interval& outer, double tol = 0.0) const {
        return a >= outer.a - tol && b <= outer.b + tol;
    }

    friend bool operator==(const Interval& x, const Interval& y) {
        return x.a == y.a && x.b == y.b;
    }
};

} // namespace osclab
