// Test-only reference implementations, coded independently of the library's
// segment-cutting and optimizer internals. They favor clarity over speed and
// are used to freeze expected values and to cross-check the fast paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "osclab/step_function.hpp"
#include "osclab/weight.hpp"

namespace oracles {

/// Exact average of Q(f - c) over J, via midpoint sampling between the
/// breakpoints of f clipped to J (exact for piecewise-constant f).
inline double average(const osclab::StepFunction& f, osclab::Interval J, double c,
                      const osclab::ConvexWeight& Q) {
    std::vector<double> cuts{J.a, J.b};
    for (double x : f.breakpoints())
        if (x > J.a && x < J.b) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());

    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        acc += (cuts[i + 1] - cuts[i]) * Q.eval(f.value_at(mid) - c);
    }
    return acc / J.length();
}

/// Minimize average() over c by iterated grid scans on [min f, max f].
/// Five rounds of a 1025-point scan, shrinking to +-2 grid steps around the
/// best, give a bracket below 1e-11 of the initial range.
inline double min_over_c(const osclab::StepFunction& f, osclab::Interval J,
                         const osclab::ConvexWeight& Q, double* c_star = nullptr) {
    auto [lo, hi] = osclab::range_on(f, J);
    if (hi - lo < 1e-15) {
        if (c_star) *c_star = lo;
        return Q.eval(0.0);
    }
    double best_c = lo, best_v = std::numeric_limits<double>::infinity();
    for (int round = 0; round < 5; ++round) {
        const int n = 1024;
        const double step = (hi - lo) / n;
        for (int i = 0; i <= n; ++i) {
            const double c = lo + step * i;
            const double v = average(f, J, c, Q);
            if (v < best_v) {
                best_v = v;
                best_c = c;
            }
        }
        lo = std::max(lo, best_c - 2 * step);
        hi = std::min(hi, best_c + 2 * step);
    }
    if (c_star) *c_star = best_c;
    return best_v;
}

/// Brute-force sup over all pairs of a uniform grid of resolution+1 points.
inline double sup_grid(const osclab::StepFunction& f, osclab::Interval J,
                       const osclab::ConvexWeight& Q, int resolution,
                       osclab::Interval* witness = nullptr) {
    double best = -std::numeric_limits<double>::infinity();
    const double step = J.length() / resolution;
    for (int i = 0; i < resolution; ++i)
        for (int j = i + 1; j <= resolution; ++j) {
            const double a = J.a + step * i;
            const double b = (j == resolution) ? J.b : J.a + step * j;
            const double v = min_over_c(f, osclab::Interval(a, b), Q);
            if (v > best) {
                best = v;
                if (witness) *witness = osclab::Interval(a, b);
            }
        }
    return best;
}

/// Value of the non-increasing rearrangement at t, via the distribution
/// function: f*(t) = inf { v : |{f > v}| <= t }.
inline double quantile(const osclab::StepFunction& f, double t) {
    struct Item {
        double val, len;
    };
    std::vector<Item> items;
    for (const auto& seg : f.segments()) items.push_back({seg.val, seg.len});
    std::sort(items.begin(), items.end(),
              [](const Item& x, const Item& y) { return x.val > y.val; });
    double cum = 0.0;
    for (const auto& it : items) {
        cum += it.len;
        if (t < cum) return it.val;
    }
    return items.back().val;
}

} // namespace oracles
