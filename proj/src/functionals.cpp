#include "osclab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace osclab {

void OptimizerConfig::validate() const {
    if (!std::isfinite(c_tol) || c_tol <= 0.0)
        throw argument_error("OptimizerConfig: c_tol must be positive and finite");
    if (!std::isfinite(w_rel_tol) || w_rel_tol <= 0.0)
        throw argument_error("OptimizerConfig: w_rel_tol must be positive and finite");
    if (grid_resolution < 1)
        throw argument_error("OptimizerConfig: grid_resolution must be >= 1");
    if (multistart_top < 1)
        throw argument_error("OptimizerConfig: multistart_top must be >= 1");
    if (refine_iters < 1)
        throw argument_error("OptimizerConfig: refine_iters must be >= 1");
}

namespace detail {

double average_on_cut(const std::vector<Segment>& cut, double c, const ConvexWeight& Q) {
    double mass = 0.0, acc = 0.0;
    for (const auto& s : cut) {
        mass += s.len;
        acc += s.len * Q.eval(s.val - c);
    }
    return acc / mass;
}

namespace {

constexpr double kInvGolden = 0.6180339887498949; // (sqrt(5) - 1) / 2

/// Golden-section minimum of F on [lo, hi]; stops when the bracket is
/// narrower than tol and reports F at the final bracket midpoint.
template <typename F>
FunctionalResult golden_min(F&& f, double lo, double hi, double tol, bool unique) {
    double a = lo, b = hi;
    double x1 = b - kInvGolden * (b - a);
    double x2 = a + kInvGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    int iters = 2;
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvGolden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvGolden * (b - a);
            f2 = f(x2);
        }
        ++iters;
    }
    const double c = 0.5 * (a + b);
    ++iters;
    return FunctionalResult{f(c), c, unique, iters};
}

FunctionalResult minimize_mean(const std::vector<Segment>& cut, const ConvexWeight& Q) {
    double mass = 0.0, acc = 0.0;
    for (const auto& s : cut) {
        mass += s.len;
        acc += s.len * s.val;
    }
    const double mean = acc / mass;
    // Evaluate through the shared objective so callers that pin the constant
    // to the mean reproduce this value bit for bit.
    return FunctionalResult{average_on_cut(cut, mean, Q), mean, true, 0};
}

FunctionalResult minimize_median(const std::vector<Segment>& cut) {
    std::vector<Segment> sorted(cut);
    std::sort(sorted.begin(), sorted.end(),
              [](const Segment& x, const Segment& y) { return x.val < y.val; });
    double mass = 0.0;
    for (const auto& s : sorted) mass += s.len;

    const double half = 0.5 * mass;
    const double tie = 1e-12 * mass;
    double c = sorted.back().val;
    double acc = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        acc += sorted[i].len;
        if (std::fabs(acc - half) <= tie) {
            // exact split: the minimizer set is [val_i, val_{i+1}], take its midpoint
            c = (i + 1 < sorted.size()) ? 0.5 * (sorted[i].val + sorted[i + 1].val)
                                        : sorted[i].val;
            break;
        }
        if (acc > half) {
            c = sorted[i].val;
            break;
        }
    }

    double dev = 0.0;
    for (const auto& s : sorted) dev += s.len * std::fabs(s.val - c);
    return FunctionalResult{dev / mass, c, false, 0};
}

} // namespace

FunctionalResult minimize_on_cut(const std::vector<Segment>& cut, const ConvexWeight& Q,
                                 const OptimizerConfig& cfg) {
    if (cut.empty())
        throw argument_error("minimize_on_cut: empty segment list");

    double lo = cut.front().val, hi = lo;
    for (const auto& s : cut) {
        lo = std::min(lo, s.val);
        hi = std::max(hi, s.val);
    }
    if (lo == hi) // constant on the interval: c = the value, exactly
        return FunctionalResult{Q.eval(0.0), lo, Q.strictly_convex(), 0};

    switch (Q.fast_path()) {
        case FastPath::Mean:
            return minimize_mean(cut, Q);
        case FastPath::Median:
            return minimize_median(cut);
        case FastPath::None:
            break;
    }
    return golden_min([&](double c) { return average_on_cut(cut, c, Q); }, lo, hi, cfg.c_tol,
                      Q.strictly_convex());
}

std::vector<double> inner_breakpoints(const StepFunction& f, Interval J) {
    std::vector<double> pts;
    for (double x : f.breakpoints())
        if (x > J.a && x < J.b) pts.push_back(x);
    return pts;
}

} // namespace detail

double deviation_average(const StepFunction& f, Interval J, double c, const ConvexWeight& Q) {
    if (!std::isfinite(c))
        throw argument_error("deviation_average: shift constant must be finite");
    std::vector<Segment> cut;
    cut_segments(f, J, cut);
    return detail::average_on_cut(cut, c, Q);
}

FunctionalResult min_deviation(const StepFunction& f, Interval J, const ConvexWeight& Q,
                               const OptimizerConfig& cfg) {
    cfg.validate();
    std::vector<Segment> cut;
    cut_segments(f, J, cut);
    return detail::minimize_on_cut(cut, Q, cfg);
}

namespace {

/// Running best over all objective evaluations; ties in value go to the
/// lexicographically smallest (a, b) so results are order-independent.
struct BestTracker {
    double value = -std::numeric_limits<double>::infinity();
    double a = 0.0, b = 0.0;
    long evals = 0;
    bool any = false;

    void offer(double v, double lo, double hi) {
        ++evals;
        if (!any || v > value ||
            (v == value && (lo < a || (lo == a && hi < b)))) {
            value = v;
            a = lo;
            b = hi;
            any = true;
        }
    }
};

/// Bracket width at which endpoint line searches stop; the value error at
/// a smooth interior maximum is quadratic in this, so 1e-7 of endpoint
/// resolution yields far better than 1e-9 in value.
constexpr double kLineTol = 1e-7;

/// Golden-section *maximum* of g on [lo, hi], capped at max_iters
/// evaluations; every probe goes through g itself (which feeds the
/// running-best tracker).
template <typename G>
double golden_max_arg(G&& g, double lo, double hi, int max_iters) {
    constexpr double r = 0.6180339887498949; // (sqrt(5) - 1) / 2
    double a = lo, b = hi;
    double x1 = b - r * (b - a);
    double x2 = a + r * (b - a);
    double f1 = g(x1), f2 = g(x2);
    int iters = 2;
    while (b - a > kLineTol && iters < max_iters) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = g(x2);
        }
        ++iters;
    }
    const double mid = 0.5 * (a + b);
    g(mid);
    return mid;
}

struct ScoredCandidate {
    double value, a, b;
};

} // namespace

SupremumResult sup_search(Interval J, const std::vector<double>& inner_points,
                          const IntervalObjective& objective, const OptimizerConfig& cfg) {
    cfg.validate();
    const double min_w = std::max(1e-13, 1e-11 * J.length());
    BestTracker best;
    auto eval = [&](double a, double b) {
        const double v = objective(a, b);
        best.offer(v, a, b);
        return v;
    };

    // ---- candidate stage: breakpoint pairs + symmetric straddles ----
    std::vector<double> pts;
    pts.reserve(inner_points.size() + 2);
    pts.push_back(J.a);
    for (double x : inner_points)
        if (x > J.a && x < J.b) pts.push_back(x);
    pts.push_back(J.b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<ScoredCandidate> cands;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[j] - pts[i] >= min_w)
                cands.push_back({eval(pts[i], pts[j]), pts[i], pts[j]});

    static constexpr double kStraddleScales[] = {1.0, 0.25, 0.0625};
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        const double x = pts[i];
        const double s_max = std::min(x - pts[i - 1], pts[i + 1] - x);
        for (double scale : kStraddleScales) {
            const double s = scale * s_max;
            if (2.0 * s >= min_w)
                cands.push_back({eval(x - s, x + s), x - s, x + s});
        }
    }

    const double stage_best = best.value;

    // ---- refinement stage: coordinate-wise line searches on the leaders ----
    std::sort(cands.begin(), cands.end(), [](const ScoredCandidate& x, const ScoredCandidate& y) {
        if (x.value != y.value) return x.value > y.value;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    const std::size_t top = std::min<std::size_t>(cands.size(), cfg.multistart_top);

    constexpr int kMaxPasses = 4;
    for (std::size_t t = 0; t < top; ++t) {
        double a = cands[t].a, b = cands[t].b;
        double current = cands[t].value;
        for (int pass = 0; pass < kMaxPasses; ++pass) {
            if (b - min_w > J.a)
                a = golden_max_arg([&](double x) { return eval(x, b); }, J.a, b - min_w,
                                   cfg.refine_iters);
            if (a + min_w < J.b)
                b = golden_max_arg([&](double x) { return eval(a, x); }, a + min_w, J.b,
                                   cfg.refine_iters);
            const double now = eval(a, b);
            if (now <= current + cfg.w_rel_tol * std::max(1.0, std::fabs(now))) break;
            current = now;
        }
    }

    SupremumResult res;
    res.value = best.value;
    res.witness = Interval(best.a, best.b);
    res.method = best.value > stage_best ? SupMethod::RefinedLocal : SupMethod::BreakpointEnum;
    res.evaluations = best.evals;
    return res;
}

SupremumResult sup_grid(Interval J, const IntervalObjective& objective, int resolution) {
    if (resolution < 1)
        throw argument_error("sup_grid: resolution must be >= 1");
    const double h = J.length() / resolution;
    std::vector<double> pts(static_cast<std::size_t>(resolution) + 1);
    for (int i = 0; i <= resolution; ++i) pts[static_cast<std::size_t>(i)] = J.a + i * h;
    pts.back() = J.b;

    BestTracker best;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best.offer(objective(pts[i], pts[j]), pts[i], pts[j]);

    SupremumResult res;
    res.value = best.value;
    res.witness = Interval(best.a, best.b);
    res.method = SupMethod::GridOracle;
    res.evaluations = best.evals;
    return res;
}

SupremumResult sup_deviation(const StepFunction& f, Interval J, const ConvexWeight& Q,
                             const OptimizerConfig& cfg) {
    std::vector<Segment> buf;
    IntervalObjective obj = [&f, &Q, &cfg, buf](double a, double b) mutable {
        cut_segments(f, Interval(a, b), buf);
        return detail::minimize_on_cut(buf, Q, cfg).value;
    };
    return sup_search(J, detail::inner_breakpoints(f, J), obj, cfg);
}

SupremumResult sup_deviation_grid(const StepFunction& f, Interval J, const ConvexWeight& Q,
                                  int resolution, const OptimizerConfig& cfg) {
    cfg.validate();
    std::vector<Segment> buf;
    IntervalObjective obj = [&f, &Q, &cfg, buf](double a, double b) mutable {
        cut_segments(f, Interval(a, b), buf);
        return detail::minimize_on_cut(buf, Q, cfg).value;
    };
    return sup_grid(J, obj, resolution);
}

} // namespace osclab
