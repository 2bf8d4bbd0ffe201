#include "osclab/bellman.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "osclab/record.hpp"

namespace osclab {

void BellmanParams::validate(const ConvexWeight& Q) const {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw argument_error("BellmanParams: epsilon must be positive");
    if (!std::isfinite(epsilon_tilde) || epsilon_tilde <= 0.0 || epsilon_tilde >= epsilon)
        throw argument_error("BellmanParams: epsilon_tilde must lie in (0, epsilon)");
    const double q_eps = Q.eval(epsilon);
    const double q_et = Q.eval(epsilon_tilde);
    if (!(q_eps > q_et))
        throw argument_error("BellmanParams: Q(epsilon) must exceed Q(epsilon_tilde)");
    const double cap = std::min(0.5, 1.0 - q_et / q_eps);
    if (!std::isfinite(delta) || delta <= 0.0 || delta >= cap)
        throw argument_error("BellmanParams: delta must lie in (0, min(1/2, 1 - Q(et)/Q(eps)))");
}

double bellman_value(const StepFunction& f, Interval J, double epsilon, const ConvexWeight& Q,
                     const OptimizerConfig& cfg) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw argument_error("bellman_value: epsilon must be positive");
    if (!Q.strictly_convex())
        throw argument_error("bellman_value: requires a strictly convex weight");
    const double q_eps = Q.eval(epsilon);
    const double v_eps = deviation_average(f, J, epsilon, Q);
    if (q_eps >= v_eps) return 0.0;
    const double c_star = min_deviation(f, J, Q, cfg).c_star;
    if (c_star >= epsilon) return 0.0;
    return q_eps - v_eps;
}

double split_concat_value(const StepFunction& f, Interval J, double t, double alpha, double c,
                          const ConvexWeight& Q) {
    if (!(t > 0.0) || !(t < 1.0))
        throw argument_error("split_concat_value: t must lie in (0, 1)");
    const double cut = J.a + t * J.length();
    const StepFunction left = restrict(f, Interval(J.a, cut));
    const StepFunction right = restrict(f, Interval(cut, J.b));
    const StepFunction glued = concatenate(left, right, alpha);
    return deviation_average(glued, glued.domain(), c, Q);
}

SplitResult split_search(const StepFunction& f, Interval J, const BellmanParams& params,
                         const ConvexWeight& Q, const OptimizerConfig& cfg) {
    params.validate(Q);
    cfg.validate();
    if (!Q.strictly_convex())
        throw argument_error("split_search: requires a strictly convex weight");

    const double q_et = Q.eval(params.epsilon_tilde);
    const double budget_slack = 1e-12 * std::max(1.0, q_et);
    const double w_est = sup_deviation(f, J, Q, cfg).value;
    if (w_est > q_et + budget_slack)
        throw contract_error("split_search: sup estimate " + format_float(w_est) +
                             " exceeds the budget Q(epsilon_tilde) = " + format_float(q_et));

    const double c = min_deviation(f, J, Q, cfg).c_star;
    const double q_eps = Q.eval(params.epsilon);
    auto psi1 = [&](double t) { return split_concat_value(f, J, t, 1.0, c, Q); };

    const double delta = params.delta;
    double t_final;
    if (psi1(delta) <= q_eps) {
        t_final = delta;
    } else {
        double lo = delta, hi = 1.0 - delta;
        if (psi1(hi) > q_eps)
            throw contract_error("split_search: certificate fails across the whole cut range");
        t_final = hi;
        while (hi - lo > 1e-10) {
            const double mid = 0.5 * (lo + hi);
            const double v = psi1(mid);
            if (std::fabs(v - q_eps) < 1e-10) {
                t_final = mid;
                break;
            }
            if (v > q_eps)
                lo = mid;
            else
                hi = mid;
            t_final = hi; // the feasible endpoint (psi <= Q(eps)) of the bracket
        }
    }

    SplitResult res;
    res.t = t_final;
    res.c_used = c;
    res.psi_left = split_concat_value(f, J, t_final, 0.0, c, Q);
    res.psi_right = split_concat_value(f, J, t_final, 1.0, c, Q);
    return res;
}

Verdict concavity_check(const StepFunction& f_minus, const StepFunction& f_plus, double epsilon,
                        const ConvexWeight& Q, const std::vector<double>& alphas,
                        const OptimizerConfig& cfg, double tol) {
    if (alphas.empty())
        throw argument_error("concavity_check: at least one alpha is required");
    for (double a : alphas)
        if (!std::isfinite(a) || a < 0.0 || a > 1.0)
            throw argument_error("concavity_check: alphas must lie in [0, 1]");

    const double q_eps = Q.eval(epsilon);
    const double slack = 1e-12 * std::max(1.0, q_eps);
    const Interval Im = f_minus.domain(), Ip = f_plus.domain();

    // Hypothesis certificate 1: one shift constant keeps both halves within
    // budget. By linearity of the shifted average in alpha, that bounds every
    // concatenation at once. Candidate constants come from the optimal
    // constants of the alpha = 0, 1/2, 1 concatenations.
    bool certified = false;
    for (double a0 : {0.0, 0.5, 1.0}) {
        const StepFunction glued = concatenate(f_minus, f_plus, a0);
        const double c = min_deviation(glued, glued.domain(), Q, cfg).c_star;
        if (deviation_average(f_minus, Im, c, Q) <= q_eps + slack &&
            deviation_average(f_plus, Ip, c, Q) <= q_eps + slack) {
            certified = true;
            break;
        }
    }
    // Hypothesis certificate 2: direct screen of the minimized value on a
    // 21-point alpha grid (the minimized value is not linear in alpha, so
    // this is a safeguard, not a proof).
    if (certified) {
        for (int i = 0; i <= 20 && certified; ++i) {
            const double a0 = i / 20.0;
            const StepFunction glued = concatenate(f_minus, f_plus, a0);
            if (min_deviation(glued, glued.domain(), Q, cfg).value > q_eps + slack)
                certified = false;
        }
    }
    if (!certified) return Verdict::skipped;

    const double g_minus = bellman_value(f_minus, Im, epsilon, Q, cfg);
    const double g_plus = bellman_value(f_plus, Ip, epsilon, Q, cfg);
    for (double a : alphas) {
        const StepFunction glued = concatenate(f_minus, f_plus, a);
        const double g_mix = bellman_value(glued, glued.domain(), epsilon, Q, cfg);
        if (g_mix < a * g_minus + (1.0 - a) * g_plus - tol) return Verdict::fail;
    }
    return Verdict::pass;
}

namespace {

void require_dichotomy_preconditions(const StepFunction& f, Interval J, double lo_required,
                                     double hi_required, bool check_range, double epsilon,
                                     const ConvexWeight& Q, const OptimizerConfig& cfg) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw argument_error("dichotomy: epsilon must be positive");
    if (!Q.strictly_convex())
        throw argument_error("dichotomy: requires a strictly convex weight");
    const auto [lo, hi] = range_on(f, J);
    if (check_range) {
        const double pad = 1e-12 * std::max({1.0, std::fabs(lo_required), std::fabs(hi_required)});
        if (lo < lo_required - pad || hi > hi_required + pad)
            throw contract_error("dichotomy: values leave the required range [" +
                                 format_float(lo_required) + ", " + format_float(hi_required) +
                                 "]");
    }
    const double w_est = sup_deviation(f, J, Q, cfg).value;
    const double q_eps = Q.eval(epsilon);
    if (!(w_est < q_eps))
        throw contract_error("dichotomy: sup estimate " + format_float(w_est) +
                             " is not below Q(epsilon) = " + format_float(q_eps));
}

} // namespace

bool dichotomy_check(const StepFunction& f, Interval J, double epsilon, const ConvexWeight& Q,
                     const OptimizerConfig& cfg, double tol) {
    require_dichotomy_preconditions(f, J, 0.0, 0.0, false, epsilon, Q, cfg);
    const auto [lo, hi] = range_on(f, J);
    (void)hi;
    if (lo < 0.0)
        throw contract_error("dichotomy: function must be non-negative on J");

    const double c_star = min_deviation(f, J, Q, cfg).c_star;
    if (c_star >= epsilon - tol) return true;
    return deviation_average(f, J, epsilon, Q) <= Q.eval(epsilon) + tol;
}

bool corollary_check(const StepFunction& f, Interval J, double A, double B, double epsilon,
                     const ConvexWeight& Q, const OptimizerConfig& cfg, double tol) {
    if (!std::isfinite(A) || !std::isfinite(B) || !(A <= B))
        throw argument_error("corollary_check: requires finite A <= B");
    require_dichotomy_preconditions(f, J, A, B, true, epsilon, Q, cfg);

    const double c_star = min_deviation(f, J, Q, cfg).c_star;
    const bool lower = (c_star >= A + epsilon - tol) ||
                       (deviation_average(f, J, A + epsilon, Q) <= Q.eval(epsilon) + tol);
    const bool upper = (c_star <= B - epsilon + tol) ||
                       (deviation_average(f, J, B - epsilon, Q) <= Q.eval(epsilon) + tol);
    return lower && upper;
}

bool local_limit_check(const StepFunction& f, double s, const ConvexWeight& Q,
                       const OptimizerConfig& cfg, double tol) {
    if (!Q.strictly_convex())
        throw argument_error("local_limit_check: requires a strictly convex weight");
    if (!f.domain().contains(s))
        throw domain_error("local_limit_check: point outside the domain");

    const auto& bp = f.breakpoints();
    for (double x : bp)
        if (s == x)
            throw argument_error("local_limit_check: limits are checked away from breakpoints");

    auto it = std::upper_bound(bp.begin(), bp.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - bp.begin()) - 1;
    const double dist = std::min(s - bp[i], bp[i + 1] - s);
    const double y = f.value_at(s);

    int n = 1;
    while (n < 60 && std::ldexp(1.0, -n) >= dist) ++n;
    if (n >= 60) throw argument_error("local_limit_check: point too close to a breakpoint");

    static constexpr double kProbeShifts[] = {0.0, 0.3, -0.7, 1.1};
    for (int step = 0; step < 3; ++step, ++n) {
        const double h = std::ldexp(1.0, -n);
        const Interval Jn(s - h, s + h);
        for (double dc : kProbeShifts) {
            const double expected = Q.eval(dc);
            const double got = deviation_average(f, Jn, y - dc, Q);
            if (std::fabs(got - expected) > tol * std::max(1.0, expected)) return false;
        }
        const FunctionalResult r = min_deviation(f, Jn, Q, cfg);
        if (std::fabs(r.c_star - y) > cfg.c_tol) return false;
        if (std::fabs(r.value - Q.eval(0.0)) > tol * std::max(1.0, Q.eval(0.0))) return false;
    }
    return true;
}

std::optional<double> pick_epsilon_tilde(const StepFunction& f, Interval J, double epsilon,
                                         const ConvexWeight& Q, const OptimizerConfig& cfg) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw argument_error("pick_epsilon_tilde: epsilon must be positive");
    const double w_est = sup_deviation(f, J, Q, cfg).value;
    for (int j = 1; j <= 52; ++j) {
        const double et = epsilon * (1.0 - std::ldexp(1.0, -j));
        if (w_est <= Q.eval(et)) return et;
    }
    return std::nullopt;
}

double default_delta(double epsilon_tilde, double epsilon, const ConvexWeight& Q) {
    if (!(epsilon_tilde > 0.0) || !(epsilon_tilde < epsilon))
        throw argument_error("default_delta: requires 0 < epsilon_tilde < epsilon");
    return 0.5 * std::min(0.5, 1.0 - Q.eval(epsilon_tilde) / Q.eval(epsilon));
}

InductionResult simulate_induction(const StepFunction& f, Interval J, const BellmanParams& params,
                                   const ConvexWeight& Q, const OptimizerConfig& cfg,
                                   const InductionOptions& options) {
    if (options.depth < 0 || options.depth > 12)
        throw argument_error("simulate_induction: depth must lie in [0, 12]");
    if (!(options.min_piece > 0.0))
        throw argument_error("simulate_induction: min_piece must be positive");
    params.validate(Q);

    InductionResult result;
    result.options = options;
    result.level_sums.assign(static_cast<std::size_t>(options.depth) + 1, 0.0);

    struct Live {
        long index;
        Interval piece;
        std::size_t node_pos; // into result.nodes
    };

    std::vector<Live> level, next;
    double frozen = 0.0; // weighted g of leaves truncated before the final depth

    auto emit = [&](int depth, long index, Interval piece) {
        InductionNode node;
        node.depth = depth;
        node.index = index;
        node.a = piece.a;
        node.b = piece.b;
        node.g = bellman_value(f, piece, params.epsilon, Q, cfg);
        result.nodes.push_back(node);
        result.level_sums[static_cast<std::size_t>(depth)] += piece.length() * node.g;
        return result.nodes.size() - 1;
    };

    level.push_back({0, J, emit(0, 0, J)});
    for (int d = 0; d < options.depth; ++d) {
        next.clear();
        for (const Live& item : level) {
            if (item.piece.length() < options.min_piece) {
                result.nodes[item.node_pos].truncated = true;
                frozen += item.piece.length() * result.nodes[item.node_pos].g;
                continue;
            }
            const SplitResult sr = split_search(f, item.piece, params, Q, cfg);
            InductionNode& node = result.nodes[item.node_pos];
            node.has_split = true;
            node.t = sr.t;
            node.psi_left = sr.psi_left;
            node.psi_right = sr.psi_right;

            const double cut = item.piece.a + sr.t * item.piece.length();
            const Interval left(item.piece.a, cut), right(cut, item.piece.b);
            next.push_back({2 * item.index, left, emit(d + 1, 2 * item.index, left)});
            next.push_back({2 * item.index + 1, right, emit(d + 1, 2 * item.index + 1, right)});
        }
        result.level_sums[static_cast<std::size_t>(d) + 1] += frozen;
        level.swap(next);
    }
    return result;
}

void write_induction_csv(const InductionResult& result, std::ostream& os) {
    os << "depth,node_index,a,b,t,g_value,psi_left,psi_right\n";
    for (const auto& n : result.nodes) {
        os << n.depth << ',' << n.index << ',' << format_float(n.a) << ',' << format_float(n.b)
           << ',';
        if (n.has_split)
            os << format_float(n.t) << ',' << format_float(n.g) << ',' << format_float(n.psi_left)
               << ',' << format_float(n.psi_right) << '\n';
        else
            os << ',' << format_float(n.g) << ",,\n";
    }
}

} // namespace osclab
