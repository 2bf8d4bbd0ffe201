#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "osclab/functionals.hpp"
#include "osclab/transforms.hpp"

namespace osclab {

/// Budget parameters for the splitting machinery.
struct BellmanParams {
    double epsilon = 1.0;
    double epsilon_tilde = 0.5;
    double delta = 0.1;

    /// Requires 0 < epsilon_tilde < epsilon,
    /// 0 < delta < min(1/2, 1 - Q(epsilon_tilde)/Q(epsilon)), and
    /// Q(epsilon) > Q(epsilon_tilde).
    void validate(const ConvexWeight& Q) const;
};

/// Outcome of split_search: the cut parameter and its certificate.
struct SplitResult {
    double t = 0.0;         ///< cut position as a fraction of |J|, in [delta, 1-delta]
    double c_used = 0.0;    ///< the optimal constant of the parent interval
    double psi_left = 0.0;  ///< certificate value at alpha = 0 (right half only)
    double psi_right = 0.0; ///< certificate value at alpha = 1 (left half only)
};

/// Three-way outcome for hypothesis-guarded checks: `skipped` means the
/// hypothesis could not be certified, so the claim is not in play.
enum class Verdict { pass, fail, skipped };

/// Penalty value on (f, J): zero when Q(eps) >= the eps-shifted average or
/// when the optimal constant is >= eps; otherwise Q(eps) minus that
/// average (always <= 0). Q must be strictly convex.
double bellman_value(const StepFunction& f, Interval J, double epsilon, const ConvexWeight& Q,
                     const OptimizerConfig& cfg = {});

/// Find a cut t in [delta, 1-delta] of J such that every alpha-concatenation
/// of the two rescaled halves keeps its c_used-shifted average within
/// Q(epsilon). By linearity in alpha, the two endpoint values psi_left and
/// psi_right are a complete certificate.
///
/// Requires the sup estimate of f over J to be <= Q(epsilon_tilde)
/// (contract_error otherwise) and a strictly convex Q. If the certificate
/// already holds at t = delta it is returned directly; otherwise the
/// crossing of psi(t, 1) = Q(epsilon) is bisected (t-bracket 1e-10 or
/// |psi - Q(eps)| < 1e-10, accepting the endpoint with smaller psi).
SplitResult split_search(const StepFunction& f, Interval J, const BellmanParams& params,
                         const ConvexWeight& Q, const OptimizerConfig& cfg = {});

/// The concatenation value psi(t, alpha) used by split_search, exposed so
/// certificates can be re-evaluated independently: cut J at fraction t,
/// rescale the halves onto [0, alpha) and [alpha, 1], and take the
/// c-shifted average of the glued function.
double split_concat_value(const StepFunction& f, Interval J, double t, double alpha, double c,
                          const ConvexWeight& Q);

/// Verify superadditivity of the penalty under concatenation:
/// value(glue_alpha) >= alpha * value(left) + (1 - alpha) * value(right)
/// at every supplied alpha, within tol.
///
/// The hypothesis (every concatenation stays within the Q(eps) budget) is
/// certified first: a common shift constant that keeps both halves within
/// budget (checked at the optimal constants of the alpha = 0, 1/2, 1
/// concatenations) plus a 21-point alpha grid on the minimized value.
/// Returns Verdict::skipped when certification fails.
Verdict concavity_check(const StepFunction& f_minus, const StepFunction& f_plus, double epsilon,
                        const ConvexWeight& Q, const std::vector<double>& alphas,
                        const OptimizerConfig& cfg = {}, double tol = 1e-8);

/// For non-negative bounded f with sup estimate < Q(eps): either the
/// optimal constant is >= eps - tol, or the eps-shifted average is
/// <= Q(eps) + tol. Throws contract_error when the preconditions fail.
bool dichotomy_check(const StepFunction& f, Interval J, double epsilon, const ConvexWeight& Q,
                     const OptimizerConfig& cfg = {}, double tol = 1e-9);

/// Two-sided version for f with values in [A, B]: the dichotomy holds at
/// the shifted level A + eps and, reflected, at B - eps.
bool corollary_check(const StepFunction& f, Interval J, double A, double B, double epsilon,
                     const ConvexWeight& Q, const OptimizerConfig& cfg = {}, double tol = 1e-9);

/// Shrinking-interval limits at a point s strictly inside a segment: on
/// J_n = [s - 2^-n, s + 2^-n], once J_n is inside the segment, the shifted
/// averages equal Q(f(s) - c) exactly (checked at probe constants, within
/// tol) and the optimal constant equals f(s) within cfg.c_tol. Throws
/// argument_error when s sits at a breakpoint.
bool local_limit_check(const StepFunction& f, double s, const ConvexWeight& Q,
                       const OptimizerConfig& cfg = {}, double tol = 1e-10);

/// Smallest budget level epsilon_tilde on the grid eps*(1 - 2^-j),
/// j = 1, 2, ..., whose Q-value dominates the sup estimate of f over J;
/// nullopt when even the finest grid level fails.
std::optional<double> pick_epsilon_tilde(const StepFunction& f, Interval J, double epsilon,
                                         const ConvexWeight& Q, const OptimizerConfig& cfg = {});

/// Convention for the cut-fraction bound: half of min(1/2, 1 - Q(et)/Q(eps)).
double default_delta(double epsilon_tilde, double epsilon, const ConvexWeight& Q);

/// Recursive splitting simulation.
struct InductionOptions {
    int depth = 8;          ///< number of splitting generations (<= 12)
    double min_piece = 1e-9; ///< pieces below this length stop splitting (flagged)
};

struct InductionNode {
    int depth = 0;
    long index = 0; ///< position within its level (children of i are 2i, 2i+1)
    double a = 0.0, b = 0.0;
    double g = 0.0; ///< penalty value on this piece
    bool has_split = false;
    double t = 0.0, psi_left = 0.0, psi_right = 0.0; ///< valid when has_split
    bool truncated = false; ///< piece was too small to split further
};

struct InductionResult {
    std::vector<InductionNode> nodes; ///< breadth-first order
    /// level_sums[d] = sum of |piece| * g over the frontier at depth d
    /// (pieces at depth d plus earlier truncated leaves).
    std::vector<double> level_sums;
    InductionOptions options;
};

/// Split J recursively `depth` times with split_search, recording the
/// penalty value of every piece and the per-level weighted sums.
InductionResult simulate_induction(const StepFunction& f, Interval J, const BellmanParams& params,
                                   const ConvexWeight& Q, const OptimizerConfig& cfg = {},
                                   const InductionOptions& options = {});

/// Trace rows: depth,node_index,a,b,t,g_value,psi_left,psi_right
/// (t and psi columns are empty for leaves).
void write_induction_csv(const InductionResult& result, std::ostream& os);

} // namespace osclab
