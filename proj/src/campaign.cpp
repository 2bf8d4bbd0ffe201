#include "osclab/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <thread>

#include "osclab/bellman.hpp"
#include "osclab/classes.hpp"

namespace osclab {

namespace {

constexpr double kPExponents[] = {1.0, 1.5, 2.0, 3.0};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

/// Everything a check runner needs for one sample.
struct SampleContext {
    const CampaignConfig& cfg;
    long sample_id;
    std::uint64_t seed;

    /// The sample function shared by all checks of this sample.
    StepFunction base_phi() const {
        SplitMix64 rng(seed);
        return gen_random_step(rng, cfg.max_segments, cfg.value_lo, cfg.value_hi);
    }

    /// Non-negative variant (for the dichotomy-family checks).
    StepFunction nonneg_phi() const {
        SplitMix64 rng(seed);
        const double hi = std::max(cfg.value_hi, 0.5);
        return gen_random_step(rng, cfg.max_segments, 0.0, hi);
    }

    /// Independent auxiliary stream, stable per (sample, check).
    SplitMix64 aux(const char* check_name) const {
        return SplitMix64(seed ^ fnv1a(check_name));
    }

    /// Weight for cycling checks: sample-indexed pick from the config list.
    ConvexWeight cycling_weight() const {
        const auto& ws = cfg.weights;
        return parse_weight(ws[static_cast<std::size_t>(sample_id) % ws.size()]);
    }

    /// Same, restricted to strictly convex weights (falls back to power:2).
    ConvexWeight cycling_strict_weight() const {
        std::vector<ConvexWeight> strict;
        for (const auto& d : cfg.weights) {
            ConvexWeight w = parse_weight(d);
            if (w.strictly_convex()) strict.push_back(std::move(w));
        }
        if (strict.empty()) return ConvexWeight::power(2.0);
        return strict[static_cast<std::size_t>(sample_id) % strict.size()];
    }

    CampaignRecord record(const std::string& check, const std::string& weight) const {
        CampaignRecord r;
        r.sample_id = sample_id;
        r.seed = seed;
        r.check = check;
        r.weight = weight;
        return r;
    }
};

StepFunction scale_values(const StepFunction& f, double rho) {
    return f.map_values([rho](double v) { return rho * v; });
}

/// Grid recheck for a failing sup-deviation inequality record: recompute
/// both sides at 4x resolution; the rechecked slack becomes authoritative.
void grid_recheck(CampaignRecord& rec, const StepFunction& lhs_f, const StepFunction& rhs_f,
                  const ConvexWeight& Q, const OptimizerConfig& opt, double root_p) {
    const int fine = 4 * opt.grid_resolution;
    const double gl = sup_deviation_grid(lhs_f, lhs_f.domain(), Q, fine, opt).value;
    const double gr = sup_deviation_grid(rhs_f, rhs_f.domain(), Q, fine, opt).value;
    rec.has_oracle = true;
    rec.oracle_lhs = root_p == 1.0 ? gl : std::pow(gl, 1.0 / root_p);
    rec.oracle_rhs = root_p == 1.0 ? gr : std::pow(gr, 1.0 / root_p);
    rec.slack = rec.oracle_rhs - rec.oracle_lhs;
    rec.status = status_from_slack(rec.slack, rec.tol);
}

/// Classic-variant analogue of the grid oracle: the mean-pinned average over
/// every grid pair. Used for authoritative rechecks of classic-norm records.
double classic_grid_value(const StepFunction& f, const ConvexWeight& Q, int resolution) {
    const Interval D = f.domain();
    const double h = D.length() / resolution;
    std::vector<double> pts(static_cast<std::size_t>(resolution) + 1);
    for (int i = 0; i <= resolution; ++i) pts[static_cast<std::size_t>(i)] = D.a + i * h;
    pts.back() = D.b;
    std::vector<Segment> buf;
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            cut_segments(f, Interval(pts[i], pts[j]), buf);
            double mass = 0.0, acc = 0.0;
            for (const auto& s : buf) {
                mass += s.len;
                acc += s.len * s.val;
            }
            best = std::max(best, detail::average_on_cut(buf, acc / mass, Q));
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// check runners
// ---------------------------------------------------------------------------

void check_theorem1(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    const StepFunction phi = ctx.base_phi();
    for (const auto& wd : ctx.cfg.weights) {
        CampaignRecord rec =
            verify_rearrangement(phi, parse_weight(wd), ctx.cfg.optimizer, ctx.cfg.violation_tol);
        rec.sample_id = ctx.sample_id;
        rec.seed = ctx.seed;
        out.push_back(std::move(rec));
    }
}

void check_bmo_corollary(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    const StepFunction phi = ctx.base_phi();
    const StepFunction sorted = rearrange_decreasing(phi);
    for (double p : kPExponents) {
        Stopwatch sw;
        const ConvexWeight Q = ConvexWeight::power(p);
        CampaignRecord rec = ctx.record("bmo_corollary", Q.descriptor());
        rec.lhs = bmo_norm_inf(sorted, p, ctx.cfg.optimizer);
        rec.rhs = bmo_norm_inf(phi, p, ctx.cfg.optimizer);
        rec.slack = rec.rhs - rec.lhs;
        rec.tol = ctx.cfg.violation_tol;
        rec.status = status_from_slack(rec.slack, rec.tol);
        if (rec.status == RecordStatus::fail || ctx.cfg.oracle_mode)
            grid_recheck(rec, sorted, phi, Q, ctx.cfg.optimizer, p);
        rec.runtime_ms = sw.ms();
        out.push_back(std::move(rec));
    }
}

void check_a2_corollary(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const StepFunction phi = ctx.base_phi();
    const StepFunction w = weight_from_phi(phi);
    const StepFunction w_sorted = rearrange_decreasing(w);
    CampaignRecord rec = ctx.record("a2_corollary", "exp");
    rec.lhs = a2_char_inf(w_sorted, ctx.cfg.optimizer);
    rec.rhs = a2_char_inf(w, ctx.cfg.optimizer);
    rec.slack = rec.rhs - rec.lhs;
    rec.tol = ctx.cfg.violation_tol;
    rec.status = status_from_slack(rec.slack, rec.tol);
    if (rec.status == RecordStatus::fail || ctx.cfg.oracle_mode)
        grid_recheck(rec, phi_from_weight(w_sorted), phi_from_weight(w),
                     ConvexWeight::exponential(), ctx.cfg.optimizer, 1.0);
    rec.runtime_ms = sw.ms();
    out.push_back(std::move(rec));
}

void check_klemes_p1(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const StepFunction phi = ctx.base_phi();
    const StepFunction sorted = rearrange_decreasing(phi);
    CampaignRecord rec = ctx.record("klemes_p1", "power:1");
    rec.lhs = bmo_norm_classic(sorted, 1.0, ctx.cfg.optimizer);
    rec.rhs = bmo_norm_classic(phi, 1.0, ctx.cfg.optimizer);
    rec.slack = rec.rhs - rec.lhs;
    rec.tol = ctx.cfg.violation_tol;
    rec.status = status_from_slack(rec.slack, rec.tol);
    if (rec.status == RecordStatus::fail || ctx.cfg.oracle_mode) {
        const ConvexWeight Q = ConvexWeight::power(1.0);
        const int fine = 4 * ctx.cfg.optimizer.grid_resolution;
        rec.has_oracle = true;
        rec.oracle_lhs = classic_grid_value(sorted, Q, fine);
        rec.oracle_rhs = classic_grid_value(phi, Q, fine);
        rec.slack = rec.oracle_rhs - rec.oracle_lhs;
        rec.status = status_from_slack(rec.slack, rec.tol);
    }
    rec.runtime_ms = sw.ms();
    out.push_back(std::move(rec));
}

void check_sandwich_bmo(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    const StepFunction phi = ctx.base_phi();
    for (double p : kPExponents) {
        Stopwatch sw;
        const NormReport rep = make_norm_report(phi, p, ctx.cfg.optimizer);
        const std::string wd = ConvexWeight::power(p).descriptor();

        CampaignRecord lo = ctx.record("sandwich_bmo_lower", wd);
        lo.lhs = rep.norm_inf_variant;
        lo.rhs = rep.norm_classic_variant;
        lo.slack = lo.rhs - lo.lhs;
        lo.tol = ctx.cfg.violation_tol;
        lo.lhs_witness = rep.inf_witness;
        lo.rhs_witness = rep.classic_witness;
        lo.status = status_from_slack(lo.slack, lo.tol);
        lo.runtime_ms = sw.ms() / 2;
        out.push_back(std::move(lo));

        CampaignRecord hi = ctx.record("sandwich_bmo_upper", wd);
        hi.lhs = rep.norm_classic_variant;
        hi.rhs = 2.0 * rep.norm_inf_variant;
        hi.slack = hi.rhs - hi.lhs;
        hi.tol = ctx.cfg.violation_tol;
        hi.lhs_witness = rep.classic_witness;
        hi.rhs_witness = rep.inf_witness;
        hi.status = status_from_slack(hi.slack, hi.tol);
        hi.runtime_ms = sw.ms() / 2;
        out.push_back(std::move(hi));
    }
}

void check_sandwich_a2(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const StepFunction phi = ctx.base_phi();
    const StepFunction w = weight_from_phi(phi);
    const A2Report rep = make_a2_report(w, ctx.cfg.optimizer);

    CampaignRecord lo = ctx.record("sandwich_a2_lower", "exp");
    lo.lhs = std::sqrt(rep.char_classic);
    lo.rhs = rep.char_inf_variant;
    lo.slack = lo.rhs - lo.lhs;
    lo.tol = ctx.cfg.violation_tol;
    lo.lhs_witness = rep.classic_witness;
    lo.rhs_witness = rep.inf_witness;
    lo.status = status_from_slack(lo.slack, lo.tol);
    lo.runtime_ms = sw.ms() / 3;
    out.push_back(std::move(lo));

    CampaignRecord hi = ctx.record("sandwich_a2_upper", "exp");
    hi.lhs = rep.char_inf_variant;
    hi.rhs = 2.0 * rep.char_classic;
    hi.slack = hi.rhs - hi.lhs;
    hi.tol = ctx.cfg.violation_tol;
    hi.lhs_witness = rep.inf_witness;
    hi.rhs_witness = rep.classic_witness;
    hi.status = status_from_slack(hi.slack, hi.tol);
    hi.runtime_ms = sw.ms() / 3;
    out.push_back(std::move(hi));

    CampaignRecord floor = ctx.record("a2_floor", "exp");
    floor.lhs = 1.0;
    floor.rhs = rep.char_classic;
    floor.slack = floor.rhs - 1.0;
    floor.tol = 1e-9;
    floor.rhs_witness = rep.classic_witness;
    floor.status = status_from_slack(floor.slack, floor.tol);
    floor.runtime_ms = sw.ms() / 3;
    out.push_back(std::move(floor));
}

void check_p2_equality(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const StepFunction phi = ctx.base_phi();
    const NormReport rep = make_norm_report(phi, 2.0, ctx.cfg.optimizer);
    CampaignRecord rec = ctx.record("p2_equality", "power:2");
    rec.lhs = rep.norm_inf_variant;
    rec.rhs = rep.norm_classic_variant;
    rec.slack = -std::fabs(rec.lhs - rec.rhs);
    rec.tol = 1e-8;
    rec.lhs_witness = rep.inf_witness;
    rec.rhs_witness = rep.classic_witness;
    rec.status = status_from_slack(rec.slack, rec.tol);
    rec.runtime_ms = sw.ms();
    out.push_back(std::move(rec));
}

void check_lipschitz(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const StepFunction phi = ctx.base_phi();
    SplitMix64 aux = ctx.aux("lipschitz");
    const LipschitzPL g = gen_lipschitz(aux, ctx.cfg.value_lo, ctx.cfg.value_hi);
    const StepFunction composed = compose_lipschitz(g, phi);
    const ConvexWeight Q = ctx.cycling_weight();

    CampaignRecord rec = ctx.record("lipschitz", Q.descriptor());
    const SupremumResult lhs = sup_deviation(composed, composed.domain(), Q, ctx.cfg.optimizer);
    const SupremumResult rhs = sup_deviation(phi, phi.domain(), Q, ctx.cfg.optimizer);
    rec.lhs = lhs.value;
    rec.rhs = rhs.value;
    rec.slack = rec.rhs - rec.lhs;
    rec.tol = ctx.cfg.violation_tol;
    rec.lhs_witness = lhs.witness;
    rec.rhs_witness = rhs.witness;
    rec.status = status_from_slack(rec.slack, rec.tol);
    if (rec.status == RecordStatus::fail || ctx.cfg.oracle_mode)
        grid_recheck(rec, composed, phi, Q, ctx.cfg.optimizer, 1.0);
    rec.runtime_ms = sw.ms();
    out.push_back(std::move(rec));
}

void check_truncation(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const StepFunction phi = ctx.base_phi();
    SplitMix64 aux = ctx.aux("truncation");
    double A = aux.uniform(ctx.cfg.value_lo, ctx.cfg.value_hi);
    double B = aux.uniform(ctx.cfg.value_lo, ctx.cfg.value_hi);
    if (A > B) std::swap(A, B);
    const StepFunction clipped = truncate(phi, A, B);
    const ConvexWeight Q = ctx.cycling_weight();

    CampaignRecord rec = ctx.record("truncation", Q.descriptor());
    const SupremumResult lhs = sup_deviation(clipped, clipped.domain(), Q, ctx.cfg.optimizer);
    const SupremumResult rhs = sup_deviation(phi, phi.domain(), Q, ctx.cfg.optimizer);
    rec.lhs = lhs.value;
    rec.rhs = rhs.value;
    rec.slack = rec.rhs - rec.lhs;
    rec.tol = ctx.cfg.violation_tol;
    rec.lhs_witness = lhs.witness;
    rec.rhs_witness = rhs.witness;
    rec.status = status_from_slack(rec.slack, rec.tol);
    if (rec.status == RecordStatus::fail || ctx.cfg.oracle_mode)
        grid_recheck(rec, clipped, phi, Q, ctx.cfg.optimizer, 1.0);
    rec.runtime_ms = sw.ms();
    out.push_back(std::move(rec));
}

void check_lemma1(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const ConvexWeight Q = ctx.cycling_strict_weight();
    const double eps = 1.0;
    const double budget = Q.eval(0.5 * eps);
    const Interval D(0.0, 1.0);

    StepFunction phi = ctx.base_phi();
    bool prepared = false;
    for (int iter = 0; iter < 80; ++iter) {
        if (sup_deviation(phi, D, Q, ctx.cfg.optimizer).value <= budget) {
            prepared = true;
            break;
        }
        phi = scale_values(phi, 0.8);
    }

    const auto epsilon_tilde =
        prepared ? pick_epsilon_tilde(phi, D, eps, Q, ctx.cfg.optimizer) : std::nullopt;
    if (!epsilon_tilde) {
        CampaignRecord rec = ctx.record("lemma1_certificate", Q.descriptor());
        rec.status = RecordStatus::skipped;
        rec.runtime_ms = sw.ms();
        out.push_back(std::move(rec));
        return;
    }

    BellmanParams params;
    params.epsilon = eps;
    params.epsilon_tilde = *epsilon_tilde;
    params.delta = default_delta(params.epsilon_tilde, eps, Q);

    const SplitResult sr = split_search(phi, D, params, Q, ctx.cfg.optimizer);
    const double q_eps = Q.eval(eps);
    // Re-evaluate the certificate independently of split_search's own values.
    const double psi0 = split_concat_value(phi, D, sr.t, 0.0, sr.c_used, Q);
    const double psi1 = split_concat_value(phi, D, sr.t, 1.0, sr.c_used, Q);

    CampaignRecord cert = ctx.record("lemma1_certificate", Q.descriptor());
    cert.lhs = std::max(psi0, psi1);
    cert.rhs = q_eps;
    cert.slack = cert.rhs - cert.lhs;
    cert.tol = 1e-9;
    cert.status = status_from_slack(cert.slack, cert.tol);
    cert.runtime_ms = sw.ms();
    out.push_back(std::move(cert));

    CampaignRecord range = ctx.record("lemma1_range", Q.descriptor());
    range.lhs = sr.t;
    range.rhs = params.delta;
    range.slack = std::min(sr.t - params.delta, (1.0 - params.delta) - sr.t);
    range.tol = 1e-12;
    range.status = status_from_slack(range.slack, range.tol);
    out.push_back(std::move(range));

    CampaignRecord ident = ctx.record("lemma1_identity", Q.descriptor());
    ident.lhs = split_concat_value(phi, D, sr.t, sr.t, sr.c_used, Q);
    ident.rhs = deviation_average(phi, D, sr.c_used, Q);
    ident.slack = -std::fabs(ident.lhs - ident.rhs);
    ident.tol = 1e-10;
    ident.status = status_from_slack(ident.slack, ident.tol);
    out.push_back(std::move(ident));
}

void check_lemma2(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const ConvexWeight Q = ctx.cycling_strict_weight();
    const double eps = 1.0;
    static constexpr double kAlphas[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const std::vector<double> alphas(std::begin(kAlphas), std::end(kAlphas));

    StepFunction f_minus = ctx.base_phi();
    SplitMix64 aux = ctx.aux("lemma2");
    StepFunction f_plus =
        gen_random_step(aux, ctx.cfg.max_segments, ctx.cfg.value_lo, ctx.cfg.value_hi);

    Verdict verdict = Verdict::skipped;
    for (int iter = 0; iter < 40; ++iter) {
        verdict = concavity_check(f_minus, f_plus, eps, Q, alphas, ctx.cfg.optimizer, 1e-8);
        if (verdict != Verdict::skipped) break;
        f_minus = scale_values(f_minus, 0.7);
        f_plus = scale_values(f_plus, 0.7);
    }

    CampaignRecord rec = ctx.record("lemma2", Q.descriptor());
    rec.tol = 1e-8;
    if (verdict == Verdict::skipped) {
        rec.status = RecordStatus::skipped;
    } else {
        const double g_minus =
            bellman_value(f_minus, f_minus.domain(), eps, Q, ctx.cfg.optimizer);
        const double g_plus = bellman_value(f_plus, f_plus.domain(), eps, Q, ctx.cfg.optimizer);
        double margin = std::numeric_limits<double>::infinity();
        for (double a : alphas) {
            const StepFunction glued = concatenate(f_minus, f_plus, a);
            const double g_mix = bellman_value(glued, glued.domain(), eps, Q, ctx.cfg.optimizer);
            margin = std::min(margin, g_mix - (a * g_minus + (1.0 - a) * g_plus));
        }
        rec.lhs = g_minus;
        rec.rhs = g_plus;
        rec.slack = margin;
        rec.status = status_from_slack(rec.slack, rec.tol);
    }
    rec.runtime_ms = sw.ms();
    out.push_back(std::move(rec));
}

void check_lemma23(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const ConvexWeight Q = ctx.cycling_strict_weight();
    const StepFunction phi = ctx.nonneg_phi();
    const Interval D = phi.domain();

    const double w_est = sup_deviation(phi, D, Q, ctx.cfg.optimizer).value;
    double eps = 0.25;
    bool found = false;
    for (int iter = 0; iter < 64; ++iter) {
        if (Q.eval(eps) > w_est * (1.0 + 1e-9) + 1e-9) {
            found = true;
            break;
        }
        eps *= 1.5;
    }

    CampaignRecord rec = ctx.record("lemma23", Q.descriptor());
    rec.tol = 1e-9;
    CampaignRecord rec2 = ctx.record("corollary1", Q.descriptor());
    rec2.tol = 1e-9;
    if (!found) {
        rec.status = RecordStatus::skipped;
        rec2.status = RecordStatus::skipped;
    } else {
        const double q_eps = Q.eval(eps);
        const FunctionalResult fr = min_deviation(phi, D, Q, ctx.cfg.optimizer);
        const double v_eps = deviation_average(phi, D, eps, Q);
        rec.lhs = fr.c_star;
        rec.rhs = v_eps;
        rec.slack = std::max(fr.c_star - eps, q_eps - v_eps);
        rec.status = status_from_slack(rec.slack, rec.tol);
        const bool agrees = dichotomy_check(phi, D, eps, Q, ctx.cfg.optimizer, rec.tol);
        if (agrees != (rec.status == RecordStatus::pass)) rec.status = RecordStatus::fail;

        const auto [A, B] = range_on(phi, D);
        const double v_lower = deviation_average(phi, D, A + eps, Q);
        const double v_upper = deviation_average(phi, D, B - eps, Q);
        const double lower_margin = std::max(fr.c_star - (A + eps), q_eps - v_lower);
        const double upper_margin = std::max((B - eps) - fr.c_star, q_eps - v_upper);
        rec2.lhs = A;
        rec2.rhs = B;
        rec2.slack = std::min(lower_margin, upper_margin);
        rec2.status = status_from_slack(rec2.slack, rec2.tol);
        const bool agrees2 = corollary_check(phi, D, A, B, eps, Q, ctx.cfg.optimizer, rec2.tol);
        if (agrees2 != (rec2.status == RecordStatus::pass)) rec2.status = RecordStatus::fail;
    }
    rec.runtime_ms = sw.ms() / 2;
    rec2.runtime_ms = sw.ms() / 2;
    out.push_back(std::move(rec));
    out.push_back(std::move(rec2));
}

void check_local_limit(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const StepFunction phi = ctx.base_phi();
    SplitMix64 aux = ctx.aux("local_limit");
    const std::size_t idx = static_cast<std::size_t>(aux.next_below(phi.size()));
    const auto& bp = phi.breakpoints();
    const double s = 0.5 * (bp[idx] + bp[idx + 1]);
    const ConvexWeight Q = ctx.cycling_strict_weight();

    CampaignRecord rec = ctx.record("local_limit", Q.descriptor());
    const bool ok = local_limit_check(phi, s, Q, ctx.cfg.optimizer);
    rec.lhs = s;
    rec.rhs = phi.value_at(s);
    rec.slack = ok ? 0.0 : -1.0;
    rec.tol = 1e-12;
    rec.status = status_from_slack(rec.slack, rec.tol);
    rec.runtime_ms = sw.ms();
    out.push_back(std::move(rec));
}

void check_induction(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const ConvexWeight Q = ctx.cycling_strict_weight();
    const double eps = 1.0;
    const double budget = Q.eval(0.5 * eps);
    const Interval D(0.0, 1.0);

    StepFunction phi = ctx.nonneg_phi();
    bool prepared = false;
    for (int iter = 0; iter < 80; ++iter) {
        if (sup_deviation(phi, D, Q, ctx.cfg.optimizer).value <= budget) {
            prepared = true;
            break;
        }
        phi = scale_values(phi, 0.8);
    }

    const auto epsilon_tilde =
        prepared ? pick_epsilon_tilde(phi, D, eps, Q, ctx.cfg.optimizer) : std::nullopt;
    if (!epsilon_tilde) {
        CampaignRecord rec = ctx.record("induction_zero", Q.descriptor());
        rec.status = RecordStatus::skipped;
        rec.runtime_ms = sw.ms();
        out.push_back(std::move(rec));
        return;
    }

    BellmanParams params;
    params.epsilon = eps;
    params.epsilon_tilde = *epsilon_tilde;
    params.delta = default_delta(params.epsilon_tilde, eps, Q);

    InductionOptions opts;
    opts.depth = ctx.cfg.induction_depth;
    const InductionResult res = simulate_induction(phi, D, params, Q, ctx.cfg.optimizer, opts);

    double max_abs = 0.0;
    for (double s : res.level_sums) max_abs = std::max(max_abs, std::fabs(s));
    CampaignRecord zero = ctx.record("induction_zero", Q.descriptor());
    zero.lhs = max_abs;
    zero.rhs = 0.0;
    zero.slack = -max_abs;
    zero.tol = 1e-8;
    zero.status = status_from_slack(zero.slack, zero.tol);
    zero.runtime_ms = sw.ms();
    out.push_back(std::move(zero));

    double chain = std::numeric_limits<double>::infinity();
    for (std::size_t d = 0; d + 1 < res.level_sums.size(); ++d)
        chain = std::min(chain, res.level_sums[d] - res.level_sums[d + 1]);
    CampaignRecord mono = ctx.record("induction_chain", Q.descriptor());
    mono.lhs = res.level_sums.front();
    mono.rhs = res.level_sums.back();
    mono.slack = chain;
    mono.tol = 1e-8;
    mono.status = status_from_slack(mono.slack, mono.tol);
    out.push_back(std::move(mono));

    const int N = opts.depth;
    const double lo_bound = std::pow(params.delta, N);
    const double hi_bound = std::pow(1.0 - params.delta, N);
    double piece_margin = std::numeric_limits<double>::infinity();
    bool truncated = false;
    for (const auto& node : res.nodes) {
        if (node.truncated) truncated = true;
        if (node.depth != N) continue;
        const double ratio = (node.b - node.a) / D.length();
        piece_margin = std::min(piece_margin, std::min(ratio - lo_bound, hi_bound - ratio));
    }
    CampaignRecord pieces = ctx.record("induction_pieces", Q.descriptor());
    pieces.lhs = lo_bound;
    pieces.rhs = hi_bound;
    pieces.tol = 1e-12;
    if (truncated) {
        pieces.status = RecordStatus::skipped;
    } else {
        pieces.slack = piece_margin;
        pieces.status = status_from_slack(pieces.slack, pieces.tol);
    }
    out.push_back(std::move(pieces));
}

void check_regularization(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    const StepFunction phi = ctx.base_phi();
    const Interval D = phi.domain();
    const ConvexWeight base =
        (ctx.sample_id % 2 == 0) ? ConvexWeight::power(1.0) : ConvexWeight::exponential();

    const double w_base = sup_deviation(phi, D, base, ctx.cfg.optimizer).value;
    static constexpr int kNs[] = {1, 10, 100};
    double d[3];
    for (int i = 0; i < 3; ++i) {
        const ConvexWeight reg = regularized_weight(base, kNs[i]);
        d[i] = sup_deviation(phi, D, reg, ctx.cfg.optimizer).value - w_base;
    }
    const double span = ctx.cfg.value_hi - ctx.cfg.value_lo;

    CampaignRecord bound = ctx.record("regularization_bound", base.descriptor());
    bound.lhs = d[0];
    bound.rhs = span * span;
    bound.slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i)
        bound.slack = std::min(bound.slack, span * span / kNs[i] - d[i]);
    bound.tol = 1e-9;
    bound.status = status_from_slack(bound.slack, bound.tol);
    bound.runtime_ms = sw.ms();
    out.push_back(std::move(bound));

    CampaignRecord mono = ctx.record("regularization_monotone", base.descriptor());
    mono.lhs = d[0];
    mono.rhs = d[2];
    mono.slack = std::min(d[0] - d[1], d[1] - d[2]);
    mono.tol = 1e-9;
    mono.status = status_from_slack(mono.slack, mono.tol);
    out.push_back(std::move(mono));

    CampaignRecord nonneg = ctx.record("regularization_nonneg", base.descriptor());
    nonneg.lhs = std::min({d[0], d[1], d[2]});
    nonneg.rhs = 0.0;
    nonneg.slack = nonneg.lhs;
    nonneg.tol = 1e-9;
    nonneg.status = status_from_slack(nonneg.slack, nonneg.tol);
    out.push_back(std::move(nonneg));
}

void check_oracle_gap(const SampleContext& ctx, std::vector<CampaignRecord>& out) {
    Stopwatch sw;
    SplitMix64 rng(ctx.seed);
    const int k_max = std::min(ctx.cfg.max_segments, 5);
    const StepFunction phi = gen_random_step(rng, k_max, ctx.cfg.value_lo, ctx.cfg.value_hi);
    const Interval D = phi.domain();
    const ConvexWeight Q =
        (ctx.sample_id % 2 == 0) ? ConvexWeight::power(2.0) : ConvexWeight::power(1.0);

    const double ms = sup_deviation(phi, D, Q, ctx.cfg.optimizer).value;
    const double o512 = sup_deviation_grid(phi, D, Q, 512, ctx.cfg.optimizer).value;
    const double o2048 = sup_deviation_grid(phi, D, Q, 2048, ctx.cfg.optimizer).value;

    CampaignRecord lower = ctx.record("oracle_gap_lower", Q.descriptor());
    lower.lhs = ms;
    lower.rhs = o512;
    lower.slack = ms - (o512 - 1e-3 * std::max(1.0, o512));
    lower.tol = 0.0;
    lower.status = status_from_slack(lower.slack, lower.tol);
    lower.runtime_ms = sw.ms() / 2;
    out.push_back(std::move(lower));

    CampaignRecord upper = ctx.record("oracle_gap_upper", Q.descriptor());
    upper.lhs = ms;
    upper.rhs = o2048;
    upper.slack = (o2048 + 1e-6) - ms;
    upper.tol = 0.0;
    upper.status = status_from_slack(upper.slack, upper.tol);
    upper.runtime_ms = sw.ms() / 2;
    out.push_back(std::move(upper));
}

using CheckRunner = void (*)(const SampleContext&, std::vector<CampaignRecord>&);

struct CheckEntry {
    const char* name;
    CheckRunner runner;
};

constexpr CheckEntry kChecks[] = {
    {"theorem1", check_theorem1},
    {"bmo_corollary", check_bmo_corollary},
    {"a2_corollary", check_a2_corollary},
    {"klemes_p1", check_klemes_p1},
    {"sandwich_bmo", check_sandwich_bmo},
    {"sandwich_a2", check_sandwich_a2},
    {"p2_equality", check_p2_equality},
    {"lipschitz", check_lipschitz},
    {"truncation", check_truncation},
    {"lemma1", check_lemma1},
    {"lemma2", check_lemma2},
    {"lemma23", check_lemma23},
    {"local_limit", check_local_limit},
    {"induction", check_induction},
    {"regularization", check_regularization},
    {"oracle_gap", check_oracle_gap},
};

CheckRunner find_runner(const std::string& name) {
    for (const auto& e : kChecks)
        if (name == e.name) return e.runner;
    return nullptr;
}

int resolve_workers(const CampaignConfig& cfg) {
    if (const char* env = std::getenv("OSC_LAB_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw argument_error("OSC_LAB_WORKERS must be a positive integer");
        return static_cast<int>(v);
    }
    if (cfg.workers > 0) return cfg.workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

void CampaignConfig::validate() const {
    if (samples < 1) throw argument_error("CampaignConfig: samples must be >= 1");
    if (max_segments < 1) throw argument_error("CampaignConfig: max_segments must be >= 1");
    if (!std::isfinite(value_lo) || !std::isfinite(value_hi) || !(value_lo < value_hi))
        throw argument_error("CampaignConfig: value range requires lo < hi");
    if (value_lo < -20.0 || value_hi > 20.0)
        throw argument_error("CampaignConfig: value range must stay within [-20, 20]");
    if (weights.empty()) throw argument_error("CampaignConfig: at least one weight is required");
    for (const auto& w : weights) parse_weight(w); // throws on bad descriptors
    if (!(violation_tol > 0.0))
        throw argument_error("CampaignConfig: violation_tol must be positive");
    if (induction_depth < 0 || induction_depth > 12)
        throw argument_error("CampaignConfig: induction_depth must lie in [0, 12]");
    optimizer.validate();
    expanded_checks(); // throws on unknown names
}

std::vector<std::string> CampaignConfig::expanded_checks() const {
    std::vector<std::string> result;
    for (const auto& c : checks) {
        if (c == "all") {
            for (const auto& e : kChecks) result.push_back(e.name);
        } else if (find_runner(c)) {
            result.push_back(c);
        } else {
            throw argument_error("unknown check '" + c + "'");
        }
    }
    return result;
}

const std::vector<std::string>& campaign_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : kChecks) v.push_back(e.name);
        return v;
    }();
    return names;
}

StepFunction gen_random_step(SplitMix64& rng, int k_max, double lo, double hi) {
    if (k_max < 1) throw argument_error("gen_random_step: k_max must be >= 1");
    if (!(lo < hi)) throw argument_error("gen_random_step: requires lo < hi");
    const int k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k_max)));

    std::vector<double> lens(static_cast<std::size_t>(k));
    double total = 0.0;
    for (auto& len : lens) {
        // exponential draws, normalized: a uniform simplex point
        len = std::max(-std::log1p(-rng.next_double()), 1e-12);
        total += len;
    }
    std::vector<Segment> segs(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < segs.size(); ++i) {
        segs[i].len = lens[i] / total;
        segs[i].val = rng.uniform(lo, hi);
    }
    return StepFunction(Interval(0.0, 1.0), std::move(segs));
}

StepFunction gen_random_step(std::uint64_t seed, int k_max, double lo, double hi) {
    SplitMix64 rng(seed);
    return gen_random_step(rng, k_max, lo, hi);
}

LipschitzPL gen_lipschitz(SplitMix64& rng, double lo, double hi) {
    if (!(lo < hi)) throw argument_error("gen_lipschitz: requires lo < hi");
    const double span = hi - lo;
    const int m = 1 + static_cast<int>(rng.next_below(3));

    std::vector<double> bps;
    for (int attempt = 0; attempt < 100; ++attempt) {
        bps.clear();
        for (int i = 0; i < m; ++i) bps.push_back(rng.uniform(lo, hi));
        std::sort(bps.begin(), bps.end());
        bool spaced = true;
        for (std::size_t i = 1; i < bps.size(); ++i)
            if (bps[i] - bps[i - 1] < 1e-3 * span) spaced = false;
        if (spaced) break;
    }
    if (bps.empty()) bps.push_back(0.5 * (lo + hi));

    std::vector<double> slopes;
    for (std::size_t i = 0; i < bps.size() + 1; ++i) slopes.push_back(rng.uniform(-1.0, 1.0));
    const double anchor = rng.uniform(lo, hi);
    return LipschitzPL(std::move(bps), std::move(slopes), anchor);
}

CampaignSummary run_campaign(const CampaignConfig& cfg, std::vector<CampaignRecord>& records) {
    const auto t0 = std::chrono::steady_clock::now();
    cfg.validate();
    const std::vector<std::string> checks = cfg.expanded_checks();

    std::vector<std::vector<CampaignRecord>> per_sample(static_cast<std::size_t>(cfg.samples));
    auto run_sample = [&](int i) {
        SampleContext ctx{cfg, i, per_sample_seed(cfg.seed, static_cast<std::uint64_t>(i))};
        auto& out = per_sample[static_cast<std::size_t>(i)];
        for (const auto& name : checks) find_runner(name)(ctx, out);
    };

    const int workers = std::min(resolve_workers(cfg), cfg.samples);
    if (workers <= 1) {
        for (int i = 0; i < cfg.samples; ++i) run_sample(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const int i = next.fetch_add(1);
                    if (i >= cfg.samples) return;
                    run_sample(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    CampaignSummary summary;
    for (auto& chunk : per_sample)
        for (auto& rec : chunk) {
            switch (rec.status) {
                case RecordStatus::pass: ++summary.pass; break;
                case RecordStatus::fail: ++summary.fail; break;
                case RecordStatus::skipped: ++summary.skipped; break;
            }
            records.push_back(std::move(rec));
        }
    summary.runtime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

CampaignSummary run_campaign_csv(const CampaignConfig& cfg, const std::string& csv_path,
                                 std::vector<CampaignRecord>* records_out) {
    std::vector<CampaignRecord> records;
    const CampaignSummary summary = run_campaign(cfg, records);

    std::ofstream out(csv_path);
    if (!out) throw error("cannot write campaign CSV: " + csv_path);
    out << kRecordCsvHeader << '\n';
    for (const auto& rec : records) write_record_csv_row(out, rec);
    if (!out) throw error("write failure on campaign CSV: " + csv_path);

    if (records_out) *records_out = std::move(records);
    return summary;
}

} // namespace osclab
