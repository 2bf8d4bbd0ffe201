// osclab — command-line front end for the oscillation-functional library.
//
// Subcommands:
//   eval       shifted-average / minimized / sup functionals on a JSON input
//   norm       oscillation-norm and weight-characteristic reports
//   rearrange  emit the non-increasing rearrangement
//   split      certified interval split with optional psi trace
//   induct     recursive splitting simulation with CSV trace
//   verify     rearrangement inequality on one input
//   campaign   seeded property-verification run (CSV report)
//   oracle     grid-only sup recomputation

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "osclab/bellman.hpp"
#include "osclab/campaign.hpp"
#include "osclab/classes.hpp"
#include "osclab/errors.hpp"
#include "osclab/json_io.hpp"

namespace {

using nlohmann::json;

json interval_json(const osclab::Interval& J) { return json::array({J.a, J.b}); }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

osclab::BellmanParams resolve_params(const osclab::StepFunction& f, double epsilon,
                                     std::optional<double> epsilon_tilde,
                                     std::optional<double> delta, const osclab::ConvexWeight& Q,
                                     const osclab::OptimizerConfig& opt) {
    osclab::BellmanParams params;
    params.epsilon = epsilon;
    if (epsilon_tilde) {
        params.epsilon_tilde = *epsilon_tilde;
    } else {
        const auto picked = osclab::pick_epsilon_tilde(f, f.domain(), epsilon, Q, opt);
        if (!picked)
            throw osclab::contract_error(
                "no budget level found: the sup estimate exceeds every grid level below "
                "epsilon; rescale the input or raise --epsilon");
        params.epsilon_tilde = *picked;
    }
    params.delta = delta ? *delta : osclab::default_delta(params.epsilon_tilde, epsilon, Q);
    return params;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"oscillation-functional laboratory"};
    app.require_subcommand(1);

    std::string input_path, weight_desc = "power:2", out_path, trace_path;
    double opt_a = 0.0, opt_b = 0.0, opt_c = 0.0;
    bool want_sup = false, want_a2 = false;
    double p_exponent = 2.0;
    double epsilon = 1.0;
    std::optional<double> epsilon_tilde, delta;
    int depth = 8, grid = 0;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate the averaging functionals");
    eval_cmd->add_option("--input", input_path, "JSON step-function file")->required();
    eval_cmd->add_option("--weight", weight_desc, "weight descriptor (default power:2)");
    auto* opt_a_flag = eval_cmd->add_option("--a", opt_a, "subinterval left endpoint");
    auto* opt_b_flag = eval_cmd->add_option("--b", opt_b, "subinterval right endpoint");
    auto* opt_c_flag =
        eval_cmd->add_option("--c", opt_c, "fixed shift constant (skips minimization)");
    eval_cmd->add_flag("--sup", want_sup, "take the sup over subintervals");

    auto* norm_cmd = app.add_subcommand("norm", "oscillation-norm / characteristic report");
    norm_cmd->add_option("--input", input_path, "JSON step-function file")->required();
    norm_cmd->add_option("--p", p_exponent, "norm exponent (default 2)");
    norm_cmd->add_flag("--a2", want_a2, "treat the input as a positive weight");

    auto* rearrange_cmd = app.add_subcommand("rearrange", "emit the decreasing rearrangement");
    rearrange_cmd->add_option("--input", input_path, "JSON step-function file")->required();
    rearrange_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* split_cmd = app.add_subcommand("split", "search a certified interval split");
    split_cmd->add_option("--input", input_path, "JSON step-function file")->required();
    split_cmd->add_option("--weight", weight_desc, "strictly convex weight (default power:2)");
    split_cmd->add_option("--epsilon", epsilon, "budget level (default 1)");
    split_cmd->add_option("--epsilon-tilde", epsilon_tilde, "sup budget level (default: auto)");
    split_cmd->add_option("--delta", delta, "cut-fraction bound (default: auto)");
    split_cmd->add_option("--trace", trace_path, "write a psi(t) trace CSV here");

    auto* induct_cmd = app.add_subcommand("induct", "recursive splitting simulation");
    induct_cmd->add_option("--input", input_path, "JSON step-function file")->required();
    induct_cmd->add_option("--weight", weight_desc, "strictly convex weight (default power:2)");
    induct_cmd->add_option("--epsilon", epsilon, "budget level (default 1)");
    induct_cmd->add_option("--epsilon-tilde", epsilon_tilde, "sup budget level (default: auto)");
    induct_cmd->add_option("--delta", delta, "cut-fraction bound (default: auto)");
    induct_cmd->add_option("--depth", depth, "splitting generations (default 8)");
    induct_cmd->add_option("--out", out_path, "trace CSV file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "rearrangement inequality on one input");
    verify_cmd->add_option("--input", input_path, "JSON step-function file")->required();
    verify_cmd->add_option("--weight", weight_desc, "weight descriptor (default power:2)");
    verify_cmd->add_option("--grid", grid, "override the recheck grid resolution");

    osclab::CampaignConfig cfg;
    std::vector<std::string> weight_list, check_list;
    std::vector<double> range;
    std::string campaign_out = "campaign.csv";
    auto* campaign_cmd = app.add_subcommand("campaign", "seeded property-verification run");
    campaign_cmd->add_option("--seed", cfg.seed, "master seed");
    campaign_cmd->add_option("--samples", cfg.samples, "number of samples (default 100)");
    campaign_cmd->add_option("--checks", check_list, "check names (default: all)")
        ->delimiter(',');
    campaign_cmd->add_option("--weights", weight_list, "weight descriptors")->delimiter(',');
    campaign_cmd->add_option("--grid", grid, "optimizer grid resolution");
    campaign_cmd->add_option("--out", campaign_out, "CSV output path (default campaign.csv)");
    campaign_cmd->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
    campaign_cmd->add_flag("--oracle-mode", cfg.oracle_mode,
                           "grid-recheck every eligible record (failing ones always are)");
    campaign_cmd->add_option("--kmax", cfg.max_segments, "max segments per sample (default 8)");
    campaign_cmd->add_option("--range", range, "value range: LO HI")->expected(2);

    auto* oracle_cmd = app.add_subcommand("oracle", "grid-only sup recomputation");
    oracle_cmd->add_option("--input", input_path, "JSON step-function file")->required();
    oracle_cmd->add_option("--weight", weight_desc, "weight descriptor (default power:2)");
    oracle_cmd->add_option("--grid", grid, "grid resolution (default 512)");

    CLI11_PARSE(app, argc, argv);

    try {
        const osclab::OptimizerConfig opt{};

        if (eval_cmd->parsed()) {
            const osclab::StepFunction f = osclab::load_step_function(input_path);
            const osclab::ConvexWeight Q = osclab::parse_weight(weight_desc);
            if (opt_a_flag->count() != opt_b_flag->count())
                throw osclab::argument_error("--a and --b must be given together");
            const osclab::Interval J =
                opt_a_flag->count() ? osclab::Interval(opt_a, opt_b) : f.domain();

            json j;
            if (opt_c_flag->count()) {
                if (want_sup)
                    throw osclab::argument_error("--c and --sup are mutually exclusive");
                j["value"] = osclab::deviation_average(f, J, opt_c, Q);
                j["c_star"] = opt_c;
                j["witness"] = interval_json(J);
            } else if (want_sup) {
                const osclab::SupremumResult sup = osclab::sup_deviation(f, J, Q, opt);
                j["value"] = sup.value;
                j["c_star"] = osclab::min_deviation(f, sup.witness, Q, opt).c_star;
                j["witness"] = interval_json(sup.witness);
            } else {
                const osclab::FunctionalResult fr = osclab::min_deviation(f, J, Q, opt);
                j["value"] = fr.value;
                j["c_star"] = fr.c_star;
                j["witness"] = interval_json(J);
            }
            print_json(j);
            return 0;
        }

        if (norm_cmd->parsed()) {
            const osclab::StepFunction f = osclab::load_step_function(input_path);
            json j;
            if (want_a2) {
                const osclab::A2Report rep = osclab::make_a2_report(f, opt);
                j["char_inf"] = rep.char_inf_variant;
                j["char_classic"] = rep.char_classic;
                j["inf_witness"] = interval_json(rep.inf_witness);
                j["classic_witness"] = interval_json(rep.classic_witness);
            } else {
                const osclab::NormReport rep = osclab::make_norm_report(f, p_exponent, opt);
                j["p"] = rep.p;
                j["norm_inf"] = rep.norm_inf_variant;
                j["norm_classic"] = rep.norm_classic_variant;
                j["inf_witness"] = interval_json(rep.inf_witness);
                j["classic_witness"] = interval_json(rep.classic_witness);
            }
            print_json(j);
            return 0;
        }

        if (rearrange_cmd->parsed()) {
            const osclab::StepFunction f = osclab::load_step_function(input_path);
            const osclab::StepFunction sorted = osclab::rearrange_decreasing(f);
            if (out_path.empty())
                std::cout << osclab::step_function_to_json(sorted) << '\n';
            else
                osclab::save_step_function(sorted, out_path);
            return 0;
        }

        if (split_cmd->parsed()) {
            const osclab::StepFunction f = osclab::load_step_function(input_path);
            const osclab::ConvexWeight Q = osclab::parse_weight(weight_desc);
            const osclab::BellmanParams params =
                resolve_params(f, epsilon, epsilon_tilde, delta, Q, opt);
            const osclab::SplitResult sr =
                osclab::split_search(f, f.domain(), params, Q, opt);

            if (!trace_path.empty()) {
                std::ofstream trace(trace_path);
                if (!trace)
                    throw osclab::error("cannot write trace CSV: " + trace_path);
                trace << "t,psi_alpha0,psi_alpha1\n";
                const int n = 64;
                for (int i = 0; i <= n; ++i) {
                    const double t =
                        params.delta + (1.0 - 2.0 * params.delta) * i / n;
                    trace << osclab::format_float(t) << ','
                          << osclab::format_float(osclab::split_concat_value(
                                 f, f.domain(), t, 0.0, sr.c_used, Q))
                          << ','
                          << osclab::format_float(osclab::split_concat_value(
                                 f, f.domain(), t, 1.0, sr.c_used, Q))
                          << '\n';
                }
            }

            json j;
            j["t"] = sr.t;
            j["c_used"] = sr.c_used;
            j["psi_left"] = sr.psi_left;
            j["psi_right"] = sr.psi_right;
            j["epsilon"] = params.epsilon;
            j["epsilon_tilde"] = params.epsilon_tilde;
            j["delta"] = params.delta;
            print_json(j);
            return 0;
        }

        if (induct_cmd->parsed()) {
            const osclab::StepFunction f = osclab::load_step_function(input_path);
            const osclab::ConvexWeight Q = osclab::parse_weight(weight_desc);
            const osclab::BellmanParams params =
                resolve_params(f, epsilon, epsilon_tilde, delta, Q, opt);
            osclab::InductionOptions opts;
            opts.depth = depth;
            const osclab::InductionResult res =
                osclab::simulate_induction(f, f.domain(), params, Q, opt, opts);

            if (out_path.empty()) {
                osclab::write_induction_csv(res, std::cout);
            } else {
                std::ofstream trace(out_path);
                if (!trace) throw osclab::error("cannot write trace CSV: " + out_path);
                osclab::write_induction_csv(res, trace);
                json j;
                j["level_sums"] = res.level_sums;
                j["nodes"] = res.nodes.size();
                j["delta"] = params.delta;
                print_json(j);
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            const osclab::StepFunction f = osclab::load_step_function(input_path);
            const osclab::ConvexWeight Q = osclab::parse_weight(weight_desc);
            osclab::OptimizerConfig vopt = opt;
            if (grid > 0) vopt.grid_resolution = grid;
            const osclab::CampaignRecord rec = osclab::verify_rearrangement(f, Q, vopt);
            json j;
            j["check"] = rec.check;
            j["weight"] = rec.weight;
            j["lhs"] = rec.lhs;
            j["rhs"] = rec.rhs;
            j["slack"] = rec.slack;
            j["status"] = osclab::to_string(rec.status);
            if (rec.has_oracle) {
                j["oracle_lhs"] = rec.oracle_lhs;
                j["oracle_rhs"] = rec.oracle_rhs;
            }
            print_json(j);
            return rec.status == osclab::RecordStatus::fail ? 1 : 0;
        }

        if (campaign_cmd->parsed()) {
            if (!weight_list.empty()) cfg.weights = weight_list;
            if (!check_list.empty()) cfg.checks = check_list;
            if (grid > 0) cfg.optimizer.grid_resolution = grid;
            if (!range.empty()) {
                cfg.value_lo = range[0];
                cfg.value_hi = range[1];
            }
            const osclab::CampaignSummary summary =
                osclab::run_campaign_csv(cfg, campaign_out);
            json j;
            j["pass"] = summary.pass;
            j["fail"] = summary.fail;
            j["skipped"] = summary.skipped;
            j["runtime_s"] = summary.runtime_s;
            j["csv"] = campaign_out;
            print_json(j);
            return summary.fail > 0 ? 1 : 0;
        }

        if (oracle_cmd->parsed()) {
            const osclab::StepFunction f = osclab::load_step_function(input_path);
            const osclab::ConvexWeight Q = osclab::parse_weight(weight_desc);
            const int resolution = grid > 0 ? grid : opt.grid_resolution;
            const osclab::SupremumResult sup =
                osclab::sup_deviation_grid(f, f.domain(), Q, resolution, opt);
            json j;
            j["value"] = sup.value;
            j["c_star"] = osclab::min_deviation(f, sup.witness, Q, opt).c_star;
            j["witness"] = interval_json(sup.witness);
            print_json(j);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
