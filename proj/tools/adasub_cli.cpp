// Command-line surface: run a single instance, certify the auxiliary
// sequences, check lower-bound constructions, evaluate the series bound,
// and run parameter sweeps with CSV output and a slope table.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adasub/bounds.hpp"
#include "adasub/certificate.hpp"
#include "adasub/experiments.hpp"
#include "adasub/instances.hpp"
#include "adasub/solver.hpp"

using namespace adasub;

namespace {

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

struct RunSpec {
    std::string instance = "prop1";
    int N = 16;
    double G = 1.0, R = 1.0, gamma = 0.25, delta = 0.0, h = 0.0;
};

// Builds the requested instance plus the schedule it should be run with.
LowerBoundInstance make_instance(const RunSpec& spec) {
    if (spec.instance == "prop1") {
        double h = spec.h > 0.0 ? spec.h : base_step(spec.R, spec.N, spec.gamma);
        return prop1_instance(spec.G, 0.0, spec.N, h);
    }
    if (spec.instance == "case1") return thm2_case1_instance(spec.G, spec.R, spec.N, spec.gamma);
    if (spec.instance == "case2") return thm2_case2_instance(spec.G, spec.R, spec.N, spec.gamma);
    if (spec.instance == "experiment") {
        LowerBoundInstance inst;
        inst.case_tag = CaseTag::experiment_oracle;
        inst.gap_kind = GapKind::lower_bound;
        inst.predicted_gap = 0.0;  // no closed form
        inst.problem = experiment_instance(spec.N, spec.delta, spec.G);
        inst.problem.R = spec.R;
        inst.schedule = StepsizeSchedule::adagrad_horizon(spec.R, spec.N, spec.gamma, spec.G);
        return inst;
    }
    throw CLI::ValidationError("--instance", "unknown instance '" + spec.instance + "'");
}

int cmd_run(const RunSpec& spec) {
    auto inst = make_instance(spec);
    auto trace = run_subgradient(inst.problem, inst.schedule, spec.N);
    double delta_realized = compute_delta(trace);

    std::printf("instance        %s\n", spec.instance.c_str());
    std::printf("N               %d\n", spec.N);
    std::printf("gamma           %.4f\n", inst.schedule.gamma);
    std::printf("delta_realized  %.4f\n", delta_realized);
    std::printf("gap             %.10g\n", trace.gap_last);
    if (inst.schedule.gamma > 0.0 && inst.schedule.gamma <= 0.5) {
        double bound = theorem1_bound({spec.G, spec.R, spec.N, inst.schedule.gamma, delta_realized});
        std::printf("theorem1_bound  %.10g\n", bound);
    }
    if (inst.predicted_gap > 0.0) {
        std::printf("predicted_gap   %.10g (%s)\n", inst.predicted_gap,
                    inst.gap_kind == GapKind::exact ? "exact" : "lower bound");
    }
    return 0;
}

int cmd_lowerbound(const RunSpec& spec) {
    auto inst = make_instance(spec);
    if (inst.predicted_gap <= 0.0) {
        std::fprintf(stderr, "instance '%s' has no closed-form prediction\n",
                     spec.instance.c_str());
        return 2;
    }
    auto trace = run_subgradient(inst.problem, inst.schedule, spec.N);
    bool ok = inst.gap_kind == GapKind::exact
                  ? std::abs(trace.gap_last - inst.predicted_gap) <= 1e-12 * inst.predicted_gap
                  : trace.gap_last >= inst.predicted_gap * (1.0 - 1e-12);
    std::printf("measured gap   %.10g\npredicted gap  %.10g (%s)\nstatus         %s\n",
                trace.gap_last, inst.predicted_gap,
                inst.gap_kind == GapKind::exact ? "exact" : "lower bound", ok ? "ok" : "VIOLATED");
    return ok ? 0 : 1;
}

int cmd_certify(int N, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> udelta(0.0, 0.5);
    double max_c = 0.0, max_identity = 0.0, min_slack = 1e300;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> h(N + 1);
        for (auto& hi : h) hi = std::exp(u(rng));
        auto v = build_v_sequence(h);
        auto c = build_c_coefficients(h, v);
        double hmax = *std::max_element(h.begin(), h.end());
        for (int k = 0; k < N; ++k) max_c = std::max(max_c, std::abs(c[k]) / hmax);
        max_identity = std::max(max_identity, verify_v_identity(h, v));
        for (std::size_t k = 0; k + 1 < v.size(); ++k) {
            if (v[k] > v[k + 1]) {
                std::fprintf(stderr, "v not monotone at seed %llu trial %d\n",
                             static_cast<unsigned long long>(seed), trial);
                return 1;
            }
        }
        // inequality slack on a windowed-oracle run with a random exponent
        auto problem = experiment_instance(N, udelta(rng));
        auto trace =
            run_subgradient(problem, StepsizeSchedule::adagrad_horizon(1.0, N, 0.25, 1.0), N);
        min_slack = std::min(min_slack, last_iterate_slack(problem, trace, {0.0}, 0.0));
    }
    std::printf("trials              %d (N = %d)\n", trials, N);
    std::printf("max |c_k|/max h     %.3e\n", max_c);
    std::printf("max identity resid  %.3e\n", max_identity);
    if (trials > 0) std::printf("min slack           %.3e\n", min_slack);
    bool ok = trials == 0 || (max_c <= 1e-10 && max_identity <= 1e-9 && min_slack >= -1e-9);
    if (!ok)
        std::fprintf(stderr, "tolerance breach at seed %llu\n",
                     static_cast<unsigned long long>(seed));
    return ok ? 0 : 1;
}

int cmd_lemma3(int N_max, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> len(2, N_max);
    double worst_ratio = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        int N = len(rng);
        std::vector<double> y(N - 1);
        double scale = u(rng);
        for (auto& yi : y) yi = u(rng) * scale;
        SeriesInstance inst(std::move(y));
        double lhs = lemma3_sum(inst);
        double rhs = lemma3_bound(inst.N(), inst.delta());
        worst_ratio = std::max(worst_ratio, lhs / rhs);
    }
    std::printf("trials          %d (N <= %d)\nworst LHS/RHS   %.6f\n", trials, N_max, worst_ratio);
    return worst_ratio <= 1.0 + 1e-12 ? 0 : 1;
}

int cmd_sweep(std::vector<double> gammas, std::vector<double> deltas, int j_min, int j_max,
              int grid_denom, double blocks_ratio, const std::string& out_path) {
    bool dense = grid_denom > 2;
    auto Ns = horizon_grid(j_min * grid_denom / 2, j_max * grid_denom / 2, grid_denom, dense);
    auto records = run_sweep(gammas, deltas, Ns);
    if (!out_path.empty()) {
        emit_csv(records, out_path);
        std::printf("wrote %zu records to %s\n", records.size(), out_path.c_str());
    }

    // slope table: k_emp over k_bound per (delta, gamma) cell
    std::printf("%8s", "delta\\g");
    for (double g : gammas) std::printf(" %9.2f", g);
    std::printf("\n");
    for (double d : deltas) {
        std::string emp_row, bound_row;
        for (double g : gammas) {
            Series eser, bser;
            for (const auto& r : records) {
                if (r.gamma != g || r.delta_target != d) continue;
                if (r.gap > 0.0) eser.emplace_back(r.N, r.gap);
                bser.emplace_back(r.N, r.bound);
            }
            char buf[32];
            double ke = fit_loglog_slope(window_max(eser, blocks_ratio)).slope;
            double kb = fit_loglog_slope(window_max(bser, blocks_ratio)).slope;
            std::snprintf(buf, sizeof(buf), " %9.4f", ke);
            emp_row += buf;
            std::snprintf(buf, sizeof(buf), " %9.4f", kb);
            bound_row += buf;
        }
        std::printf("%8.2f%s\n", d, emp_row.c_str());
        std::printf("%8s%s\n", "", bound_row.c_str());
    }
    return 0;
}

// --config accepts key=value lines (gammas, deltas, j-min, j-max) for sweep grids.
void apply_config(const std::string& path, std::vector<double>& gammas,
                  std::vector<double>& deltas, int& j_min, int& j_max) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos || line.empty() || line[0] == '#') continue;
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "gammas") gammas = parse_list(value);
        else if (key == "deltas") deltas = parse_list(value);
        else if (key == "j-min") j_min = std::stoi(value);
        else if (key == "j-max") j_max = std::stoi(value);
        else throw CLI::ValidationError("--config", "unknown key '" + key + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive subgradient last-iterate toolkit"};
    app.require_subcommand(1);
    // long-form help only, so --h stays available as the base-step flag
    app.set_help_flag("--help", "print help");

    RunSpec spec;

    auto* run = app.add_subcommand("run", "run one instance and report gap and bound");
    run->set_help_flag("--help", "print help");
    run->add_option("--instance", spec.instance, "prop1|case1|case2|experiment")->required();
    run->add_option("--N", spec.N, "iteration count")->check(CLI::PositiveNumber);
    run->add_option("--G", spec.G, "subgradient-norm bound");
    run->add_option("--R", spec.R, "initial-distance bound");
    run->add_option("--gamma", spec.gamma, "base-step exponent");
    run->add_option("--delta", spec.delta, "target growth exponent (experiment)");
    run->add_option("--h", spec.h, "explicit base step (prop1)");

    auto* lower = app.add_subcommand("lowerbound", "check a construction against its prediction");
    lower->set_help_flag("--help", "print help");
    lower->add_option("--instance", spec.instance, "prop1|case1|case2")->required();
    lower->add_option("--N", spec.N, "iteration count")->check(CLI::PositiveNumber);
    lower->add_option("--G", spec.G, "subgradient-norm bound");
    lower->add_option("--R", spec.R, "initial-distance bound");
    lower->add_option("--gamma", spec.gamma, "base-step exponent");
    lower->add_option("--h", spec.h, "explicit base step (prop1)");

    int N = 200, trials = 100;
    std::uint64_t seed = 7;
    auto* certify = app.add_subcommand("certify", "randomized certificate residual suite");
    certify->add_option("--N", N, "sequence length")->check(CLI::PositiveNumber);
    certify->add_option("--trials", trials, "number of random sequences");
    certify->add_option("--seed", seed, "RNG seed");

    int l3_N = 500, l3_trials = 1000;
    std::uint64_t l3_seed = 7;
    auto* lemma3 = app.add_subcommand("lemma3", "brute-force series bound check");
    lemma3->add_option("--N", l3_N, "maximum sequence length")->check(CLI::Range(2, 1 << 20));
    lemma3->add_option("--trials", l3_trials, "number of random instances");
    lemma3->add_option("--seed", l3_seed, "RNG seed");

    std::string gammas_csv = "0.01,0.10,0.20,0.30,0.40,0.49";
    std::string deltas_csv = "0.01,0.10,0.20,0.30,0.40,0.49";
    std::string out_path, config_path;
    int j_min = 8, j_max = 34, grid_denom = 2;
    double blocks_ratio = 2.0;
    auto* sweep = app.add_subcommand("sweep", "parameter sweep with CSV output and slope table");
    sweep->add_option("--gammas", gammas_csv, "comma-separated gamma grid");
    sweep->add_option("--deltas", deltas_csv, "comma-separated delta grid");
    sweep->add_option("--j-min", j_min, "N grid lower exponent (N ~ 2^{j/2})");
    sweep->add_option("--j-max", j_max, "N grid upper exponent");
    sweep->add_option("--grid-denom", grid_denom, "grid density: N = 2^{j/denom} spacing")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--blocks-ratio", blocks_ratio, "window-max block ratio (<=1 disables)");
    sweep->add_option("--out", out_path, "CSV output path");
    sweep->add_option("--config", config_path, "key=value grid config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) return cmd_run(spec);
        if (lower->parsed()) return cmd_lowerbound(spec);
        if (certify->parsed()) return cmd_certify(N, trials, seed);
        if (lemma3->parsed()) return cmd_lemma3(l3_N, l3_trials, l3_seed);
        if (sweep->parsed()) {
            auto gammas = parse_list(gammas_csv);
            auto deltas = parse_list(deltas_csv);
            if (!config_path.empty()) apply_config(config_path, gammas, deltas, j_min, j_max);
            return cmd_sweep(gammas, deltas, j_min, j_max, grid_denom, blocks_ratio, out_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
