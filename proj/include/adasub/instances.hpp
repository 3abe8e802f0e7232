// Adversarial problem instances with known last-iterate behavior:
// the fixed-base-step stall example, the two horizon-dependent
// lower-bound constructions, and the windowed 1-D experiment oracle.

#ifndef ADASUB_INSTANCES_HPP
#define ADASUB_INSTANCES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "adasub/schedules.hpp"
#include "adasub/solver.hpp"

namespace adasub {

enum class GapKind { exact, lower_bound };
enum class CaseTag { prop1, thm2_case1, thm2_case2, experiment_oracle };

struct LowerBoundInstance {
    ProblemInstance problem;
    StepsizeSchedule schedule;  // the adaptive schedule the construction assumes
    double predicted_gap = 0.0;
    GapKind gap_kind = GapKind::exact;
    CaseTag case_tag = CaseTag::prop1;
};

/// 1-D stall instance f(x) = G|x - x1| with the adversarial oracle that
/// stays silent until the last step. For any N and base step h the final
/// gap is exactly G h / sqrt(2).
inline LowerBoundInstance prop1_instance(double G, double x1, int N, double h) {
    if (G <= 0.0) throw std::invalid_argument("prop1_instance: G must be positive");
    if (N < 1) throw std::invalid_argument("prop1_instance: N must be >= 1");

    LowerBoundInstance inst;
    inst.case_tag = CaseTag::prop1;
    inst.gap_kind = GapKind::exact;
    inst.predicted_gap = G * h / std::sqrt(2.0);
    inst.schedule = StepsizeSchedule::adagrad(h, G);

    ProblemInstance p;
    p.dimension = 1;
    p.G = G;
    p.R = 1.0;  // x^* = x^1, any R > 0 is valid
    p.x1 = {x1};
    p.optimum_value = 0.0;
    p.objective = [G, x1](const Vec& x) { return G * std::abs(x[0] - x1); };
    p.oracle = [G, N](int k, const Vec&) -> Vec {
        if (k > N)
            throw std::out_of_range("prop1_instance: oracle queried past step " + std::to_string(N));
        return {k == N ? G : 0.0};
    };
    inst.problem = std::move(p);
    return inst;
}

/// Lower-bound construction for gamma <= 1/4: the stall instance run with
/// the horizon-dependent base step h = R/N^gamma. Exact gap GR/(sqrt2 N^gamma).
inline LowerBoundInstance thm2_case1_instance(double G, double R, int N, double gamma) {
    if (R <= 0.0) throw std::invalid_argument("thm2_case1_instance: R must be positive");
    LowerBoundInstance inst = prop1_instance(G, 0.0, N, base_step(R, N, gamma));
    inst.case_tag = CaseTag::thm2_case1;
    inst.schedule.gamma = gamma;
    inst.problem.R = R;
    inst.predicted_gap = G * R / (std::sqrt(2.0) * std::pow(static_cast<double>(N), gamma));
    return inst;
}

/// Dimension of the max-norm lower-bound construction.
inline int thm2_case2_dimension(int N, double gamma) {
    double raw = 16.0 * std::pow(static_cast<double>(N), 1.0 - 2.0 * gamma);
    return std::max(static_cast<int>(std::ceil(raw)), 1);
}

/// Lower-bound construction for gamma > 1/4: f(x) = G ||x||_inf in dimension
/// d = max{ceil(16 N^{1-2 gamma}), 1}, started at (R/sqrt d, ..., R/sqrt d).
/// The oracle always picks the smallest maximizing coordinate, so every
/// subgradient has norm exactly G and only one coordinate moves per step.
/// The final gap is at least GR/(2 sqrt d).
inline LowerBoundInstance thm2_case2_instance(double G, double R, int N, double gamma) {
    if (G <= 0.0 || R <= 0.0)
        throw std::invalid_argument("thm2_case2_instance: G and R must be positive");
    if (N < 1) throw std::invalid_argument("thm2_case2_instance: N must be >= 1");
    const int d = thm2_case2_dimension(N, gamma);

    LowerBoundInstance inst;
    inst.case_tag = CaseTag::thm2_case2;
    inst.gap_kind = GapKind::lower_bound;
    inst.predicted_gap = G * R / (2.0 * std::sqrt(static_cast<double>(d)));
    inst.schedule = StepsizeSchedule::adagrad_horizon(R, N, gamma, G);

    ProblemInstance p;
    p.dimension = d;
    p.G = G;
    p.R = R;
    p.x1.assign(d, R / std::sqrt(static_cast<double>(d)));
    p.optimum_value = 0.0;
    p.objective = [G](const Vec& x) {
        double m = 0.0;
        for (double xi : x) m = std::max(m, std::abs(xi));
        return G * m;
    };
    p.oracle = [G, d](int, const Vec& x) -> Vec {
        int best = 0;
        double mx = std::abs(x[0]);
        for (int i = 1; i < d; ++i) {
            if (std::abs(x[i]) > mx) {
                mx = std::abs(x[i]);
                best = i;
            }
        }
        Vec g(d, 0.0);
        g[best] = G * (x[best] > 0.0 ? 1.0 : (x[best] < 0.0 ? -1.0 : 0.0));
        return g;
    };
    inst.problem = std::move(p);
    return inst;
}

/// 1-D windowed oracle for f(x) = G|x| started at x^1 = 0: the subgradient
/// is zero for the first N - m steps (m = ceil(N^{2 delta_target})) and
/// unit-norm afterwards, so the realized growth exponent approximates
/// delta_target from above.
inline ProblemInstance experiment_instance(int N, double delta_target, double G = 1.0) {
    if (N < 1) throw std::invalid_argument("experiment_instance: N must be >= 1");
    if (delta_target < 0.0 || delta_target > 0.5)
        throw std::invalid_argument("experiment_instance: delta_target must lie in [0, 1/2]");
    const int m = static_cast<int>(std::ceil(std::pow(static_cast<double>(N), 2.0 * delta_target)));

    ProblemInstance p;
    p.dimension = 1;
    p.G = G;
    p.R = 1.0;  // x^1 = x^* = 0
    p.x1 = {0.0};
    p.optimum_value = 0.0;
    p.objective = [G](const Vec& x) { return G * std::abs(x[0]); };
    // The boundary step k = N - m is merged into the idle phase.
    p.oracle = [G, N, m](int k, const Vec& x) -> Vec {
        if (k <= N - m) return {0.0};
        if (x[0] == 0.0) return {-G};
        return {x[0] > 0.0 ? G : -G};
    };
    return p;
}

inline ProblemInstance experiment_oracle(int N, double delta_target) {
    return experiment_instance(N, delta_target, 1.0);
}

}  // namespace adasub

#endif  // ADASUB_INSTANCES_HPP
