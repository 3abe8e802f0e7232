// Projected subgradient descent with generic stepsizes (Algorithm core).
//
// A run is fully recorded: iterates, subgradients, stepsizes and the
// cumulative squared subgradient norms, so that every step can be
// re-derived bit-for-bit from the stored data.

#ifndef ADASUB_SOLVER_HPP
#define ADASUB_SOLVER_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "adasub/schedules.hpp"

namespace adasub {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec axpy(const Vec& x, double alpha, const Vec& y) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + alpha * y[i];
    return r;
}

/// Euclidean projection onto the ball {x : ||x - center|| <= radius}.
inline Vec project_ball(const Vec& center, double radius, const Vec& y) {
    if (radius <= 0.0) throw std::invalid_argument("project_ball: radius must be positive");
    Vec diff = axpy(y, -1.0, center);
    double d = norm(diff);
    if (d <= radius) return y;
    return axpy(center, radius / d, diff);
}

/// Coordinate-wise projection onto the box [lo, hi].
inline Vec project_box(const Vec& lo, const Vec& hi, const Vec& y) {
    Vec r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        r[i] = std::min(hi[i], std::max(lo[i], y[i]));
    return r;
}

// Convex objective with a (possibly time-dependent) subgradient oracle.
// The oracle receives the 1-based iteration index so that adversarial
// oracles can depend on the step, not only on the point.
struct ProblemInstance {
    int dimension = 1;
    std::function<double(const Vec&)> objective;
    std::function<Vec(int, const Vec&)> oracle;
    std::function<Vec(const Vec&)> projection;  // empty means X = R^d
    double optimum_value = 0.0;
    double G = 1.0;  // subgradient-norm bound
    double R = 1.0;  // initial-distance bound
    Vec x1;
};

struct RunTrace {
    std::vector<Vec> iterates;         // x^1 .. x^{N+1}
    std::vector<Vec> subgradients;     // g^1 .. g^N
    std::vector<double> stepsizes;     // h_1 .. h_N
    std::vector<double> cum_sq;        // index k = 0..N: G^2 + sum_{i<=k} ||g^i||^2
    double gap_last = 0.0;             // f(x^{N+1}) - f(x*)

    int horizon() const { return static_cast<int>(subgradients.size()); }
};

/// Runs the projected subgradient method for N steps and records the trace.
inline RunTrace run_subgradient(const ProblemInstance& problem,
                                const StepsizeSchedule& schedule, int N) {
    if (N < 1) throw std::invalid_argument("run_subgradient: N must be >= 1");
    if (!problem.objective || !problem.oracle)
        throw std::invalid_argument("run_subgradient: problem is missing objective or oracle");

    const double G = problem.G;
    RunTrace trace;
    trace.iterates.reserve(N + 1);
    trace.subgradients.reserve(N);
    trace.stepsizes.reserve(N);
    trace.cum_sq.reserve(N + 1);

    Vec x = problem.x1;
    trace.iterates.push_back(x);
    double cum = G * G;
    trace.cum_sq.push_back(cum);

    for (int k = 1; k <= N; ++k) {
        Vec g = problem.oracle(k, x);
        double gn = norm(g);
        if (gn > G * (1.0 + 1e-12))
            throw std::runtime_error("run_subgradient: subgradient norm " + std::to_string(gn) +
                                     " exceeds bound G = " + std::to_string(G) +
                                     " at step " + std::to_string(k));
        cum += gn * gn;
        double h = schedule.step(k, cum);
        if (!(h > 0.0))
            throw std::runtime_error("run_subgradient: nonpositive stepsize at step " +
                                     std::to_string(k));
        x = axpy(x, -h, g);
        if (problem.projection) x = problem.projection(x);

        trace.subgradients.push_back(std::move(g));
        trace.stepsizes.push_back(h);
        trace.cum_sq.push_back(cum);
        trace.iterates.push_back(x);
    }
    trace.gap_last = problem.objective(x) - problem.optimum_value;
    return trace;
}

/// Spot-checks that every recorded subgradient satisfies the subgradient
/// inequality f(y) >= f(x^k) + <g^k, y - x^k> at random feasible probes.
/// Returns the most negative violation observed (>= 0 means all passed).
inline double subgradient_validity_residual(const ProblemInstance& problem,
                                            const RunTrace& trace,
                                            int probes = 32,
                                            std::uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double spread = problem.R + 1.0;
    double worst = 0.0;
    for (int p = 0; p < probes; ++p) {
        Vec y(problem.x1.size());
        for (auto& yi : y) yi = gauss(rng) * spread;
        y = axpy(problem.x1, 1.0, y);
        if (problem.projection) y = problem.projection(y);
        double fy = problem.objective(y);
        for (int k = 0; k < trace.horizon(); ++k) {
            const Vec& xk = trace.iterates[k];
            double lin = problem.objective(xk) + dot(trace.subgradients[k], axpy(y, -1.0, xk));
            worst = std::min(worst, fy - lin);
        }
    }
    return worst;
}

}  // namespace adasub

#endif  // ADASUB_SOLVER_HPP
