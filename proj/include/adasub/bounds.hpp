// Growth exponent delta, the main last-iterate upper bound and its
// relaxed corollary form, and the key series bound with a brute-force
// summation oracle.
//
// All logarithms are natural.

#ifndef ADASUB_BOUNDS_HPP
#define ADASUB_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "adasub/solver.hpp"

namespace adasub {

struct BoundInput {
    double G = 1.0;
    double R = 1.0;
    int N = 1;
    double gamma = 0.25;
    double delta = 0.0;
};

/// Realized growth exponent of the cumulative squared subgradient norms:
/// delta = (1/2) log_N (1 + sum_{i=1}^{N-1} ||g^i||^2 / G^2), in [0, 1/2].
/// For N = 1 the empty sum gives delta = 0 by convention.
inline double compute_delta(const RunTrace& trace) {
    const int N = trace.horizon();
    if (N < 1) throw std::invalid_argument("compute_delta: empty trace");
    if (N == 1) return 0.0;
    const double G2 = trace.cum_sq[0];
    return 0.5 * std::log(trace.cum_sq[N - 1] / G2) / std::log(static_cast<double>(N));
}

/// Worst-case last-iterate bound for the adaptive method with base step
/// h = R N^{-gamma}, evaluated at the realized exponent delta.
inline double theorem1_bound(const BoundInput& in) {
    if (in.delta < -1e-12 || in.delta > 0.5 + 1e-12)
        throw std::invalid_argument("theorem1_bound: delta outside [0, 1/2]");
    const double N = static_cast<double>(in.N);
    const double n2d = std::pow(N, 2.0 * in.delta);
    const double root = std::sqrt(n2d + 1.0);
    const double t1 = std::pow(N, in.gamma) * root / (2.0 * N + 1.0);
    const double t2 = std::pow(N, -in.gamma) * (4.0 * std::log(n2d) + 5.0) * root /
                      (2.0 * std::max(n2d - 1.0, 1.0));
    const double t3 = std::pow(N, -in.gamma - 2.0 * in.delta) * root;
    const double t4 = std::pow(N, -in.gamma - in.delta);
    return 0.5 * in.G * in.R * (t1 + t2 + t3 + t4);
}

/// Relaxation of theorem1_bound:
/// C1 N^{gamma+delta-1} + C2 N^{-gamma-delta} log(N^{2 delta}) + C3 N^{-gamma-delta},
/// with C1 = (sqrt2/4) GR, C2 = 2 sqrt2 GR, C3 = (1/2)(6 sqrt2 + 1) GR.
inline double corollary1_bound(const BoundInput& in) {
    const double N = static_cast<double>(in.N);
    const double GR = in.G * in.R;
    const double c1 = std::sqrt(2.0) / 4.0 * GR;
    const double c2 = 2.0 * std::sqrt(2.0) * GR;
    const double c3 = 0.5 * (6.0 * std::sqrt(2.0) + 1.0) * GR;
    return c1 * std::pow(N, in.gamma + in.delta - 1.0) +
           c2 * std::pow(N, -in.gamma - in.delta) * std::log(std::pow(N, 2.0 * in.delta)) +
           c3 * std::pow(N, -in.gamma - in.delta);
}

/// Closed-form bound on the key series:
/// (4 log(N^{2 delta}) + 5) / max{N^{2 delta} - 1, 1}.
inline double lemma3_bound(int N, double delta) {
    if (N < 2) throw std::invalid_argument("lemma3_bound: N must be >= 2");
    const double n2d = std::pow(static_cast<double>(N), 2.0 * delta);
    return (4.0 * std::log(n2d) + 5.0) / std::max(n2d - 1.0, 1.0);
}

// Admissible series instance: weights y_1..y_{N-1} in [0,1] with partial
// sums S_k = 1 + sum_{i<=k} y_i; the realized exponent follows from
// S_{N-1} = N^{2 delta}.
struct SeriesInstance {
    std::vector<double> y;  // y_1..y_{N-1}

    explicit SeriesInstance(std::vector<double> weights) : y(std::move(weights)) {
        for (double yi : y)
            if (yi < 0.0 || yi > 1.0)
                throw std::invalid_argument("SeriesInstance: weights must lie in [0, 1]");
    }

    int N() const { return static_cast<int>(y.size()) + 1; }

    double total() const {  // S_{N-1}
        double s = 1.0;
        for (double yi : y) s += yi;
        return s;
    }

    double delta() const {
        if (N() < 2) return 0.0;
        return 0.5 * std::log(total()) / std::log(static_cast<double>(N()));
    }

    int m() const { return static_cast<int>(std::ceil(total())); }
};

/// Brute-force evaluation of sum_{k=1}^{N-1} y_k / ((N-k) S_k).
inline double lemma3_sum(const SeriesInstance& inst) {
    const int N = inst.N();
    double s = 1.0, acc = 0.0;
    for (int k = 1; k <= N - 1; ++k) {
        s += inst.y[k - 1];
        acc += inst.y[k - 1] / ((N - k) * s);
    }
    return acc;
}

}  // namespace adasub

#endif  // ADASUB_BOUNDS_HPP
