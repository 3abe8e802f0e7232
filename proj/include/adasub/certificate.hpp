// Last-iterate certificate machinery.
//
// Builds the auxiliary sequence v_0..v_{N+1} whose choice makes all
// intermediate weights c_1..c_N in the telescoping inequality vanish,
// leaving only the last iterate, and numerically verifies the resulting
// inequality on recorded traces.

#ifndef ADASUB_CERTIFICATE_HPP
#define ADASUB_CERTIFICATE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "adasub/solver.hpp"

namespace adasub {

// Convention: h_ext[i] = h_{i+1} for i = 0..N, so h_ext has length N+1
// and h_ext[N] is the extension h_{N+1} (set to h_N for recorded traces).
// v[k] = v_k for k = 0..N+1.

/// Extends a recorded stepsize sequence h_1..h_N with h_{N+1} := h_N.
inline std::vector<double> extend_stepsizes(const std::vector<double>& h) {
    if (h.empty()) throw std::invalid_argument("extend_stepsizes: empty stepsize sequence");
    std::vector<double> ext = h;
    ext.push_back(h.back());
    return ext;
}

/// Backward recursion 1/v_k = 1/v_{k+1} + h_{k+1} v_{k+1} / h_{N+1},
/// anchored at v_{N+1} = v_N = 1.
inline std::vector<double> build_v_sequence(const std::vector<double>& h_ext) {
    const int N = static_cast<int>(h_ext.size()) - 1;
    if (N < 0 || h_ext.empty())
        throw std::invalid_argument("build_v_sequence: need at least one stepsize");
    for (double h : h_ext)
        if (!(h > 0.0)) throw std::invalid_argument("build_v_sequence: stepsizes must be positive");

    const double h_last = h_ext[N];
    std::vector<double> v(N + 2);
    v[N + 1] = 1.0;
    v[N] = 1.0;
    for (int k = N - 1; k >= 0; --k) {
        // h_{k+1} = h_ext[k]
        v[k] = 1.0 / (1.0 / v[k + 1] + h_ext[k] * v[k + 1] / h_last);
    }
    return v;
}

/// c_k = h_k v_k^2 - (v_k - v_{k-1}) sum_{i=k}^{N+1} h_i v_i, k = 1..N+1.
/// With v from build_v_sequence, c_1..c_N vanish and c_{N+1} = h_{N+1}.
inline std::vector<double> build_c_coefficients(const std::vector<double>& h_ext,
                                                const std::vector<double>& v) {
    const int N = static_cast<int>(h_ext.size()) - 1;
    if (static_cast<int>(v.size()) != N + 2)
        throw std::invalid_argument("build_c_coefficients: h and v lengths do not match");

    std::vector<double> c(N + 1);
    double tail = 0.0;  // sum_{i=k}^{N+1} h_i v_i, built backward
    for (int k = N + 1; k >= 1; --k) {
        tail += h_ext[k - 1] * v[k];
        c[k - 1] = h_ext[k - 1] * v[k] * v[k] - (v[k] - v[k - 1]) * tail;
    }
    return c;
}

/// Max relative residual of the identity
/// 1/v_k^2 = 1 + (2/h_{N+1}) sum_{i=k+1}^N h_i + (1/h_{N+1}^2) sum h_i^2 v_i^2.
inline double verify_v_identity(const std::vector<double>& h_ext,
                                const std::vector<double>& v) {
    const int N = static_cast<int>(h_ext.size()) - 1;
    if (static_cast<int>(v.size()) != N + 2)
        throw std::invalid_argument("verify_v_identity: h and v lengths do not match");
    const double h_last = h_ext[N];
    double sum_h = 0.0, sum_h2v2 = 0.0, worst = 0.0;
    for (int k = N - 1; k >= 0; --k) {
        // accumulate terms for i = k+1 (h_{k+1} = h_ext[k])
        double hv = h_ext[k] * v[k + 1];
        sum_h += h_ext[k];
        sum_h2v2 += hv * hv;
        double rhs = 1.0 + 2.0 * sum_h / h_last + sum_h2v2 / (h_last * h_last);
        double lhs = 1.0 / (v[k] * v[k]);
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    return worst;
}

/// Slack (RHS - LHS) of the last-iterate inequality evaluated on a trace
/// with reference point xhat and value f_hat = f(xhat). The unrecorded
/// (N+1)-th subgradient and the N-th term are bounded through G, i.e.
/// RHS = v_0^2/(2h_{N+1}) ||x^1-xhat||^2
///     + 1/(2h_{N+1}) sum_{k=1}^{N-1} h_k^2 v_k^2 ||g^k||^2
///     + G^2 h_N^2/(2h_{N+1}) + G^2 h_{N+1}/2.
/// Nonnegative (up to round-off) for any valid trace of a convex problem.
inline double last_iterate_slack(const ProblemInstance& problem, const RunTrace& trace,
                                 const Vec& xhat, double f_hat) {
    const int N = trace.horizon();
    if (N < 1) throw std::invalid_argument("last_iterate_slack: empty trace");
    const std::vector<double> h_ext = extend_stepsizes(trace.stepsizes);
    const std::vector<double> v = build_v_sequence(h_ext);
    const double h_last = h_ext[N];
    const double G = problem.G;

    double lhs = problem.objective(trace.iterates[N]) - f_hat;

    Vec diff = axpy(trace.iterates[0], -1.0, xhat);
    double rhs = v[0] * v[0] / (2.0 * h_last) * dot(diff, diff);
    double sum = 0.0;
    for (int k = 1; k <= N - 1; ++k) {
        double hv = trace.stepsizes[k - 1] * v[k];
        double gn = norm(trace.subgradients[k - 1]);
        sum += hv * hv * gn * gn;
    }
    rhs += sum / (2.0 * h_last);
    rhs += G * G * trace.stepsizes[N - 1] * trace.stepsizes[N - 1] / (2.0 * h_last);
    rhs += G * G * h_last / 2.0;
    return rhs - lhs;
}

struct Certificate {
    std::vector<double> v;       // v_0..v_{N+1}
    std::vector<double> c;       // c_1..c_{N+1}
    std::vector<double> h_ext;   // h_1..h_{N+1}
    double residual_c = 0.0;     // max_k |c_k| for k <= N
    double inequality_slack = 0.0;
};

/// Builds the full certificate for a trace with reference xhat.
inline Certificate certify_trace(const ProblemInstance& problem, const RunTrace& trace,
                                 const Vec& xhat, double f_hat) {
    Certificate cert;
    cert.h_ext = extend_stepsizes(trace.stepsizes);
    cert.v = build_v_sequence(cert.h_ext);
    cert.c = build_c_coefficients(cert.h_ext, cert.v);
    for (std::size_t k = 0; k + 1 < cert.c.size(); ++k)
        cert.residual_c = std::max(cert.residual_c, std::abs(cert.c[k]));
    cert.inequality_slack = last_iterate_slack(problem, trace, xhat, f_hat);
    return cert;
}

}  // namespace adasub

#endif  // ADASUB_CERTIFICATE_HPP
