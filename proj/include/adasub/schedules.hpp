// Stepsize schedules: adaptive scalar (AdaGrad-Norm), constant, and
// user-supplied sequences.
//
// The adaptive step is h_k = h / sqrt(G^2 + sum_{i<=k} ||g^i||^2); the
// accumulator passed to step() already includes both G^2 and the k-th
// squared norm.

#ifndef ADASUB_SCHEDULES_HPP
#define ADASUB_SCHEDULES_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace adasub {

/// Single adaptive step: h / sqrt(cum_sq_k), where cum_sq_k includes G^2
/// and the current squared subgradient norm.
inline double adagrad_step(double h, double G, double cum_sq_k) {
    if (h <= 0.0) throw std::invalid_argument("adagrad_step: h must be positive");
    if (G <= 0.0) throw std::invalid_argument("adagrad_step: G must be positive");
    if (cum_sq_k < G * G * (1.0 - 1e-12))
        throw std::invalid_argument("adagrad_step: accumulator below G^2 is inconsistent");
    return h / std::sqrt(cum_sq_k);
}

/// Horizon-dependent base step h = R * N^{-gamma}.
inline double base_step(double R, int N, double gamma) {
    if (R <= 0.0) throw std::invalid_argument("base_step: R must be positive");
    if (N < 1) throw std::invalid_argument("base_step: N must be >= 1");
    return R * std::pow(static_cast<double>(N), -gamma);
}

enum class ScheduleKind { adagrad_norm, constant, explicit_seq };

struct StepsizeSchedule {
    ScheduleKind kind = ScheduleKind::adagrad_norm;
    double base_h = 1.0;   // h
    double gamma = 0.0;    // recorded for provenance only
    double G = 1.0;
    std::vector<double> explicit_seq;

    /// Evaluates h_k. k is 1-based; cum_sq_k is G^2 + sum_{i<=k} ||g^i||^2.
    double step(int k, double cum_sq_k) const {
        switch (kind) {
            case ScheduleKind::adagrad_norm:
                return adagrad_step(base_h, G, cum_sq_k);
            case ScheduleKind::constant:
                return base_h;
            case ScheduleKind::explicit_seq: {
                if (k < 1 || k > static_cast<int>(explicit_seq.size()))
                    throw std::out_of_range("StepsizeSchedule: step index " + std::to_string(k) +
                                            " outside the explicit sequence");
                double h = explicit_seq[k - 1];
                if (h <= 0.0)
                    throw std::invalid_argument("StepsizeSchedule: explicit stepsize must be positive");
                return h;
            }
        }
        throw std::logic_error("StepsizeSchedule: unknown kind");
    }

    static StepsizeSchedule adagrad(double h, double G, double gamma = 0.0) {
        if (h <= 0.0) throw std::invalid_argument("StepsizeSchedule: h must be positive");
        if (G <= 0.0) throw std::invalid_argument("StepsizeSchedule: G must be positive");
        StepsizeSchedule s;
        s.kind = ScheduleKind::adagrad_norm;
        s.base_h = h;
        s.G = G;
        s.gamma = gamma;
        return s;
    }

    /// AdaGrad with the horizon-dependent base step h = R / N^gamma.
    static StepsizeSchedule adagrad_horizon(double R, int N, double gamma, double G) {
        return adagrad(base_step(R, N, gamma), G, gamma);
    }

    static StepsizeSchedule constant(double h) {
        if (h <= 0.0) throw std::invalid_argument("StepsizeSchedule: h must be positive");
        StepsizeSchedule s;
        s.kind = ScheduleKind::constant;
        s.base_h = h;
        return s;
    }

    static StepsizeSchedule from_sequence(std::vector<double> seq) {
        if (seq.empty())
            throw std::invalid_argument("StepsizeSchedule: explicit sequence must be nonempty");
        StepsizeSchedule s;
        s.kind = ScheduleKind::explicit_seq;
        s.explicit_seq = std::move(seq);
        return s;
    }
};

}  // namespace adasub

#endif  // ADASUB_SCHEDULES_HPP
