// Parameter sweeps over (N, gamma, delta_target), window-maximum
// smoothing, log-log slope fitting and CSV emission.

#ifndef ADASUB_EXPERIMENTS_HPP
#define ADASUB_EXPERIMENTS_HPP

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adasub/bounds.hpp"
#include "adasub/instances.hpp"
#include "adasub/solver.hpp"

namespace adasub {

struct SweepRecord {
    int N = 0;
    double gamma = 0.0;
    double delta_target = 0.0;
    double delta_realized = 0.0;
    double gap = 0.0;    // f(x^{N+1}) - f(x*)
    double bound = 0.0;  // theorem1_bound at delta_realized
    double run_wall_seconds = 0.0;
};

using SweepObserver =
    std::function<void(const SweepRecord&, const ProblemInstance&, const RunTrace&)>;

/// Geometric horizon grid N = ceil(2^{j/denom}) for j = j_lo..j_hi, deduplicated.
inline std::vector<int> horizon_grid(int j_lo, int j_hi, int denom = 2, bool round_nearest = false) {
    if (denom < 1 || j_hi < j_lo) throw std::invalid_argument("horizon_grid: bad range");
    std::vector<int> grid;
    for (int j = j_lo; j <= j_hi; ++j) {
        double raw = std::pow(2.0, static_cast<double>(j) / denom);
        int N = static_cast<int>(round_nearest ? std::llround(raw) : std::ceil(raw));
        if (grid.empty() || N != grid.back()) grid.push_back(N);
    }
    return grid;
}

/// Runs the windowed-oracle experiment for every (gamma, delta, N) cell,
/// in (gamma, delta, N) lexicographic order. Each record is checked
/// against the theoretical bound at the realized exponent; a violation
/// is a hard failure.
inline std::vector<SweepRecord> run_sweep(const std::vector<double>& gammas,
                                          const std::vector<double>& deltas,
                                          const std::vector<int>& N_grid,
                                          double G = 1.0, double R = 1.0,
                                          const SweepObserver& observer = {}) {
    if (N_grid.empty()) throw std::invalid_argument("run_sweep: empty N grid");
    for (std::size_t i = 1; i < N_grid.size(); ++i)
        if (N_grid[i] <= N_grid[i - 1])
            throw std::invalid_argument("run_sweep: N grid must be strictly increasing");

    std::vector<SweepRecord> records;
    records.reserve(gammas.size() * deltas.size() * N_grid.size());
    for (double gamma : gammas) {
        for (double delta : deltas) {
            for (int N : N_grid) {
                const auto t0 = std::chrono::steady_clock::now();
                ProblemInstance problem = experiment_instance(N, delta, G);
                problem.R = R;
                StepsizeSchedule schedule = StepsizeSchedule::adagrad_horizon(R, N, gamma, G);
                RunTrace trace = run_subgradient(problem, schedule, N);

                SweepRecord rec;
                rec.N = N;
                rec.gamma = gamma;
                rec.delta_target = delta;
                rec.delta_realized = compute_delta(trace);
                rec.gap = trace.gap_last;
                rec.bound = theorem1_bound({G, R, N, gamma, rec.delta_realized});
                rec.run_wall_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (rec.gap > rec.bound + 1e-9 * G * R)
                    throw std::runtime_error(
                        "run_sweep: empirical gap exceeds the theoretical bound at N=" +
                        std::to_string(N) + " gamma=" + std::to_string(gamma) +
                        " delta=" + std::to_string(delta));
                if (observer) observer(rec, problem, trace);
                records.push_back(rec);
            }
        }
    }
    return records;
}

using Series = std::vector<std::pair<double, double>>;  // (N, value), sorted by N

/// Per-block maximum over geometric blocks [lo, lo*ratio); the final block
/// is closed so the largest N is never stranded alone. Each output point
/// carries the geometric mean of the N values in its block. ratio <= 1
/// returns the series unchanged.
inline Series window_max(const Series& series, double ratio = 2.0) {
    if (series.empty() || ratio <= 1.0) return series;
    Series out;
    const double top = series.back().first;
    double lo = series.front().first;
    std::size_t i = 0;
    while (i < series.size()) {
        const double hi = lo * ratio;
        const bool last = hi >= top;
        double log_sum = 0.0, best = series[i].second;
        std::size_t count = 0;
        while (i < series.size() && (series[i].first < hi || last)) {
            log_sum += std::log(series[i].first);
            best = std::max(best, series[i].second);
            ++count;
            ++i;
        }
        if (count > 0) out.emplace_back(std::exp(log_sum / count), best);
        lo = hi;
    }
    return out;
}

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int n_points = 0;
};

/// Ordinary least squares of log(value) against log(N).
inline SlopeFit fit_loglog_slope(const Series& series) {
    if (series.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need at least two points");
    std::vector<double> xs, ys;
    xs.reserve(series.size());
    ys.reserve(series.size());
    for (const auto& [n, val] : series) {
        if (!(val > 0.0))
            throw std::domain_error("fit_loglog_slope: nonpositive value in log domain");
        xs.push_back(std::log(n));
        ys.push_back(std::log(val));
    }
    const int n = static_cast<int>(xs.size());
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    SlopeFit fit;
    fit.n_points = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy > 0.0) {
        double ss_res = syy - sxy * sxy / sxx;
        fit.r_squared = std::min(1.0, std::max(0.0, 1.0 - ss_res / syy));
    } else {
        fit.r_squared = 1.0;
    }
    return fit;
}

/// Writes records as CSV with full 17-significant-digit decimals, one row
/// per record, in the order they were produced.
inline void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path + " for writing");
    out << "N,gamma,delta_target,delta_realized,gap,bound\n";
    char buf[512];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.N, r.gamma,
                      r.delta_target, r.delta_realized, r.gap, r.bound);
        out << buf;
    }
    if (!out) throw std::runtime_error("emit_csv: write failure on " + path);
}

/// Reads back a CSV produced by emit_csv.
inline std::vector<SweepRecord> parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("parse_csv: cannot open " + path);
    std::string line;
    std::getline(in, line);  // header
    std::vector<SweepRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SweepRecord r;
        if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf,%lf,%lf", &r.N, &r.gamma, &r.delta_target,
                        &r.delta_realized, &r.gap, &r.bound) != 6)
            throw std::runtime_error("parse_csv: malformed row in " + path);
        records.push_back(r);
    }
    return records;
}

}  // namespace adasub

#endif  // ADASUB_EXPERIMENTS_HPP
