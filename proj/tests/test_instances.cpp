#include "doctest.h"

#include <cmath>

#include "adasub/bounds.hpp"
#include "adasub/instances.hpp"
#include "adasub/solver.hpp"

using namespace adasub;

TEST_CASE("stall instance: predicted gap and solver agreement") {
    auto inst = prop1_instance(1.0, 0.0, 16, 1.0);
    CHECK(inst.predicted_gap == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    auto trace = run_subgradient(inst.problem, inst.schedule, 16);
    CHECK(trace.gap_last == doctest::Approx(inst.predicted_gap).epsilon(1e-14));
}

TEST_CASE("stall oracle refuses queries past the horizon") {
    auto inst = prop1_instance(1.0, 0.0, 4, 1.0);
    CHECK_THROWS_AS(inst.problem.oracle(5, {0.0}), std::out_of_range);
}

TEST_CASE("case-1 instance: exact horizon-dependent gap") {
    auto inst = thm2_case1_instance(1.0, 1.0, 16, 0.25);
    CHECK(inst.predicted_gap == doctest::Approx(1.0 / (std::sqrt(2.0) * 2.0)).epsilon(1e-15));
    auto trace = run_subgradient(inst.problem, inst.schedule, 16);
    CHECK(trace.gap_last == doctest::Approx(inst.predicted_gap).epsilon(1e-14));

    auto one = thm2_case1_instance(2.0, 3.0, 1, 0.37);
    CHECK(one.predicted_gap == doctest::Approx(6.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("case-1 gap scales as N^{-gamma}") {
    const double gamma = 0.2;
    double ref = 0.0;
    for (int N : {4, 16, 64, 256}) {
        auto inst = thm2_case1_instance(1.0, 1.0, N, gamma);
        auto trace = run_subgradient(inst.problem, inst.schedule, N);
        double scaled = trace.gap_last * std::pow(static_cast<double>(N), gamma);
        if (ref == 0.0) ref = scaled;
        CHECK(scaled == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("case-2 dimension formula") {
    CHECK(thm2_case2_dimension(64, 0.5) == 16);  // exponent 1 - 2 gamma = 0
    CHECK(thm2_case2_dimension(1024, 0.5) == 16);
    CHECK(thm2_case2_dimension(64, 0.4) == static_cast<int>(std::ceil(16.0 * std::pow(64.0, 0.2))));
}

TEST_CASE("case-2 run: lower bound, subgradient norms and stepsizes") {
    const int N = 64;
    const double gamma = 0.4;
    auto inst = thm2_case2_instance(1.0, 1.0, N, gamma);
    auto trace = run_subgradient(inst.problem, inst.schedule, N);

    CHECK(trace.gap_last >= inst.predicted_gap * (1.0 - 1e-12));

    const double h = base_step(1.0, N, gamma);
    for (int k = 1; k <= N; ++k) {
        CHECK(norm(trace.subgradients[k - 1]) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(trace.stepsizes[k - 1] ==
              doctest::Approx(h / std::sqrt(1.0 + k)).epsilon(1e-14));
    }

    // every chosen coordinate attains the max at its iterate
    for (int k = 0; k < N; ++k) {
        const Vec& x = trace.iterates[k];
        const Vec& g = trace.subgradients[k];
        int moved = -1;
        for (int i = 0; i < inst.problem.dimension; ++i)
            if (g[i] != 0.0) moved = i;
        REQUIRE(moved >= 0);
        double mx = 0.0;
        for (double xi : x) mx = std::max(mx, std::abs(xi));
        CHECK(std::abs(x[moved]) == doctest::Approx(mx).epsilon(1e-15));
    }
}

TEST_CASE("case-2 l1 movement budget") {
    for (double gamma : {0.3, 0.45}) {
        const int N = 128;
        auto inst = thm2_case2_instance(1.0, 1.0, N, gamma);
        auto trace = run_subgradient(inst.problem, inst.schedule, N);
        double l1 = 0.0;
        for (int i = 0; i < inst.problem.dimension; ++i)
            l1 += std::abs(trace.iterates[N][i] - trace.iterates[0][i]);
        CHECK(l1 <= 2.0 * std::pow(static_cast<double>(N), 0.5 - gamma) + 1e-9);
    }
}

TEST_CASE("experiment oracle window sizes") {
    // m = ceil(100^{0.4}) = 7
    auto p = experiment_instance(100, 0.2);
    int silent_until = 0;
    for (int k = 1; k <= 100; ++k) {
        Vec g = p.oracle(k, {0.0});
        if (g[0] == 0.0) silent_until = k;
        else break;
    }
    CHECK(silent_until == 93);
}

TEST_CASE("experiment oracle boundary windows") {
    // delta = 0: only the last step is active
    auto p0 = experiment_instance(50, 0.0);
    CHECK(p0.oracle(49, {0.0})[0] == 0.0);
    CHECK(p0.oracle(50, {0.0})[0] == -1.0);
    // delta = 1/2: every step is active
    auto p1 = experiment_instance(50, 0.5);
    CHECK(p1.oracle(1, {0.0})[0] == -1.0);
    CHECK(p1.oracle(1, {0.3})[0] == 1.0);
    CHECK(p1.oracle(1, {-0.3})[0] == -1.0);
}

TEST_CASE("experiment trace has the prescribed idle/active split") {
    const int N = 200;
    const double dt = 0.3;
    const int m = static_cast<int>(std::ceil(std::pow(200.0, 0.6)));
    auto p = experiment_instance(N, dt);
    auto trace = run_subgradient(p, StepsizeSchedule::adagrad_horizon(1.0, N, 0.25, 1.0), N);
    for (int k = 1; k <= N; ++k) {
        double gn = norm(trace.subgradients[k - 1]);
        if (k <= N - m)
            CHECK(gn == 0.0);
        else
            CHECK(gn == 1.0);
    }
    CHECK(compute_delta(trace) >= dt - 1e-12);
}
