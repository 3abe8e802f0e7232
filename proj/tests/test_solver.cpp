#include "doctest.h"

#include <cmath>

#include "adasub/instances.hpp"
#include "adasub/solver.hpp"

using namespace adasub;

TEST_CASE("project_ball examples") {
    CHECK(project_ball({0.0, 0.0}, 1.0, {2.0, 0.0}) == Vec{1.0, 0.0});
    Vec inside{0.3, -0.2};
    CHECK(project_ball({0.0, 0.0}, 1.0, inside) == inside);
    CHECK(project_ball({1.0, 1.0}, 2.0, {1.0, 5.0}) == Vec{1.0, 3.0});
}

TEST_CASE("project_box clamps per coordinate") {
    CHECK(project_box({-1.0, -1.0}, {1.0, 1.0}, {2.0, 0.5}) == Vec{1.0, 0.5});
}

TEST_CASE("stall instance reproduces the exact gap Gh/sqrt2") {
    for (double G : {1.0, 2.0}) {
        for (double h : {0.5, 1.0}) {
            for (int N : {1, 10, 100}) {
                auto inst = prop1_instance(G, 0.25, N, h);
                auto trace = run_subgradient(inst.problem, inst.schedule, N);
                CHECK(trace.gap_last ==
                      doctest::Approx(G * h / std::sqrt(2.0)).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("zero subgradients leave the iterate in place") {
    ProblemInstance p;
    p.dimension = 2;
    p.G = 1.0;
    p.x1 = {0.5, -0.5};
    p.optimum_value = 0.0;
    p.objective = [](const Vec&) { return 1.0; };
    p.oracle = [](int, const Vec&) -> Vec { return {0.0, 0.0}; };
    auto trace = run_subgradient(p, StepsizeSchedule::constant(1.0), 7);
    CHECK(trace.iterates.back() == p.x1);
    CHECK(trace.gap_last == 1.0);
}

TEST_CASE("single exact step on |x| lands on the optimum") {
    ProblemInstance p;
    p.dimension = 1;
    p.G = 1.0;
    p.x1 = {1.0};
    p.optimum_value = 0.0;
    p.objective = [](const Vec& x) { return std::abs(x[0]); };
    p.oracle = [](int, const Vec& x) -> Vec {
        return {x[0] > 0.0 ? 1.0 : (x[0] < 0.0 ? -1.0 : 0.0)};
    };
    auto trace = run_subgradient(p, StepsizeSchedule::constant(1.0), 1);
    CHECK(trace.iterates.back()[0] == 0.0);
    CHECK(trace.gap_last == 0.0);
}

TEST_CASE("stored steps reproduce the iterates exactly") {
    auto p = experiment_instance(64, 0.3);
    auto trace = run_subgradient(p, StepsizeSchedule::adagrad_horizon(1.0, 64, 0.25, 1.0), 64);
    for (int k = 0; k < trace.horizon(); ++k) {
        Vec next = axpy(trace.iterates[k], -trace.stepsizes[k], trace.subgradients[k]);
        CHECK(next == trace.iterates[k + 1]);
    }
}

TEST_CASE("cumulative squared norms are consistent") {
    auto p = experiment_instance(50, 0.4);
    auto trace = run_subgradient(p, StepsizeSchedule::adagrad_horizon(1.0, 50, 0.25, 1.0), 50);
    REQUIRE(trace.cum_sq.size() == 51);
    CHECK(trace.cum_sq[0] == 1.0);
    for (int k = 1; k <= 50; ++k) {
        CHECK(trace.cum_sq[k] >= trace.cum_sq[k - 1]);
        CHECK(trace.cum_sq[k] <= 1.0 * (1 + k) + 1e-12);
    }
}

TEST_CASE("identical inputs produce identical traces") {
    auto p = experiment_instance(40, 0.2);
    auto sched = StepsizeSchedule::adagrad_horizon(1.0, 40, 0.3, 1.0);
    auto a = run_subgradient(p, sched, 40);
    auto b = run_subgradient(p, sched, 40);
    CHECK(a.iterates == b.iterates);
    CHECK(a.stepsizes == b.stepsizes);
}

TEST_CASE("ball-constrained run stays feasible") {
    ProblemInstance p;
    p.dimension = 2;
    p.G = std::sqrt(2.0);
    p.x1 = {1.0, 0.0};
    p.optimum_value = -std::sqrt(2.0);  // attained at (-1/sqrt2, -1/sqrt2)
    p.objective = [](const Vec& x) { return x[0] + x[1]; };
    p.oracle = [](int, const Vec&) -> Vec { return {1.0, 1.0}; };
    p.projection = [](const Vec& y) { return project_ball({0.0, 0.0}, 1.0, y); };
    auto trace = run_subgradient(p, StepsizeSchedule::adagrad(1.0, p.G), 30);
    for (const auto& x : trace.iterates) {
        CHECK(norm(x) <= 1.0 + 1e-12);
    }
    CHECK(trace.gap_last >= -1e-12);
}

TEST_CASE("recorded subgradients pass the validity spot-check") {
    auto inst = thm2_case2_instance(1.0, 1.0, 32, 0.4);
    auto trace = run_subgradient(inst.problem, inst.schedule, 32);
    CHECK(subgradient_validity_residual(inst.problem, trace, 32, 123) >= -1e-9);
}

TEST_CASE("oracle exceeding the norm bound is rejected") {
    ProblemInstance p;
    p.dimension = 1;
    p.G = 1.0;
    p.x1 = {0.0};
    p.objective = [](const Vec& x) { return 2.0 * std::abs(x[0]); };
    p.oracle = [](int, const Vec&) -> Vec { return {2.0}; };
    CHECK_THROWS_AS(run_subgradient(p, StepsizeSchedule::constant(1.0), 3), std::runtime_error);
}
