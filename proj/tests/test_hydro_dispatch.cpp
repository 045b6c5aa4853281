#include <catch2/catch_amalgamated.hpp>

#include "meshopt/core/dominance.hpp"
#include "meshopt/hydro/case_study.hpp"
#include "meshopt/hydro/dispatch.hpp"

using namespace meshopt;
using namespace meshopt::hydro;

namespace {

std::vector<HourContext> hour0_context() {
    return {{102.0, 330.0, 0.005, 0.0, 0.0}, {208.0, 264.0, 0.005, 0.0, 0.0}};
}

DispatchDecision equal_split(const SystemParameters& system, double q1, double q2) {
    DispatchDecision d;
    d.turbine_flows = {std::vector<double>(system.plants[0].unit_count, q1),
                       std::vector<double>(system.plants[1].unit_count, q2)};
    d.spill_flows = {0.0, 0.0};
    return d;
}

}  // namespace

TEST_CASE("objective F1 definition and zero-flow convention") {
    CHECK(objective_f1({0.0, 0.0}, {0.0, 0.0}) == 0.0);
    CHECK(objective_f1({40.0}, {80.0}) == Catch::Approx(0.5));  // single plant: ph/Qt
    CHECK(objective_f1({330.03, 263.95}, {703.40, 572.69}) ==
          Catch::Approx(0.4650437838631868).epsilon(1e-12));
}

TEST_CASE("objective F2 definition") {
    const auto system = case_study_system();
    CHECK(objective_f2(system, {19528.0, 19528.0}) == Catch::Approx(1.0));
    CHECK(objective_f2(system, {0.8 * 19528.0, 0.8 * 19528.0}) == Catch::Approx(0.8));
    CHECK(objective_f2(system, {4250.0, 19528.0}) ==
          Catch::Approx(0.6088181073330602).epsilon(1e-12));
}

TEST_CASE("penalized objectives") {
    std::array<double, kConstraintFamilies> violations{};
    // feasible: exactly the negated objectives
    auto obj = penalized_objectives(0.47, 0.8, violations, 0.5);
    CHECK(obj == ObjectiveVector{-0.47, -0.8});
    // one violation of 0.1: both objectives shifted by 0.5 * 0.01
    violations[kDemandBand] = 0.1;
    obj = penalized_objectives(0.0, 0.0, violations, 0.5);
    CHECK(obj[0] == Catch::Approx(0.005));
    CHECK(obj[1] == Catch::Approx(0.005));
    // penalization never reorders two feasible points
    std::array<double, kConstraintFamilies> zero{};
    auto a = penalized_objectives(0.4, 0.7, zero, 0.5);
    auto b = penalized_objectives(0.5, 0.6, zero, 0.5);
    CHECK(dominates(a, b) == dominates(ObjectiveVector{-0.4, -0.7}, ObjectiveVector{-0.5, -0.6}));
}

TEST_CASE("literal penalty form for audits") {
    auto lit = penalized_objectives_literal(0.4, 0.8, 0.5);
    CHECK(lit[0] == Catch::Approx(0.5 * 0.16));
    CHECK(lit[1] == Catch::Approx(0.5 * 0.64));
    auto neg = penalized_objectives_literal(-0.4, -0.8, 0.5);
    CHECK(neg == ObjectiveVector{0.0, 0.0});
}

TEST_CASE("constraint violations fire per family") {
    const auto system = case_study_system();
    const std::vector<double> volumes{15622.4, 15622.4};
    const std::vector<double> arrivals{0.0, 0.0};
    const auto ctx = hour0_context();

    SECTION("near-optimal equal split is feasible") {
        // rated hour-0 flows
        const auto eval = evaluate_dispatch(system, equal_split(system, 705.81 / 8, 573.59 / 6),
                                            volumes, arrivals, ctx);
        for (double v : eval.violations) CHECK(v == 0.0);
        CHECK(eval.feasible());
        CHECK(eval.penalized[0] == Catch::Approx(-eval.f1));
        CHECK(eval.penalized[1] == Catch::Approx(-eval.f2));
    }

    SECTION("demand band breach") {
        const auto eval = evaluate_dispatch(system, equal_split(system, 60.0, 573.59 / 6),
                                            volumes, arrivals, ctx);
        CHECK(eval.violations[kDemandBand] > 0.0);
        CHECK_FALSE(eval.feasible());
    }

    SECTION("defluent breach has the documented normalization") {
        // total outflow 300 against minimum 400 over width 2100
        DispatchDecision d = equal_split(system, 300.0 / 8, 573.59 / 6);
        const auto eval = evaluate_dispatch(system, d, volumes, arrivals, ctx);
        CHECK(eval.violations[kDefluentRange] ==
              Catch::Approx((400.0 - 300.0) / (2500.0 - 400.0)));
    }

    SECTION("turbine bound breach") {
        DispatchDecision d = equal_split(system, 30.0, 573.59 / 6);  // below 50 minimum
        const auto eval = evaluate_dispatch(system, d, volumes, arrivals, ctx);
        CHECK(eval.violations[kTurbineBounds] > 0.0);
    }

    SECTION("forced spill when the reservoir would overflow") {
        auto ctx_flood = ctx;
        ctx_flood[0].natural_inflow = 1.5e6;  // absurd inflow to push past psi_max
        const auto eval = evaluate_dispatch(system, equal_split(system, 705.81 / 8, 573.59 / 6),
                                            volumes, arrivals, ctx_flood);
        CHECK(eval.violations[kForcedSpill] > 0.0);
        CHECK(eval.violations[kVolumeBounds] > 0.0);
    }

    SECTION("spill cap") {
        DispatchDecision d = equal_split(system, 705.81 / 8, 573.59 / 6);
        d.spill_flows[0] = 3000.0;  // above the 2500 cap
        const auto eval = evaluate_dispatch(system, d, volumes, arrivals, ctx);
        CHECK(eval.violations[kSpillCap] > 0.0);
    }
}

TEST_CASE("F2 is monotone in reservoir volume for a fixed decision") {
    const auto system = case_study_system();
    const auto ctx = hour0_context();
    const auto decision = equal_split(system, 705.81 / 8, 573.59 / 6);
    double prev = -1.0;
    for (double v = 10000.0; v <= 19000.0; v += 1000.0) {
        const auto eval = evaluate_dispatch(system, decision, {v, v}, {0.0, 0.0}, ctx);
        CHECK(eval.f2 > prev);
        prev = eval.f2;
    }
}

TEST_CASE("dispatch problem decision vector layout") {
    const auto system = case_study_system();
    DispatchProblem problem(system, {15622.4, 15622.4}, {0.0, 0.0}, hour0_context());
    CHECK(problem.dimension() == 16);
    CHECK(problem.lower_bound(0) == 50.0);
    CHECK(problem.upper_bound(7) == 150.0);
    CHECK(problem.lower_bound(14) == 0.0);
    CHECK(problem.upper_bound(15) == 2500.0);

    std::vector<double> x(16);
    for (std::size_t i = 0; i < 8; ++i) x[i] = 80.0 + static_cast<double>(i);
    for (std::size_t i = 8; i < 14; ++i) x[i] = 90.0 + static_cast<double>(i);
    x[14] = 1.0;
    x[15] = 2.0;
    const DispatchDecision d = problem.decode(x);
    CHECK(d.turbine_flows[0].size() == 8);
    CHECK(d.turbine_flows[1].size() == 6);
    CHECK(d.turbine_flows[0][3] == 83.0);
    CHECK(d.turbine_flows[1][0] == 98.0);
    CHECK(d.spill_flows == std::vector<double>{1.0, 2.0});
    CHECK(d.outflow(0) == Catch::Approx(80 + 81 + 82 + 83 + 84 + 85 + 86 + 87 + 1.0));

    // evaluate() agrees with the detailed evaluation
    const auto detail = problem.evaluate_detail(x);
    CHECK(problem.evaluate(x) == detail.penalized);
}
