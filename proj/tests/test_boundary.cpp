#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "netkin/coupling.hpp"
#include "netkin/layer.hpp"
#include "oracles.hpp"

using namespace netkin;
using namespace netkin::coupling;

TEST_CASE("half-Riemann set membership") {
    SUBCASE("left side") {
        HalfRiemannSet pos{HalfRiemannSet::Side::Left, 0.5};
        CHECK(pos.contains(0.0));
        CHECK(pos.contains(2.0));
        CHECK(!pos.contains(-1e-12));

        HalfRiemannSet neg{HalfRiemannSet::Side::Left, -0.5};
        CHECK(neg.contains(-0.5));    // the singleton
        CHECK(!neg.contains(-0.3));   // inside the gap (u_B, -u_B)
        CHECK(neg.contains(0.5));     // closed endpoint of the ray
        CHECK(neg.contains(3.0));
        CHECK(!neg.contains(-0.7));
        CHECK(neg.distance(-0.3) == doctest::Approx(0.2));
    }
    SUBCASE("right side") {
        HalfRiemannSet neg{HalfRiemannSet::Side::Right, -0.5};
        CHECK(neg.contains(0.0));
        CHECK(neg.contains(-4.0));
        CHECK(!neg.contains(0.1));

        HalfRiemannSet pos{HalfRiemannSet::Side::Right, 0.5};
        CHECK(pos.contains(0.5));
        CHECK(pos.contains(-0.5));
        CHECK(!pos.contains(0.3));
        CHECK(!pos.contains(-0.4));
    }
}

TEST_CASE("left boundary resolution") {
    SUBCASE("transsonic: positive interior state, negative inflow") {
        const auto r = resolve_left_boundary(-0.25, 0.5, 2.0);
        CHECK(r.case_id == 2);
        CHECK(r.u_K == 0.0);
        CHECK(r.outgoing == doctest::Approx(-0.25));
        CHECK(r.C == 0.0);
        CHECK(r.u0 == doctest::Approx(-0.5)); // foot of the -4/(x+8) layer
    }
    SUBCASE("ingoing: trace solves the layer flux equation") {
        const auto r = resolve_left_boundary(0.25, 0.5, 2.0);
        CHECK(r.case_id == 1);
        CHECK(r.u_K == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
        CHECK(r.outgoing == doctest::Approx(std::sqrt(2.0) - 1.0 - 0.25).epsilon(1e-13));
        CHECK(r.C == doctest::Approx(solve_C_ingoing(0.25, 2.0)).epsilon(1e-14));
    }
    SUBCASE("outgoing: negative interior keeps its state") {
        // Threshold for u_B = -0.5, v = 2 is (u_B^2/v - u_B)/2 = 0.3125.
        const auto r = resolve_left_boundary(0.0, -0.5, 2.0);
        CHECK(r.case_id == 3);
        CHECK(r.u_K == -0.5);
        CHECK(r.outgoing == doctest::Approx(-0.125));
        const auto r2 = resolve_left_boundary(0.32, -0.5, 2.0);
        CHECK(r2.case_id == 1);
    }
    SUBCASE("case-switch continuity in outgoing flux and C") {
        for (int trial = 0; trial < 200; ++trial) {
            const double v = oracles::uniform(0.5, 4.0);
            const double uB = oracles::uniform(-2.0, -1e-3);
            const double thr = 0.5 * (uB * uB / v - uB);
            const auto lo = resolve_left_boundary(thr - 1e-12, uB, v);
            const auto hi = resolve_left_boundary(thr + 1e-12, uB, v);
            CHECK(lo.case_id == 3);
            CHECK(hi.case_id == 1);
            CHECK(lo.C == doctest::Approx(hi.C).epsilon(1e-9));
            CHECK(lo.outgoing == doctest::Approx(hi.outgoing).epsilon(1e-9));
        }
    }
}

TEST_CASE("right boundary resolution") {
    SUBCASE("outgoing with the reference inflow f1 = -9/64") {
        const auto r = resolve_right_boundary(-9.0 / 64.0, 0.5, 2.0);
        CHECK(r.case_id == 3);
        CHECK(r.u_K == 0.5);
        CHECK(r.outgoing == doctest::Approx(-1.0 / 64.0).epsilon(1e-14));
        CHECK(r.C == doctest::Approx(0.25));
        CHECK(r.u0 == doctest::Approx(-0.15625));
    }
    SUBCASE("transsonic") {
        const auto r = resolve_right_boundary(0.1, -0.5, 2.0);
        CHECK(r.case_id == 2);
        CHECK(r.u_K == 0.0);
        CHECK(r.outgoing == doctest::Approx(0.1));
    }
    SUBCASE("ingoing mirrors the left case") {
        const auto r = resolve_right_boundary(-0.25, -0.5, 2.0);
        CHECK(r.case_id == 1);
        CHECK(r.u_K == doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-14));
    }
}

TEST_CASE("right resolution is the mirror of the left resolution") {
    for (int trial = 0; trial < 2000; ++trial) {
        const double v = oracles::uniform(0.5, 4.0);
        const double uB = oracles::uniform(-1.5, 1.5);
        const double fin = oracles::uniform(-1.0, 1.0);
        const auto right = resolve_right_boundary(fin, uB, v);
        const auto left = resolve_left_boundary(-fin, -uB, v);
        CHECK(right.case_id == left.case_id);
        CHECK(right.u_K == doctest::Approx(-left.u_K).epsilon(1e-13));
        CHECK(right.outgoing == doctest::Approx(-left.outgoing).epsilon(1e-13));
        CHECK(right.C == doctest::Approx(left.C).epsilon(1e-13));
        CHECK(right.u0 == doctest::Approx(-left.u0).epsilon(1e-13));
    }
}

TEST_CASE("resolved traces are admissible and consistent with the layer") {
    for (int trial = 0; trial < 2000; ++trial) {
        const double v = oracles::uniform(0.5, 4.0);
        const double uB = oracles::uniform(-1.5, 1.5);
        const double fin = oracles::uniform(-1.0, 1.0);
        const double a = v * v;

        const auto left = resolve_left_boundary(fin, uB, v);
        CHECK(HalfRiemannSet{HalfRiemannSet::Side::Left, uB}.distance(left.u_K) <= 1e-12);
        // The layer from the resolved foot reaches the resolved trace.
        const auto sol = classify_layer(left.C, left.u0, a);
        REQUIRE(sol.branch != LayerBranch::Divergent);
        CHECK(*sol.asymptotic == doctest::Approx(left.u_K).epsilon(1e-12));
        // Kinetic consistency: the prescribed component at the foot is fin.
        const double f2_foot = (left.C + v * left.u0) / (2.0 * v);
        CHECK(f2_foot == doctest::Approx(fin).epsilon(1e-12));

        const auto right = resolve_right_boundary(fin, uB, v);
        CHECK(HalfRiemannSet{HalfRiemannSet::Side::Right, uB}.distance(right.u_K) <= 1e-12);
        const double f1_foot = (v * right.u0 - right.C) / (2.0 * v);
        CHECK(f1_foot == doctest::Approx(fin).epsilon(1e-12));
    }
}
