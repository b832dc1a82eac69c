#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "netkin/coupling.hpp"
#include "netkin/kernels.hpp"
#include "netkin/layer.hpp"
#include "oracles.hpp"

using namespace netkin;
using namespace netkin::coupling;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Admissibility + balance + layer consistency for one resolution.
void check_resolution(const CouplingResolution& res, const std::array<double, 3>& uB,
                      double v) {
    CHECK(std::abs(res.mass_balance) <= 1e-14);
    for (int r = 0; r < res.degree(); ++r) {
        const auto& e = res.edge[r];
        CHECK(e.C >= 0.0);
        CHECK(role_half_riemann(res.kind, r, uB[r]).distance(e.u_K) <= 1e-12);
        if (e.u0) {
            // The layer launched at the foot must reach the trace.
            const auto sol = classify_layer(e.C, role_end(res.kind, r) == EdgeEnd::Left
                                                     ? *e.u0
                                                     : -*e.u0,
                                            v * v);
            REQUIRE(sol.branch != LayerBranch::Divergent);
            const double limit = role_end(res.kind, r) == EdgeEnd::Left ? *sol.asymptotic
                                                                        : -*sol.asymptotic;
            CHECK(limit == doctest::Approx(e.u_K).epsilon(1e-11));
        }
    }
}

} // namespace

TEST_CASE("two-edge nodes reduce to the Riemann problem") {
    auto r = couple_1_1(-1.0, 1.0);
    CHECK(r.edge[0].u_K == 0.0);
    CHECK(r.edge[1].u_K == 0.0);

    r = couple_1_1(0.3, -0.2);
    CHECK(r.edge[0].u_K == doctest::Approx(0.3));
    CHECK(r.edge[1].u_K == doctest::Approx(0.3));

    r = couple_1_1(0.3, -0.3); // stationary shock: each edge keeps its state
    CHECK(r.edge[0].u_K == doctest::Approx(0.3));
    CHECK(r.edge[1].u_K == doctest::Approx(-0.3));

    r = couple_1_1(-0.4, -0.2);
    CHECK(r.edge[0].u_K == doctest::Approx(-0.2));
    r = couple_1_1(0.4, 0.2);
    CHECK(r.edge[0].u_K == doctest::Approx(0.4));

    for (int trial = 0; trial < 1000; ++trial) {
        const double a = oracles::uniform(-1, 1), b = oracles::uniform(-1, 1);
        const auto res = couple_1_1(a, b);
        CHECK(res.edge[0].C == doctest::Approx(res.edge[1].C).epsilon(1e-14));
        CHECK(HalfRiemannSet{HalfRiemannSet::Side::Right, a}.distance(res.edge[0].u_K) <=
              1e-12);
        CHECK(HalfRiemannSet{HalfRiemannSet::Side::Left, b}.distance(res.edge[1].u_K) <= 1e-12);
        // The Godunov flux of the original pair equals F(u_K): the trace is
        // the interface value of the exact Riemann solution.
        CHECK(godunov_flux(a, b) == doctest::Approx(res.edge[0].C).epsilon(1e-14));
    }
}

TEST_CASE("1-2 reference resolutions") {
    const double v = 2.0;
    SUBCASE("RP1-1-1") {
        const auto r = couple_1_2(-1.0, 0.75, 0.5, v);
        CHECK(r.case_label == "RP1-1-1");
        for (int e = 0; e < 3; ++e) CHECK(r.edge[e].u_K == 0.0);
    }
    SUBCASE("RP2-1-1 splits the ingoing flux evenly") {
        const auto r = couple_1_2(1.0, 0.75, 0.5, v);
        CHECK(r.case_label == "RP2-1-1");
        CHECK(r.edge[0].u_K == doctest::Approx(1.0));
        CHECK(r.edge[1].u_K == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
        CHECK(r.edge[2].u_K == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
        CHECK(r.edge[1].C == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("RP1-1-2") {
        const auto r = couple_1_2(-1.0, 0.75, -0.5, v);
        CHECK(r.case_label == "RP1-1-2");
        CHECK(r.edge[0].u_K == doctest::Approx(-0.5));
        CHECK(r.edge[1].u_K == 0.0);
        CHECK(r.edge[2].u_K == doctest::Approx(-0.5));
        // Foot values from the layer analysis (v = 2).
        CHECK(*r.edge[1].u0 == doctest::Approx(-0.25 / 6.0 - 0.5).epsilon(1e-13));
        CHECK(*r.edge[2].u0 == doctest::Approx(-0.5 / 6.0 - 0.5).epsilon(1e-13));
    }
    SUBCASE("RP1-2-2 merges both backward flows") {
        const auto r = couple_1_2(-1.0, -0.75, -0.5, v);
        CHECK(r.case_label == "RP1-2-2");
        CHECK(r.edge[0].u_K == doctest::Approx(-std::sqrt(0.8125)).epsilon(1e-14));
        CHECK(r.edge[1].u_K == doctest::Approx(-0.75));
        CHECK(r.edge[2].u_K == doctest::Approx(-0.5));
    }
    SUBCASE("RP2-1-2 middle subcase") {
        const auto r = couple_1_2(0.6, 0.75, -0.5, v);
        CHECK(r.case_label == "RP2-1-2/2");
        CHECK(r.edge[0].u_K == doctest::Approx(0.6));
        CHECK(r.edge[1].u_K == doctest::Approx(std::sqrt(0.11)).epsilon(1e-13));
        CHECK(r.edge[2].u_K == doctest::Approx(-0.5));
    }
    SUBCASE("RP2-2-2 subcase 4") {
        const auto r = couple_1_2(0.8, -0.75, -0.5, v);
        CHECK(r.case_label == "RP2-2-2/4");
        CHECK(r.edge[0].u_K == doctest::Approx(-0.901388).epsilon(1e-6));
        CHECK(r.edge[1].u_K == doctest::Approx(-0.75));
        CHECK(r.edge[2].u_K == doctest::Approx(-0.5));
    }
    SUBCASE("RP2-2-2 subcase 1") {
        const auto r = couple_1_2(0.8, -0.2, -0.3, v);
        CHECK(r.case_label == "RP2-2-2/1");
        CHECK(r.edge[1].u_K == doctest::Approx(0.8 / kSqrt2));
    }
}

TEST_CASE("2-1 reference resolutions") {
    const double v = 2.0;
    SUBCASE("RP1-1-1") {
        const auto r = couple_2_1(-1.0, -0.75, 0.5, v);
        CHECK(r.case_label == "RP1-1-1");
        for (int e = 0; e < 3; ++e) CHECK(r.edge[e].u_K == 0.0);
    }
    SUBCASE("RP2-2-1 merges into the out-edge") {
        const auto r = couple_2_1(0.5, 0.4, 0.75, v);
        CHECK(r.case_label == "RP2-2-1");
        CHECK(r.edge[0].u_K == doctest::Approx(0.5));
        CHECK(r.edge[1].u_K == doctest::Approx(0.4));
        CHECK(r.edge[2].u_K == doctest::Approx(std::sqrt(0.41)).epsilon(1e-13));
    }
    SUBCASE("RP2-2-2 subcase 4: strong transsonic shock in the out-edge") {
        const auto r = couple_2_1(0.5, 0.4, -0.3, v);
        CHECK(r.case_label == "RP2-2-2/4");
        CHECK(r.edge[0].u_K == doctest::Approx(0.5));
        CHECK(r.edge[1].u_K == doctest::Approx(0.4));
        CHECK(r.edge[2].u_K == doctest::Approx(std::sqrt(0.41)).epsilon(1e-13));
    }
    SUBCASE("RP1-1-2 splits the backward flow") {
        const auto r = couple_2_1(-1.0, -0.75, -0.5, v);
        CHECK(r.case_label == "RP1-1-2");
        CHECK(r.edge[0].u_K == doctest::Approx(-0.5 / kSqrt2).epsilon(1e-14));
        CHECK(r.edge[1].u_K == doctest::Approx(-0.5 / kSqrt2).epsilon(1e-14));
        CHECK(r.edge[2].u_K == doctest::Approx(-0.5));
    }
    SUBCASE("RP2-1-1 feeds edge i through") {
        const auto r = couple_2_1(1.0, -0.75, 0.5, v);
        CHECK(r.case_label == "RP2-1-1");
        CHECK(r.edge[0].u_K == doctest::Approx(1.0));
        CHECK(r.edge[1].u_K == 0.0);
        CHECK(r.edge[2].u_K == doctest::Approx(1.0));
    }
    SUBCASE("RP1-2-2 middle subcase") {
        const auto r = couple_2_1(-1.0, 0.5, -0.6, v);
        CHECK(r.case_label == "RP1-2-2/2");
        CHECK(r.edge[0].u_K == doctest::Approx(-std::sqrt(0.11)).epsilon(1e-13));
        CHECK(r.edge[1].u_K == doctest::Approx(0.5));
        CHECK(r.edge[2].u_K == doctest::Approx(-0.6));
    }
}

TEST_CASE("random resolutions: balance, admissibility, layer consistency") {
    for (int trial = 0; trial < 5000; ++trial) {
        const double v = oracles::uniform(0.5, 4.0);
        std::array<double, 3> uB{oracles::uniform(-1, 1), oracles::uniform(-1, 1),
                                 oracles::uniform(-1, 1)};
        check_resolution(couple_1_2(uB[0], uB[1], uB[2], v), uB, v);
        check_resolution(couple_2_1(uB[0], uB[1], uB[2], v), uB, v);
    }
}

TEST_CASE("traces are independent of the kinetic speed") {
    for (int trial = 0; trial < 2000; ++trial) {
        std::array<double, 3> uB{oracles::uniform(-1, 1), oracles::uniform(-1, 1),
                                 oracles::uniform(-1, 1)};
        const auto a2 = couple_1_2(uB[0], uB[1], uB[2], 2.0);
        const auto a4 = couple_1_2(uB[0], uB[1], uB[2], 4.0);
        const auto b2 = couple_2_1(uB[0], uB[1], uB[2], 2.0);
        const auto b4 = couple_2_1(uB[0], uB[1], uB[2], 4.0);
        CHECK(a2.case_label == a4.case_label);
        CHECK(b2.case_label == b4.case_label);
        for (int e = 0; e < 3; ++e) {
            CHECK(a2.edge[e].u_K == doctest::Approx(a4.edge[e].u_K).epsilon(1e-12));
            CHECK(b2.edge[e].u_K == doctest::Approx(b4.edge[e].u_K).epsilon(1e-12));
        }
    }
}

TEST_CASE("2-1 resolutions are the reflection of 1-2 resolutions") {
    // x -> -x, u -> -u maps a 2-1 node with roles (i, j, k) onto a 1-2 node
    // with roles (k, i, j); traces map with a sign flip.
    for (int trial = 0; trial < 5000; ++trial) {
        const double v = oracles::uniform(0.5, 4.0);
        const double a = oracles::uniform(-1, 1);
        const double b = oracles::uniform(-1, 1);
        const double c = oracles::uniform(-1, 1);
        const auto two_one = couple_2_1(a, b, c, v);
        const auto mirror = couple_1_2(-c, -a, -b, v);
        CHECK(two_one.edge[0].u_K == doctest::Approx(-mirror.edge[1].u_K).epsilon(1e-12));
        CHECK(two_one.edge[1].u_K == doctest::Approx(-mirror.edge[2].u_K).epsilon(1e-12));
        CHECK(two_one.edge[2].u_K == doctest::Approx(-mirror.edge[0].u_K).epsilon(1e-12));
        CHECK(two_one.edge[0].C == doctest::Approx(mirror.edge[1].C).epsilon(1e-12));
        CHECK(two_one.edge[1].C == doctest::Approx(mirror.edge[2].C).epsilon(1e-12));
        CHECK(two_one.edge[2].C == doctest::Approx(mirror.edge[0].C).epsilon(1e-12));
        if (two_one.edge[0].u0 && mirror.edge[1].u0)
            CHECK(*two_one.edge[0].u0 == doctest::Approx(-*mirror.edge[1].u0).epsilon(1e-12));
        if (two_one.edge[2].u0 && mirror.edge[0].u0)
            CHECK(*two_one.edge[2].u0 == doctest::Approx(-*mirror.edge[0].u0).epsilon(1e-12));
    }
}

TEST_CASE("junction fixpoint oracle reproduces the tables") {
    int converged = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const double v = 2.0;
        std::array<double, 3> uB{oracles::uniform(-1, 1), oracles::uniform(-1, 1),
                                 oracles::uniform(-1, 1)};
        for (auto kind : {NodeKind::OneTwo, NodeKind::TwoOne}) {
            const auto fp = oracles::junction_fixpoint(kind, uB, v);
            if (!fp.converged) continue;
            ++converged;
            const auto table = kind == NodeKind::OneTwo
                                   ? couple_1_2(uB[0], uB[1], uB[2], v)
                                   : couple_2_1(uB[0], uB[1], uB[2], v);
            for (int e = 0; e < 3; ++e) {
                CHECK(fp.u_K[e] == doctest::Approx(table.edge[e].u_K).epsilon(1e-6));
                CHECK(fp.C[e] == doctest::Approx(table.edge[e].C).epsilon(1e-6));
            }
        }
    }
    CHECK(converged > 200);
}

TEST_CASE("degenerate nodes admit only the zero state") {
    CHECK(degenerate_node_check(NodeKind::ThreeZero, {0.0, 0.0, 0.0}).empty());
    CHECK(degenerate_node_check(NodeKind::ZeroThree, {0.0, 0.0, 0.0}).empty());
    CHECK(degenerate_node_check(NodeKind::ThreeZero, {0.0, 0.1, 0.0}).size() == 1);
    CHECK(degenerate_node_check(NodeKind::ZeroThree, {-0.2, 0.1, 0.3}).size() == 3);
    CHECK_THROWS_AS(degenerate_node_check(NodeKind::OneTwo, {0, 0, 0}),
                    std::invalid_argument);
}
