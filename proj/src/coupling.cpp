#include "netkin/coupling.hpp"

#include <cmath>
#include <stdexcept>

namespace netkin {
namespace coupling {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_positive_v(double v) {
    if (!(v > 0.0)) throw std::invalid_argument("coupling: v must be > 0");
}

} // namespace

double HalfRiemannSet::distance(double u) const {
    if (side == Side::Left) {
        if (u_B >= 0.0) return u >= 0.0 ? 0.0 : -u;
        // {u_B} united with [-u_B, inf)
        if (u == u_B) return 0.0;
        if (u >= -u_B) return 0.0;
        return std::min(std::abs(u - u_B), -u_B - u);
    }
    if (u_B <= 0.0) return u <= 0.0 ? 0.0 : u;
    // (-inf, -u_B] united with {u_B}
    if (u == u_B) return 0.0;
    if (u <= -u_B) return 0.0;
    return std::min(std::abs(u - u_B), u + u_B);
}

BoundaryResolution resolve_left_boundary(double f2_in, double u_B, double v) {
    require_positive_v(v);
    BoundaryResolution r;
    const bool ingoing = u_B >= 0.0 ? f2_in > 0.0
                                    : f2_in >= 0.5 * (u_B * u_B / v - u_B);
    if (ingoing) {
        r.case_id = 1;
        r.label = "ingoing";
        r.u_K = 0.5 * v * (-1.0 + std::sqrt(1.0 + 8.0 * f2_in / v));
        r.C = r.u_K * r.u_K;
        r.outgoing = r.u_K - f2_in;
        r.u0 = r.u_K;
    } else if (u_B >= 0.0) {
        r.case_id = 2;
        r.label = "transsonic";
        r.u_K = 0.0;
        r.C = 0.0;
        r.outgoing = f2_in;
        r.u0 = 2.0 * f2_in;
    } else {
        r.case_id = 3;
        r.label = "outgoing";
        r.u_K = u_B;
        r.C = u_B * u_B;
        r.outgoing = f2_in - r.C / v;
        r.u0 = 2.0 * f2_in - r.C / v;
    }
    return r;
}

BoundaryResolution resolve_right_boundary(double f1_in, double u_B, double v) {
    require_positive_v(v);
    BoundaryResolution r;
    const bool ingoing = u_B <= 0.0 ? f1_in < 0.0
                                    : f1_in <= -0.5 * (u_B * u_B / v + u_B);
    if (ingoing) {
        r.case_id = 1;
        r.label = "ingoing";
        r.u_K = 0.5 * v * (1.0 - std::sqrt(1.0 - 8.0 * f1_in / v));
        r.C = r.u_K * r.u_K;
        r.outgoing = r.u_K - f1_in;
        r.u0 = r.u_K;
    } else if (u_B <= 0.0) {
        r.case_id = 2;
        r.label = "transsonic";
        r.u_K = 0.0;
        r.C = 0.0;
        r.outgoing = f1_in;
        r.u0 = 2.0 * f1_in;
    } else {
        r.case_id = 3;
        r.label = "outgoing";
        r.u_K = u_B;
        r.C = u_B * u_B;
        r.outgoing = f1_in + r.C / v;
        r.u0 = 2.0 * f1_in + r.C / v;
    }
    return r;
}

CouplingResolution couple_1_1(double u_B_i, double u_B_j) {
    CouplingResolution res;
    res.kind = NodeKind::OneOne;
    const bool i_neg = u_B_i <= 0.0;
    const bool j_pos = u_B_j >= 0.0;
    double ui, uj;
    if (i_neg && j_pos) {
        res.case_label = "RP1-1";
        ui = uj = 0.0;
    } else if (i_neg && !j_pos) {
        res.case_label = "RP1-2";
        ui = uj = u_B_j;
    } else if (!i_neg && j_pos) {
        res.case_label = "RP2-1";
        ui = uj = u_B_i;
    } else if (u_B_i == -u_B_j) {
        // Stationary shock: each edge keeps its own state.
        res.case_label = "RP2-2/tie";
        ui = u_B_i;
        uj = u_B_j;
    } else if (u_B_i > -u_B_j) {
        res.case_label = "RP2-2";
        ui = uj = u_B_i;
    } else {
        res.case_label = "RP2-2";
        ui = uj = u_B_j;
    }
    res.edge[0] = {ui, ui * ui, ui};
    res.edge[1] = {uj, uj * uj, uj};
    res.mass_balance = res.edge[0].C - res.edge[1].C;
    return res;
}

namespace {

// Shared building blocks of the tripod tables, (i in; j, k out) orientation.
// The 2-1 table reuses them through the u -> -u, x -> -x reflection.

/// All flux leaves through the in-edge and splits evenly: C_j = C_k = C_i/2.
void split_from_i(CouplingResolution& res, double u_i, double v) {
    const double Ci = u_i * u_i;
    const double t = kInvSqrt2 * u_i;
    res.edge[0] = {u_i, Ci, Ci / (2.0 * v) + t};
    res.edge[1] = {t, 0.5 * Ci, t};
    res.edge[2] = {t, 0.5 * Ci, t};
}

/// Both out-edges keep their states and feed the in-edge: C_i = C_j + C_k.
void merge_into_i(CouplingResolution& res, double u_j, double u_k, double v) {
    const double Cj = u_j * u_j;
    const double Ck = u_k * u_k;
    const double Ci = Cj + Ck;
    const double S = std::sqrt(Ci);
    res.edge[0] = {-S, Ci, -S};
    res.edge[1] = {u_j, Cj, -(2.0 * Cj + Ck) / (3.0 * v) - S};
    res.edge[2] = {u_k, Ck, -(Cj + 2.0 * Ck) / (3.0 * v) - S};
}

/// In-edge and out-edge k keep their states, j takes the flux difference:
/// C_j = C_i - C_k. Requires u_i > 0 > u_k with u_k^2 <= u_i^2 <= 2 u_k^2.
void pass_through_j(CouplingResolution& res, double u_i, double u_k, double v) {
    const double Ci = u_i * u_i;
    const double Ck = u_k * u_k;
    const double Cj = std::max(0.0, Ci - Ck);
    const double R = std::sqrt(Cj);
    res.edge[0] = {u_i, Ci, (2.0 * Ci - Ck) / (3.0 * v) + R};
    res.edge[1] = {R, Cj, R};
    res.edge[2] = {u_k, Ck, (Ci - 2.0 * Ck) / (3.0 * v) + R};
}

/// As pass_through_j with the roles of j and k exchanged: C_k = C_i - C_j.
void pass_through_k(CouplingResolution& res, double u_i, double u_j, double v) {
    const double Ci = u_i * u_i;
    const double Cj = u_j * u_j;
    const double Ck = std::max(0.0, Ci - Cj);
    const double R = std::sqrt(Ck);
    res.edge[0] = {u_i, Ci, (2.0 * Ci - Cj) / (3.0 * v) + R};
    res.edge[1] = {u_j, Cj, (Ci - 2.0 * Cj) / (3.0 * v) + R};
    res.edge[2] = {R, Ck, R};
}

/// Out-edge k drives everything, j goes transsonic: C_i = C_k, C_j = 0.
/// Requires u_k < 0.
void drain_into_k(CouplingResolution& res, double u_k, double v) {
    const double Ck = u_k * u_k;
    res.edge[0] = {u_k, Ck, u_k};
    res.edge[1] = {0.0, 0.0, -Ck / (3.0 * v) + u_k};
    res.edge[2] = {u_k, Ck, -2.0 * Ck / (3.0 * v) + u_k};
}

/// Mirror image: out-edge j drives, k goes transsonic: C_i = C_j, C_k = 0.
void drain_into_j(CouplingResolution& res, double u_j, double v) {
    const double Cj = u_j * u_j;
    res.edge[0] = {u_j, Cj, u_j};
    res.edge[1] = {u_j, Cj, -2.0 * Cj / (3.0 * v) + u_j};
    res.edge[2] = {0.0, 0.0, -Cj / (3.0 * v) + u_j};
}

} // namespace

CouplingResolution couple_1_2(double u_B_i, double u_B_j, double u_B_k, double v) {
    require_positive_v(v);
    CouplingResolution res;
    res.kind = NodeKind::OneTwo;
    const bool i_neg = u_B_i <= 0.0;
    const bool j_pos = u_B_j >= 0.0;
    const bool k_pos = u_B_k >= 0.0;

    if (i_neg && j_pos && k_pos) {
        res.case_label = "RP1-1-1";
        res.edge[0] = res.edge[1] = res.edge[2] = {0.0, 0.0, 0.0};
    } else if (i_neg && j_pos && !k_pos) {
        res.case_label = "RP1-1-2";
        drain_into_k(res, u_B_k, v);
    } else if (i_neg && !j_pos && k_pos) {
        res.case_label = "RP1-2-1";
        drain_into_j(res, u_B_j, v);
    } else if (!i_neg && j_pos && k_pos) {
        res.case_label = "RP2-1-1";
        split_from_i(res, u_B_i, v);
    } else if (i_neg && !j_pos && !k_pos) {
        res.case_label = "RP1-2-2";
        merge_into_i(res, u_B_j, u_B_k, v);
    } else if (!i_neg && j_pos && !k_pos) {
        if (u_B_i >= -kSqrt2 * u_B_k) {
            res.case_label = "RP2-1-2/1";
            split_from_i(res, u_B_i, v);
        } else if (u_B_i >= -u_B_k) {
            res.case_label = "RP2-1-2/2";
            pass_through_j(res, u_B_i, u_B_k, v);
        } else {
            res.case_label = "RP2-1-2/3";
            drain_into_k(res, u_B_k, v);
        }
    } else if (!i_neg && !j_pos && k_pos) {
        if (u_B_i >= -kSqrt2 * u_B_j) {
            res.case_label = "RP2-2-1/1";
            split_from_i(res, u_B_i, v);
        } else if (u_B_i >= -u_B_j) {
            res.case_label = "RP2-2-1/2";
            pass_through_k(res, u_B_i, u_B_j, v);
        } else {
            res.case_label = "RP2-2-1/3";
            drain_into_j(res, u_B_j, v);
        }
    } else {
        const double S = std::sqrt(u_B_j * u_B_j + u_B_k * u_B_k);
        if (u_B_i >= -kSqrt2 * u_B_j && u_B_i >= -kSqrt2 * u_B_k) {
            res.case_label = "RP2-2-2/1";
            split_from_i(res, u_B_i, v);
        } else if (u_B_i < -kSqrt2 * u_B_j && u_B_i >= S) {
            res.case_label = "RP2-2-2/2";
            pass_through_k(res, u_B_i, u_B_j, v);
        } else if (u_B_i < -kSqrt2 * u_B_k && u_B_i >= S) {
            res.case_label = "RP2-2-2/3";
            pass_through_j(res, u_B_i, u_B_k, v);
        } else {
            res.case_label = "RP2-2-2/4";
            merge_into_i(res, u_B_j, u_B_k, v);
        }
    }
    res.mass_balance = res.edge[0].C - res.edge[1].C - res.edge[2].C;
    return res;
}

namespace {

// 2-1 building blocks, (i, j in; k out) orientation. These are the images of
// the 1-2 blocks under the reflection u -> -u with roles (i,j,k) -> (k,i,j).

/// Out-edge k drives, both in-edges take half the flux: C_i = C_j = C_k/2.
void split_from_k(CouplingResolution& res, double u_k, double v) {
    const double Ck = u_k * u_k;
    const double t = kInvSqrt2 * u_k;
    res.edge[0] = {t, 0.5 * Ck, t};
    res.edge[1] = {t, 0.5 * Ck, t};
    res.edge[2] = {u_k, Ck, -Ck / (2.0 * v) + t};
}

/// In-edges keep their states, out-edge carries the sum: C_k = C_i + C_j.
void merge_into_k(CouplingResolution& res, double u_i, double u_j, double v) {
    const double Ci = u_i * u_i;
    const double Cj = u_j * u_j;
    const double Ck = Ci + Cj;
    const double S = std::sqrt(Ck);
    res.edge[0] = {u_i, Ci, (2.0 * Ci + Cj) / (3.0 * v) + S};
    res.edge[1] = {u_j, Cj, (Ci + 2.0 * Cj) / (3.0 * v) + S};
    res.edge[2] = {S, Ck, S};
}

/// In-edge j and out-edge k keep their states: C_i = C_k - C_j.
void pass_through_i(CouplingResolution& res, double u_j, double u_k, double v) {
    const double Cj = u_j * u_j;
    const double Ck = u_k * u_k;
    const double Ci = std::max(0.0, Ck - Cj);
    const double R = std::sqrt(Ci);
    res.edge[0] = {-R, Ci, -R};
    res.edge[1] = {u_j, Cj, -(Ck - 2.0 * Cj) / (3.0 * v) - R};
    res.edge[2] = {u_k, Ck, -(2.0 * Ck - Cj) / (3.0 * v) - R};
}

/// In-edge i and out-edge k keep their states: C_j = C_k - C_i.
void pass_through_j21(CouplingResolution& res, double u_i, double u_k, double v) {
    const double Ci = u_i * u_i;
    const double Ck = u_k * u_k;
    const double Cj = std::max(0.0, Ck - Ci);
    const double R = std::sqrt(Cj);
    res.edge[0] = {u_i, Ci, -(Ck - 2.0 * Ci) / (3.0 * v) - R};
    res.edge[1] = {-R, Cj, -R};
    res.edge[2] = {u_k, Ck, -(2.0 * Ck - Ci) / (3.0 * v) - R};
}

/// In-edge j drives the out-edge, i goes transsonic: C_j = C_k, C_i = 0.
/// Requires u_j > 0.
void feed_from_j(CouplingResolution& res, double u_j, double v) {
    const double Cj = u_j * u_j;
    res.edge[0] = {0.0, 0.0, Cj / (3.0 * v) + u_j};
    res.edge[1] = {u_j, Cj, 2.0 * Cj / (3.0 * v) + u_j};
    res.edge[2] = {u_j, Cj, u_j};
}

/// In-edge i drives the out-edge, j goes transsonic: C_i = C_k, C_j = 0.
void feed_from_i(CouplingResolution& res, double u_i, double v) {
    const double Ci = u_i * u_i;
    res.edge[0] = {u_i, Ci, 2.0 * Ci / (3.0 * v) + u_i};
    res.edge[1] = {0.0, 0.0, Ci / (3.0 * v) + u_i};
    res.edge[2] = {u_i, Ci, u_i};
}

} // namespace

CouplingResolution couple_2_1(double u_B_i, double u_B_j, double u_B_k, double v) {
    require_positive_v(v);
    CouplingResolution res;
    res.kind = NodeKind::TwoOne;
    const bool i_neg = u_B_i <= 0.0;
    const bool j_neg = u_B_j <= 0.0;
    const bool k_pos = u_B_k >= 0.0;

    if (i_neg && j_neg && k_pos) {
        res.case_label = "RP1-1-1";
        res.edge[0] = res.edge[1] = res.edge[2] = {0.0, 0.0, 0.0};
    } else if (i_neg && j_neg && !k_pos) {
        res.case_label = "RP1-1-2";
        split_from_k(res, u_B_k, v);
    } else if (i_neg && !j_neg && k_pos) {
        res.case_label = "RP1-2-1";
        feed_from_j(res, u_B_j, v);
    } else if (!i_neg && j_neg && k_pos) {
        res.case_label = "RP2-1-1";
        feed_from_i(res, u_B_i, v);
    } else if (i_neg && !j_neg && !k_pos) {
        if (u_B_k <= -kSqrt2 * u_B_j) {
            res.case_label = "RP1-2-2/1";
            split_from_k(res, u_B_k, v);
        } else if (u_B_k < -u_B_j) {
            res.case_label = "RP1-2-2/2";
            pass_through_i(res, u_B_j, u_B_k, v);
        } else {
            res.case_label = "RP1-2-2/3";
            feed_from_j(res, u_B_j, v);
        }
    } else if (!i_neg && j_neg && !k_pos) {
        if (u_B_k <= -kSqrt2 * u_B_i) {
            res.case_label = "RP2-1-2/1";
            split_from_k(res, u_B_k, v);
        } else if (u_B_k < -u_B_i) {
            res.case_label = "RP2-1-2/2";
            pass_through_j21(res, u_B_i, u_B_k, v);
        } else {
            res.case_label = "RP2-1-2/3";
            feed_from_i(res, u_B_i, v);
        }
    } else if (!i_neg && !j_neg && k_pos) {
        res.case_label = "RP2-2-1";
        merge_into_k(res, u_B_i, u_B_j, v);
    } else {
        const double S = std::sqrt(u_B_i * u_B_i + u_B_j * u_B_j);
        if (u_B_k <= -kSqrt2 * u_B_i && u_B_k <= -kSqrt2 * u_B_j) {
            res.case_label = "RP2-2-2/1";
            split_from_k(res, u_B_k, v);
        } else if (u_B_k > -kSqrt2 * u_B_i && u_B_k <= -S) {
            res.case_label = "RP2-2-2/2";
            pass_through_j21(res, u_B_i, u_B_k, v);
        } else if (u_B_k > -kSqrt2 * u_B_j && u_B_k <= -S) {
            res.case_label = "RP2-2-2/3";
            pass_through_i(res, u_B_j, u_B_k, v);
        } else {
            res.case_label = "RP2-2-2/4";
            merge_into_k(res, u_B_i, u_B_j, v);
        }
    }
    res.mass_balance = res.edge[2].C - res.edge[0].C - res.edge[1].C;
    return res;
}

std::vector<std::string> degenerate_node_check(NodeKind kind, const std::array<double, 3>& u_B) {
    if (kind != NodeKind::ThreeZero && kind != NodeKind::ZeroThree)
        throw std::invalid_argument("degenerate_node_check: node kind is not 3-0 or 0-3");
    std::vector<std::string> diag;
    for (std::size_t r = 0; r < u_B.size(); ++r) {
        if (u_B[r] != 0.0)
            diag.push_back("edge role " + std::to_string(r) + ": state " + std::to_string(u_B[r]) +
                           " inadmissible, " + to_string(kind) +
                           " nodes conserve mass only in the zero state");
    }
    return diag;
}

HalfRiemannSet role_half_riemann(NodeKind kind, int role, double u_B) {
    const EdgeEnd end = role_end(kind, role);
    return HalfRiemannSet{end == EdgeEnd::Right ? HalfRiemannSet::Side::Right
                                                : HalfRiemannSet::Side::Left,
                          u_B};
}

std::array<double, 3> kinetic_node_fluxes(NodeKind kind, const std::array<double, 3>& t) {
    switch (kind) {
        case NodeKind::OneOne:
            // f1^i = f1^j, f2^j = f2^i
            return {t[1], t[0], 0.0};
        case NodeKind::OneTwo:
            // f1^i = (f1^j + f1^k)/2, f2^j = (f2^i + f1^k)/2, f2^k = (f2^i + f1^j)/2
            return {0.5 * (t[1] + t[2]), 0.5 * (t[0] + t[2]), 0.5 * (t[0] + t[1])};
        case NodeKind::TwoOne:
            // f1^i = (f2^j + f1^k)/2, f1^j = (f2^i + f1^k)/2, f2^k = (f2^i + f2^j)/2
            return {0.5 * (t[1] + t[2]), 0.5 * (t[0] + t[2]), 0.5 * (t[0] + t[1])};
        default:
            throw std::invalid_argument("kinetic_node_fluxes: degenerate node kind");
    }
}

} // namespace coupling
} // namespace netkin
