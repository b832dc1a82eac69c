#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "netkin/network.hpp"

namespace netkin {
namespace coupling {

/// States reachable from an interior state u_B using only waves that leave
/// the domain through the given side.
struct HalfRiemannSet {
    enum class Side { Left, Right };
    Side side = Side::Left;
    double u_B = 0.0;

    /// Distance from u to the set (0 exactly on the closed set).
    double distance(double u) const;
    bool contains(double u) const { return distance(u) == 0.0; }
};

/// Result of resolving one boundary from the incoming kinetic component and
/// the adjacent macroscopic state, assuming symmetric speeds v2 = -v1 = v.
struct BoundaryResolution {
    double u_K = 0.0;      ///< trace imposed on the macroscopic solution
    double outgoing = 0.0; ///< kinetic component leaving the domain at the wall
    double C = 0.0;        ///< layer flux constant (uhat in the layer)
    double u0 = 0.0;       ///< layer foot value at the wall
    int case_id = 0;       ///< 1 ingoing, 2 transsonic, 3 outgoing
    std::string label;
};

/// Left boundary of a domain x >= 0: f2 prescribed, f1 emitted.
BoundaryResolution resolve_left_boundary(double f2_in, double u_B, double v);

/// Right boundary: f1 prescribed, f2 emitted.
BoundaryResolution resolve_right_boundary(double f1_in, double u_B, double v);

struct EdgeResolution {
    double u_K = 0.0;
    double C = 0.0;
    std::optional<double> u0;
};

struct CouplingResolution {
    NodeKind kind = NodeKind::OneOne;
    std::string case_label;
    std::array<EdgeResolution, 3> edge; ///< role order; [2] unused for 1-1
    /// C_in - C_out; zero when the fluxes balance.
    double mass_balance = 0.0;

    int degree() const { return node_degree(kind); }
};

/// Two-edge node: edge i into the node, j out. Reduces to the Riemann
/// problem at the junction.
CouplingResolution couple_1_1(double u_B_i, double u_B_j);

/// Tripod with edge i in, edges j and k out; symmetric kinetic conditions,
/// v2 = -v1 = v > 0. Traces are independent of v.
CouplingResolution couple_1_2(double u_B_i, double u_B_j, double u_B_k, double v);

/// Tripod with edges i and j in, edge k out.
CouplingResolution couple_2_1(double u_B_i, double u_B_j, double u_B_k, double v);

/// 3-0/0-3 nodes: only the zero state is admissible. Returns one diagnostic
/// per edge holding a nonzero state; empty means acceptable. Other kinds are
/// rejected.
std::vector<std::string> degenerate_node_check(NodeKind kind, const std::array<double, 3>& u_B);

/// Half-Riemann set seen from the node by the edge in role `role`.
HalfRiemannSet role_half_riemann(NodeKind kind, int role, double u_B);

/// Ghost values for the kinetic junction conditions. `traces[r]` is the
/// kinetic component leaving edge r toward the node (f2 at a right-attached
/// end, f1 at a left-attached end); the result is the incoming component of
/// each edge (f1 at a right-attached end, f2 at a left-attached end).
/// Degenerate node kinds are rejected.
std::array<double, 3> kinetic_node_fluxes(NodeKind kind, const std::array<double, 3>& traces);

} // namespace coupling
} // namespace netkin
