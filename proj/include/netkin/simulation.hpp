#pragma once

#include <array>
#include <string>
#include <vector>

#include "netkin/coupling.hpp"
#include "netkin/grid.hpp"
#include "netkin/kernels.hpp"
#include "netkin/scenario.hpp"

namespace netkin {

/// Preprocessed topology shared by both steppers: contiguous edge indices,
/// per-end attachment info, grids.
struct NetworkLayout {
    struct EndInfo {
        bool outer = true;
        int node = -1; ///< node index when attached
        int role = -1;
        BoundarySpec bc; ///< meaningful for outer ends
    };
    struct EdgeInfo {
        int id = 0;
        EdgeGrid grid;
        EndInfo left, right;
    };
    struct NodeInfo {
        int id = 0;
        NodeKind kind = NodeKind::OneOne;
        std::array<int, 3> edge_index{-1, -1, -1}; ///< role order
    };

    std::vector<EdgeInfo> edges;
    std::vector<NodeInfo> nodes;

    explicit NetworkLayout(const Scenario& s);
    int edge_index(int edge_id) const;
};

/// Per-edge ghost values feeding one step: the incoming component at each
/// end (f2 on the left, f1 on the right for the kinetic model; the trace
/// state u_K for the Burgers model).
struct GhostValues {
    std::vector<double> left, right;
};

/// What the junction imposed on each edge of a node, observed at a fixed
/// time. For the kinetic model `flux` is uhat at the node interface; for the
/// Burgers model `trace` is the resolved ghost state u_K.
struct NodeObservation {
    int node_id = 0;
    NodeKind kind = NodeKind::OneOne;
    std::array<double, 3> trace{};
    std::array<double, 3> flux{};
    std::string case_label;
};

struct StepStats {
    double dt = 0.0;
    double mass = 0.0;            ///< total mass after the step
    double boundary_flux = 0.0;   ///< net influx through outer ends during the step
    double mass_residual = 0.0;   ///< mass change minus dt * boundary_flux
};

class KineticNetworkSolver {
public:
    explicit KineticNetworkSolver(const Scenario& s);

    /// Largest stable step, cfl * dx / max(|v1|, v2) over the edges.
    double suggested_dt() const;

    /// One splitting step: ghost fill, upwind transport, implicit relaxation.
    /// Rejects dt violating the transport CFL condition.
    StepStats step(double dt);

    void advance_to(double t_end);

    double time() const { return t_; }
    double mass() const;
    std::size_t steps_taken() const { return steps_; }
    double max_step_residual() const { return max_residual_; }
    /// Accumulated net boundary influx integral over all steps so far.
    double boundary_integral() const { return boundary_integral_.value(); }
    double initial_mass() const { return initial_mass_; }
    bool finite() const;

    const NetworkLayout& layout() const { return layout_; }
    const std::vector<double>& f1(int edge_index) const { return f1_[edge_index]; }
    const std::vector<double>& f2(int edge_index) const { return f2_[edge_index]; }
    std::vector<double> u(int edge_index) const;
    std::vector<double> uhat(int edge_index) const;

    /// Junction state seen at the current time (fills ghosts, no update).
    std::vector<NodeObservation> observe_nodes() const;

    GhostValues ghosts() const;

private:
    void fill_ghosts(GhostValues& g) const;

    Scenario scenario_;
    NetworkLayout layout_;
    std::vector<std::vector<double>> f1_, f2_;
    std::vector<std::vector<double>> f1_next_, f2_next_;
    double t_ = 0.0;
    std::size_t steps_ = 0;
    double max_residual_ = 0.0;
    KahanSum boundary_integral_;
    double initial_mass_ = 0.0;
    double last_mass_ = 0.0;
};

class BurgersNetworkSolver {
public:
    explicit BurgersNetworkSolver(const Scenario& s);

    /// Largest stable step from the current field, cfl * dx / (2 max|u|),
    /// ghosts included in the bound.
    double suggested_dt() const;

    StepStats step(double dt);
    void advance_to(double t_end);

    double time() const { return t_; }
    double mass() const;
    std::size_t steps_taken() const { return steps_; }
    double max_step_residual() const { return max_residual_; }
    double boundary_integral() const { return boundary_integral_.value(); }
    double initial_mass() const { return initial_mass_; }
    bool finite() const;

    const NetworkLayout& layout() const { return layout_; }
    const std::vector<double>& u(int edge_index) const { return u_[edge_index]; }

    std::vector<NodeObservation> observe_nodes() const;

    GhostValues ghosts() const;

private:
    void fill_ghosts(GhostValues& g, std::vector<NodeObservation>* obs) const;

    Scenario scenario_;
    NetworkLayout layout_;
    std::vector<std::vector<double>> u_, u_next_;
    double t_ = 0.0;
    std::size_t steps_ = 0;
    double max_residual_ = 0.0;
    KahanSum boundary_integral_;
    double initial_mass_ = 0.0;
    double last_mass_ = 0.0;
};

} // namespace netkin
