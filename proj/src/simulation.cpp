#include "netkin/simulation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "netkin/kinetic.hpp"

namespace netkin {

namespace {

constexpr double kCflSlack = 1.0 + 1e-12;

double kahan_mass(const std::vector<std::vector<double>>& cells,
                  const std::vector<NetworkLayout::EdgeInfo>& edges) {
    KahanSum s;
    for (std::size_t e = 0; e < cells.size(); ++e) {
        const double dx = edges[e].grid.dx;
        for (double v : cells[e]) s.add(v * dx);
    }
    return s.value();
}

} // namespace

NetworkLayout::NetworkLayout(const Scenario& s) {
    edges.reserve(s.topology.edges.size());
    for (const auto& e : s.topology.edges) {
        EdgeInfo info;
        info.id = e.id;
        info.grid = build_grid(e.length, e.cells);
        info.left.bc = s.boundary(e.id, EdgeEnd::Left);
        info.right.bc = s.boundary(e.id, EdgeEnd::Right);
        edges.push_back(info);
    }
    nodes.reserve(s.topology.nodes.size());
    for (const auto& n : s.topology.nodes) {
        NodeInfo info;
        info.id = n.id;
        info.kind = n.kind;
        for (std::size_t r = 0; r < n.edges.size(); ++r) {
            const int ei = edge_index(n.edges[r]);
            if (ei < 0) throw std::invalid_argument("node references unknown edge");
            info.edge_index[r] = ei;
            EndInfo& end = role_end(n.kind, static_cast<int>(r)) == EdgeEnd::Right
                               ? edges[ei].right
                               : edges[ei].left;
            end.outer = false;
            end.node = static_cast<int>(nodes.size());
            end.role = static_cast<int>(r);
        }
        nodes.push_back(info);
    }
}

int NetworkLayout::edge_index(int edge_id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == edge_id) return static_cast<int>(i);
    return -1;
}

// ---------------------------------------------------------------------------
// Kinetic solver
// ---------------------------------------------------------------------------

KineticNetworkSolver::KineticNetworkSolver(const Scenario& s) : scenario_(s), layout_(s) {
    const auto& p = scenario_.params;
    if (!p.speeds_valid()) throw std::invalid_argument("kinetic solver: invalid speeds");
    for (std::size_t e = 0; e < layout_.edges.size(); ++e) {
        const Edge& edge = scenario_.topology.edges[e];
        const auto u0 = scenario_.initial_cells(edge);
        std::vector<double> f1(u0.size()), f2(u0.size());
        for (std::size_t i = 0; i < u0.size(); ++i) {
            // Relaxed initial state: uhat = F(u).
            const auto [m1, m2] = equilibrium(u0[i], p);
            f1[i] = m1;
            f2[i] = m2;
        }
        f1_.push_back(std::move(f1));
        f2_.push_back(std::move(f2));
        f1_next_.emplace_back(u0.size());
        f2_next_.emplace_back(u0.size());
    }
    initial_mass_ = last_mass_ = mass();
}

double KineticNetworkSolver::suggested_dt() const {
    const double vmax = std::max(-scenario_.params.v1, scenario_.params.v2);
    double dt = std::numeric_limits<double>::infinity();
    for (const auto& e : layout_.edges) dt = std::min(dt, scenario_.cfl * e.grid.dx / vmax);
    return dt;
}

void KineticNetworkSolver::fill_ghosts(GhostValues& g) const {
    const std::size_t ne = layout_.edges.size();
    g.left.resize(ne);
    g.right.resize(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& info = layout_.edges[e];
        g.left[e] = info.left.outer && info.left.bc.type == BoundarySpec::Type::Inflow
                        ? info.left.bc.value
                        : f2_[e].front();
        g.right[e] = info.right.outer && info.right.bc.type == BoundarySpec::Type::Inflow
                         ? info.right.bc.value
                         : f1_[e].back();
    }
    for (const auto& node : layout_.nodes) {
        if (node.kind == NodeKind::ThreeZero || node.kind == NodeKind::ZeroThree) {
            // Only the zero state is admissible here; keep it steady.
            for (int r = 0; r < 3; ++r) {
                const int e = node.edge_index[r];
                if (role_end(node.kind, r) == EdgeEnd::Right)
                    g.right[e] = 0.0;
                else
                    g.left[e] = 0.0;
            }
            continue;
        }
        std::array<double, 3> traces{0.0, 0.0, 0.0};
        const int deg = node_degree(node.kind);
        for (int r = 0; r < deg; ++r) {
            const int e = node.edge_index[r];
            traces[r] = role_end(node.kind, r) == EdgeEnd::Right ? f2_[e].back() : f1_[e].front();
        }
        const auto ghosts = coupling::kinetic_node_fluxes(node.kind, traces);
        for (int r = 0; r < deg; ++r) {
            const int e = node.edge_index[r];
            if (role_end(node.kind, r) == EdgeEnd::Right)
                g.right[e] = ghosts[r];
            else
                g.left[e] = ghosts[r];
        }
    }
}

StepStats KineticNetworkSolver::step(double dt) {
    const auto& p = scenario_.params;
    const double vmax = std::max(-p.v1, p.v2);
    for (const auto& e : layout_.edges) {
        if (vmax * dt > scenario_.cfl * e.grid.dx * kCflSlack)
            throw std::invalid_argument("kinetic step: CFL violation");
    }

    GhostValues g;
    fill_ghosts(g);

    // Net influx through outer ends, from the same upwind fluxes the scheme
    // uses.
    KahanSum net_in;
    for (std::size_t e = 0; e < layout_.edges.size(); ++e) {
        const auto& info = layout_.edges[e];
        if (info.left.outer)
            net_in.add(p.v1 * f1_[e].front() + p.v2 * g.left[e]);
        if (info.right.outer)
            net_in.add(-(p.v1 * g.right[e] + p.v2 * f2_[e].back()));
    }

    const double r = dt / p.epsilon;
    for (std::size_t e = 0; e < layout_.edges.size(); ++e) {
        const std::size_t n = f1_[e].size();
        const double nu1 = -p.v1 * dt / layout_.edges[e].grid.dx;
        const double nu2 = p.v2 * dt / layout_.edges[e].grid.dx;
        kernels::transport(f1_[e].data(), f2_[e].data(), f1_next_[e].data(), f2_next_[e].data(),
                           n, g.left[e], g.right[e], nu1, nu2);
        kernels::relax(f1_next_[e].data(), f2_next_[e].data(), f1_[e].data(), f2_[e].data(), n,
                       p.v1, p.v2, r);
    }

    t_ += dt;
    ++steps_;
    const double m = mass();
    StepStats st;
    st.dt = dt;
    st.mass = m;
    st.boundary_flux = net_in.value();
    st.mass_residual = m - last_mass_ - dt * net_in.value();
    boundary_integral_.add(dt * net_in.value());
    max_residual_ = std::max(max_residual_, std::abs(st.mass_residual));
    last_mass_ = m;
    return st;
}

void KineticNetworkSolver::advance_to(double t_end) {
    while (t_ < t_end * (1.0 - 1e-14)) {
        double dt = std::min(suggested_dt(), t_end - t_);
        if (t_end - t_ - dt < 1e-12 * dt) dt = t_end - t_;
        step(dt);
    }
}

double KineticNetworkSolver::mass() const {
    KahanSum s;
    for (std::size_t e = 0; e < f1_.size(); ++e) {
        const double dx = layout_.edges[e].grid.dx;
        for (std::size_t i = 0; i < f1_[e].size(); ++i) s.add((f1_[e][i] + f2_[e][i]) * dx);
    }
    return s.value();
}

bool KineticNetworkSolver::finite() const {
    for (std::size_t e = 0; e < f1_.size(); ++e)
        for (std::size_t i = 0; i < f1_[e].size(); ++i)
            if (!std::isfinite(f1_[e][i]) || !std::isfinite(f2_[e][i])) return false;
    return true;
}

std::vector<double> KineticNetworkSolver::u(int e) const {
    std::vector<double> out(f1_[e].size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f1_[e][i] + f2_[e][i];
    return out;
}

std::vector<double> KineticNetworkSolver::uhat(int e) const {
    const auto& p = scenario_.params;
    std::vector<double> out(f1_[e].size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.v1 * f1_[e][i] + p.v2 * f2_[e][i];
    return out;
}

GhostValues KineticNetworkSolver::ghosts() const {
    GhostValues g;
    fill_ghosts(g);
    return g;
}

std::vector<NodeObservation> KineticNetworkSolver::observe_nodes() const {
    const auto& p = scenario_.params;
    GhostValues g;
    fill_ghosts(g);
    std::vector<NodeObservation> out;
    for (const auto& node : layout_.nodes) {
        NodeObservation obs;
        obs.node_id = node.id;
        obs.kind = node.kind;
        const int deg = node_degree(node.kind);
        for (int r = 0; r < deg; ++r) {
            const int e = node.edge_index[r];
            double fin, fout; // incoming (ghost) and outgoing kinetic component
            if (role_end(node.kind, r) == EdgeEnd::Right) {
                fin = g.right[e];
                fout = f2_[e].back();
                obs.flux[r] = p.v1 * fin + p.v2 * fout;
            } else {
                fin = g.left[e];
                fout = f1_[e].front();
                obs.flux[r] = p.v1 * fout + p.v2 * fin;
            }
            obs.trace[r] = fin + fout;
        }
        out.push_back(obs);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Burgers solver
// ---------------------------------------------------------------------------

BurgersNetworkSolver::BurgersNetworkSolver(const Scenario& s) : scenario_(s), layout_(s) {
    for (std::size_t e = 0; e < layout_.edges.size(); ++e)
        u_.push_back(scenario_.initial_cells(scenario_.topology.edges[e]));
    for (const auto& u : u_) u_next_.emplace_back(u.size());
    initial_mass_ = last_mass_ = mass();
}

void BurgersNetworkSolver::fill_ghosts(GhostValues& g, std::vector<NodeObservation>* obs) const {
    const double v = scenario_.params.v2;
    const std::size_t ne = layout_.edges.size();
    g.left.resize(ne);
    g.right.resize(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& info = layout_.edges[e];
        g.left[e] = info.left.outer && info.left.bc.type == BoundarySpec::Type::Inflow
                        ? coupling::resolve_left_boundary(info.left.bc.value, u_[e].front(), v).u_K
                        : u_[e].front();
        g.right[e] =
            info.right.outer && info.right.bc.type == BoundarySpec::Type::Inflow
                ? coupling::resolve_right_boundary(info.right.bc.value, u_[e].back(), v).u_K
                : u_[e].back();
    }
    for (const auto& node : layout_.nodes) {
        const int deg = node_degree(node.kind);
        std::array<double, 3> uB{0.0, 0.0, 0.0};
        for (int r = 0; r < deg; ++r) {
            const int e = node.edge_index[r];
            uB[r] = role_end(node.kind, r) == EdgeEnd::Right ? u_[e].back() : u_[e].front();
        }
        coupling::CouplingResolution res;
        switch (node.kind) {
            case NodeKind::OneOne: res = coupling::couple_1_1(uB[0], uB[1]); break;
            case NodeKind::OneTwo: res = coupling::couple_1_2(uB[0], uB[1], uB[2], v); break;
            case NodeKind::TwoOne: res = coupling::couple_2_1(uB[0], uB[1], uB[2], v); break;
            default:
                res.kind = node.kind;
                res.case_label = "degenerate";
                break; // zero traces; validation admits only the zero state
        }
        for (int r = 0; r < deg; ++r) {
            const int e = node.edge_index[r];
            if (role_end(node.kind, r) == EdgeEnd::Right)
                g.right[e] = res.edge[r].u_K;
            else
                g.left[e] = res.edge[r].u_K;
        }
        if (obs) {
            NodeObservation o;
            o.node_id = node.id;
            o.kind = node.kind;
            o.case_label = res.case_label;
            for (int r = 0; r < deg; ++r) {
                o.trace[r] = res.edge[r].u_K;
                o.flux[r] = res.edge[r].C;
            }
            obs->push_back(o);
        }
    }
}

double BurgersNetworkSolver::suggested_dt() const {
    GhostValues g;
    fill_ghosts(g, nullptr);
    double dt = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < u_.size(); ++e) {
        double s = kernels::max_abs(u_[e].data(), u_[e].size());
        s = std::max({s, std::abs(g.left[e]), std::abs(g.right[e])});
        if (s > 0.0)
            dt = std::min(dt, scenario_.cfl * layout_.edges[e].grid.dx / (2.0 * s));
    }
    return dt;
}

StepStats BurgersNetworkSolver::step(double dt) {
    GhostValues g;
    fill_ghosts(g, nullptr);

    for (std::size_t e = 0; e < u_.size(); ++e) {
        double s = kernels::max_abs(u_[e].data(), u_[e].size());
        s = std::max({s, std::abs(g.left[e]), std::abs(g.right[e])});
        if (2.0 * s * dt > scenario_.cfl * layout_.edges[e].grid.dx * kCflSlack)
            throw std::invalid_argument("burgers step: CFL violation");
    }

    KahanSum net_in;
    for (std::size_t e = 0; e < u_.size(); ++e) {
        const auto& info = layout_.edges[e];
        if (info.left.outer) net_in.add(godunov_flux(g.left[e], u_[e].front()));
        if (info.right.outer) net_in.add(-godunov_flux(u_[e].back(), g.right[e]));
    }

    for (std::size_t e = 0; e < u_.size(); ++e) {
        const double lambda = dt / layout_.edges[e].grid.dx;
        kernels::godunov_sweep(u_[e].data(), u_next_[e].data(), u_[e].size(), g.left[e],
                               g.right[e], lambda);
        u_[e].swap(u_next_[e]);
    }

    t_ += dt;
    ++steps_;
    const double m = mass();
    StepStats st;
    st.dt = dt;
    st.mass = m;
    st.boundary_flux = net_in.value();
    st.mass_residual = m - last_mass_ - dt * net_in.value();
    boundary_integral_.add(dt * net_in.value());
    max_residual_ = std::max(max_residual_, std::abs(st.mass_residual));
    last_mass_ = m;
    return st;
}

void BurgersNetworkSolver::advance_to(double t_end) {
    while (t_ < t_end * (1.0 - 1e-14)) {
        double dt = std::min(suggested_dt(), t_end - t_);
        if (!(dt > 0.0) || !std::isfinite(dt)) dt = t_end - t_;
        if (t_end - t_ - dt < 1e-12 * dt) dt = t_end - t_;
        step(dt);
    }
}

double BurgersNetworkSolver::mass() const { return kahan_mass(u_, layout_.edges); }

bool BurgersNetworkSolver::finite() const {
    for (const auto& u : u_)
        for (double x : u)
            if (!std::isfinite(x)) return false;
    return true;
}

GhostValues BurgersNetworkSolver::ghosts() const {
    GhostValues g;
    fill_ghosts(g, nullptr);
    return g;
}

std::vector<NodeObservation> BurgersNetworkSolver::observe_nodes() const {
    GhostValues g;
    std::vector<NodeObservation> obs;
    fill_ghosts(g, &obs);
    return obs;
}

} // namespace netkin
