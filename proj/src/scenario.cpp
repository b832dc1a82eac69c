#include "netkin/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netkin/grid.hpp"

namespace netkin {

std::vector<Piece> constant_profile(double value, double length) {
    return {Piece{0.0, length, value}};
}

std::vector<double> Scenario::initial_cells(const Edge& e) const {
    const EdgeGrid g = build_grid(e.length, e.cells);
    std::vector<double> u(static_cast<std::size_t>(e.cells), 0.0);
    auto it = initial.find(e.id);
    if (it == initial.end()) return u;
    const auto& pieces = it->second;
    for (int i = 0; i < e.cells; ++i) {
        const double x = g.center(i);
        for (const auto& p : pieces) {
            if (x >= p.lo && (x < p.hi || (p.hi >= e.length && x <= p.hi))) {
                u[static_cast<std::size_t>(i)] = p.value;
                break;
            }
        }
    }
    return u;
}

std::pair<double, double> Scenario::initial_range() const {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& [eid, pieces] : initial) {
        for (const auto& p : pieces) {
            if (first) {
                lo = hi = p.value;
                first = false;
            } else {
                lo = std::min(lo, p.value);
                hi = std::max(hi, p.value);
            }
        }
    }
    return {lo, hi};
}

std::vector<std::string> validate_scenario(const Scenario& s) {
    std::vector<std::string> diag = s.topology.structural_diagnostics();

    if (!(s.params.v1 < 0.0)) diag.push_back("params: v1 must be < 0");
    if (!(s.params.v2 > 0.0)) diag.push_back("params: v2 must be > 0");
    if (!(s.params.epsilon > 0.0)) diag.push_back("params: epsilon must be > 0");
    if (!(s.cfl > 0.0 && s.cfl <= 1.0)) diag.push_back("params: cfl must be in (0, 1]");
    if (!(s.t_final > 0.0)) diag.push_back("params: t_final must be > 0");

    for (const auto& e : s.topology.edges) {
        if (e.cells < 2)
            diag.push_back("edge " + std::to_string(e.id) + ": cells must be >= 2");
        if (!(e.length > 0.0))
            diag.push_back("edge " + std::to_string(e.id) + ": length must be > 0");

        auto it = s.initial.find(e.id);
        if (it == s.initial.end() || it->second.empty()) {
            diag.push_back("edge " + std::to_string(e.id) + ": no initial profile");
            continue;
        }
        // Pieces must tile [0, length] in order, without gaps or overlaps.
        auto pieces = it->second;
        std::sort(pieces.begin(), pieces.end(),
                  [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
        const double tol = 1e-12 * std::max(1.0, e.length);
        double cursor = 0.0;
        bool cover_ok = true;
        for (const auto& p : pieces) {
            if (std::abs(p.lo - cursor) > tol || p.hi <= p.lo) {
                cover_ok = false;
                break;
            }
            cursor = p.hi;
        }
        if (!cover_ok || std::abs(cursor - e.length) > tol)
            diag.push_back("edge " + std::to_string(e.id) +
                           ": initial pieces must cover [0, length] without gaps or overlaps");
    }

    // Subcharacteristic condition for the initial data.
    if (!s.initial.empty()) {
        auto [umin, umax] = s.initial_range();
        if (s.params.v1 > 2.0 * umin + 1e-15)
            diag.push_back("subcharacteristic violation: need v1 <= 2 min(u) = " +
                           std::to_string(2.0 * umin) + ", got v1 = " + std::to_string(s.params.v1));
        if (s.params.v2 < 2.0 * umax - 1e-15)
            diag.push_back("subcharacteristic violation: need v2 >= 2 max(u) = " +
                           std::to_string(2.0 * umax) + ", got v2 = " + std::to_string(s.params.v2));
    }

    // Junction tables assume symmetric speeds.
    if (!s.topology.nodes.empty() && !s.params.symmetric_speeds(1e-12))
        diag.push_back("nodes require symmetric speeds v2 = -v1");

    // Degenerate nodes admit only the zero state.
    for (const auto& n : s.topology.nodes) {
        if (n.kind != NodeKind::ThreeZero && n.kind != NodeKind::ZeroThree) continue;
        for (int eid : n.edges) {
            auto it = s.initial.find(eid);
            if (it == s.initial.end()) continue;
            for (const auto& p : it->second) {
                if (p.value != 0.0) {
                    diag.push_back("node " + std::to_string(n.id) + " (" + to_string(n.kind) +
                                   "): only the zero state is admissible, edge " +
                                   std::to_string(eid) + " has nonzero initial data");
                    break;
                }
            }
        }
    }

    // Boundary specs must refer to actual outer ends.
    for (const auto& [key, bc] : s.boundaries) {
        (void)bc;
        const auto [eid, end_int] = key;
        const EdgeEnd end = end_int == 0 ? EdgeEnd::Left : EdgeEnd::Right;
        if (!s.topology.find_edge(eid)) {
            diag.push_back("boundary refers to unknown edge " + std::to_string(eid));
        } else if (s.topology.attached_node(eid, end) >= 0) {
            diag.push_back("boundary on edge " + std::to_string(eid) +
                           " collides with a node attachment");
        }
    }

    return diag;
}

bool scenario_equal(const Scenario& a, const Scenario& b) {
    if (a.topology.edges.size() != b.topology.edges.size()) return false;
    for (std::size_t i = 0; i < a.topology.edges.size(); ++i) {
        const Edge &x = a.topology.edges[i], &y = b.topology.edges[i];
        if (x.id != y.id || x.length != y.length || x.cells != y.cells) return false;
    }
    if (a.topology.nodes.size() != b.topology.nodes.size()) return false;
    for (std::size_t i = 0; i < a.topology.nodes.size(); ++i) {
        const Node &x = a.topology.nodes[i], &y = b.topology.nodes[i];
        if (x.id != y.id || x.kind != y.kind || x.edges != y.edges) return false;
    }
    if (a.initial.size() != b.initial.size()) return false;
    for (const auto& [eid, pieces] : a.initial) {
        auto it = b.initial.find(eid);
        if (it == b.initial.end() || it->second.size() != pieces.size()) return false;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            const Piece &x = pieces[i], &y = it->second[i];
            if (x.lo != y.lo || x.hi != y.hi || x.value != y.value) return false;
        }
    }
    if (!(a.boundaries == b.boundaries)) return false;
    return a.t_final == b.t_final && a.cfl == b.cfl && a.params.v1 == b.params.v1 &&
           a.params.v2 == b.params.v2 && a.params.epsilon == b.params.epsilon;
}

} // namespace netkin
