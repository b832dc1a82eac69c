#pragma once

#include <map>
#include <string>
#include <vector>

#include "netkin/network.hpp"
#include "netkin/params.hpp"

namespace netkin {

/// One interval of a piecewise-constant initial profile, on [lo, hi).
struct Piece {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;
};

struct BoundarySpec {
    enum class Type { Extrapolate, Inflow };
    Type type = Type::Extrapolate;
    /// Prescribed incoming kinetic component: f2 at a left end, f1 at a right end.
    double value = 0.0;
};

inline bool operator==(const BoundarySpec& a, const BoundarySpec& b) {
    return a.type == b.type && (a.type == BoundarySpec::Type::Extrapolate || a.value == b.value);
}

struct Scenario {
    std::string name = "scenario";
    NetworkTopology topology;
    /// Initial u per edge id, piecewise constant over [0, length].
    std::map<int, std::vector<Piece>> initial;
    /// Outer-boundary data keyed by (edge id, end). Ends absent from the map
    /// extrapolate.
    std::map<std::pair<int, int>, BoundarySpec> boundaries;
    double t_final = 0.5;
    double cfl = 0.9;
    KineticParams params;

    BoundarySpec boundary(int edge_id, EdgeEnd end) const {
        auto it = boundaries.find({edge_id, end == EdgeEnd::Left ? 0 : 1});
        return it == boundaries.end() ? BoundarySpec{} : it->second;
    }

    void set_boundary(int edge_id, EdgeEnd end, BoundarySpec bc) {
        boundaries[{edge_id, end == EdgeEnd::Left ? 0 : 1}] = bc;
    }

    /// Cell-centered initial values for one edge.
    std::vector<double> initial_cells(const Edge& e) const;

    /// Range of initial u over the whole network.
    std::pair<double, double> initial_range() const;
};

/// Convenience: constant initial profile covering the whole edge.
std::vector<Piece> constant_profile(double value, double length = 1.0);

/// All invariant violations of the scenario; empty means valid. Includes the
/// structural topology checks, parameter signs, piecewise coverage, the
/// subcharacteristic condition v1 <= 2 min(u), v2 >= 2 max(u), symmetric
/// speeds wherever junction tables are needed, and the zero-state restriction
/// on 3-0/0-3 nodes.
std::vector<std::string> validate_scenario(const Scenario& s);

bool scenario_equal(const Scenario& a, const Scenario& b);

} // namespace netkin
