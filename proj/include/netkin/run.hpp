#pragma once

#include <string>
#include <vector>

#include "netkin/scenario.hpp"
#include "netkin/simulation.hpp"

namespace netkin {

enum class Model { Kinetic, Burgers, Both };

std::string to_string(Model m);

struct RunOptions {
    std::string out_dir;                ///< empty: no files written
    double margin = -1.0;               ///< layer-exclusion margin; <0 uses 50*epsilon
    std::vector<double> output_times;   ///< snapshot times; empty means {t_final}
    bool layer_profiles = true;         ///< emit analytic layer CSVs at inflow ends
};

/// Junction state observed at the final time, one record per node role.
struct TraceRecord {
    int node_id = 0;
    int role = 0;
    int edge_id = 0;
    std::string case_label;       ///< Burgers coupling case
    double burgers_trace = 0.0;   ///< resolved ghost state u_K
    double burgers_C = 0.0;       ///< flux constant of the resolution
    double kinetic_u_margin = 0.0; ///< kinetic u at the first cell outside the margin
    double kinetic_flux = 0.0;     ///< kinetic uhat at the node interface
};

struct EdgeL1 {
    int edge_id = 0;
    double l1 = 0.0;
};

struct RunReport {
    std::string scenario;
    Model model = Model::Both;
    double t_final = 0.0;
    double margin = 0.0;

    std::size_t kinetic_steps = 0;
    std::size_t burgers_steps = 0;
    /// Largest per-step |mass change - dt * boundary flux|.
    double kinetic_max_step_residual = 0.0;
    double burgers_max_step_residual = 0.0;
    /// Full-run mass balance against the recorded boundary-flux integral.
    double kinetic_balance = 0.0;
    double burgers_balance = 0.0;
    /// Largest final-vs-initial change of the cells adjacent to outer ends.
    double kinetic_outer_drift = 0.0;
    double burgers_outer_drift = 0.0;

    std::vector<EdgeL1> l1;           ///< filled when both models ran
    std::vector<TraceRecord> traces;  ///< filled per node (needs both for kinetic columns)
    double wall_seconds = 0.0;
    std::vector<std::string> problems; ///< invariant breaches; empty on a clean run

    bool ok() const { return problems.empty(); }
};

/// Advance the selected model(s) to the final time, writing snapshots and a
/// report file when an output directory is given. Throws on an invalid
/// scenario.
RunReport run_scenario(const Scenario& s, Model model, const RunOptions& opts = {});

/// L1 distance between two fields on the same grid, excluding cells within
/// `margin` of either edge end. Grid mismatch is rejected.
double compare_fields(const std::vector<double>& u_kinetic, const std::vector<double>& u_burgers,
                      const EdgeGrid& grid, double margin);

/// Index of the first cell at distance >= margin from the given end.
int margin_cell(const EdgeGrid& grid, EdgeEnd end, double margin);

/// The packaged scenarios: the boundary-layer test plus six 1-2 and six 2-1
/// junction Riemann problems with the reference parameters (1000 cells,
/// T = 0.5, epsilon = 5e-4, v = +-2).
std::vector<Scenario> scenario_suite();

/// Builders shared by the suite and the tests.
Scenario make_tripod(NodeKind kind, const std::string& name, double u_i, double u_j, double u_k,
                     double epsilon = 5e-4, int cells = 1000, double t_final = 0.5);
Scenario make_single_edge(const std::string& name, double u0, BoundarySpec left,
                          BoundarySpec right, double epsilon = 5e-4, int cells = 1000,
                          double t_final = 0.5);

/// Serialize a report as JSON text (stable key order).
std::string report_to_json(const RunReport& r);

} // namespace netkin
