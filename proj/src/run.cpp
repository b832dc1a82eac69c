#include "netkin/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "netkin/layer.hpp"
#include "netkin/scenario_io.hpp"

namespace netkin {

namespace {

constexpr double kResidualLimit = 1e-10;
// Junction scenarios rely on waves staying clear of the extrapolated outer
// ends for the whole run; a larger drift there means the scenario outran its
// network.
constexpr double kOuterDriftLimit = 0.05;

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (std::size_t c = 0; c < header.size(); ++c)
        out << header[c] << (c + 1 < header.size() ? "," : "\n");
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << format_double(columns[c][i]) << (c + 1 < columns.size() ? "," : "\n");
    }
}

std::string snapshot_path(const RunOptions& opts, const std::string& scenario,
                          const char* model, int edge_id, double t) {
    std::ostringstream ss;
    ss << opts.out_dir << "/" << scenario << "_" << model << "_edge" << edge_id << "_t"
       << format_double(t) << ".csv";
    return ss.str();
}

void write_kinetic_snapshot(const KineticNetworkSolver& kin, const Scenario& s,
                            const RunOptions& opts, double t) {
    const auto& layout = kin.layout();
    const auto& p = s.params;
    for (std::size_t e = 0; e < layout.edges.size(); ++e) {
        const auto& info = layout.edges[e];
        std::vector<double> x = info.grid.centers();
        const auto& f1 = kin.f1(static_cast<int>(e));
        const auto& f2 = kin.f2(static_cast<int>(e));
        std::vector<double> u(f1.size()), uhat(f1.size());
        for (std::size_t i = 0; i < f1.size(); ++i) {
            u[i] = f1[i] + f2[i];
            uhat[i] = p.v1 * f1[i] + p.v2 * f2[i];
        }
        write_csv(snapshot_path(opts, s.name, "kinetic", info.id, t),
                  {"x", "f1", "f2", "u", "uhat"},
                  {x, std::vector<double>(f1.begin(), f1.end()),
                   std::vector<double>(f2.begin(), f2.end()), u, uhat});
    }
}

void write_burgers_snapshot(const BurgersNetworkSolver& bur, const Scenario& s,
                            const RunOptions& opts, double t) {
    const auto& layout = bur.layout();
    for (std::size_t e = 0; e < layout.edges.size(); ++e) {
        const auto& info = layout.edges[e];
        write_csv(snapshot_path(opts, s.name, "burgers", info.id, t), {"x", "u"},
                  {info.grid.centers(), bur.u(static_cast<int>(e))});
    }
}

/// Analytic layer profile at an inflow end, x-coordinate scaled by 1/epsilon
/// so it overlays the kinetic solution in domain coordinates.
void write_layer_profiles(const BurgersNetworkSolver& bur, const Scenario& s,
                          const RunOptions& opts) {
    const double v = s.params.v2;
    const double a = s.params.layer_a();
    const double eps = s.params.epsilon;
    const auto& layout = bur.layout();
    for (std::size_t e = 0; e < layout.edges.size(); ++e) {
        const auto& info = layout.edges[e];
        const auto& u = bur.u(static_cast<int>(e));
        for (int side = 0; side < 2; ++side) {
            const auto& end = side == 0 ? info.left : info.right;
            if (!end.outer || end.bc.type != BoundarySpec::Type::Inflow) continue;
            coupling::BoundaryResolution res =
                side == 0 ? coupling::resolve_left_boundary(end.bc.value, u.front(), v)
                          : coupling::resolve_right_boundary(end.bc.value, u.back(), v);
            std::vector<double> xs, vals;
            for (int i = 0; i < info.grid.cells; ++i) {
                const double x = info.grid.center(i);
                const double depth = side == 0 ? x : info.grid.length - x;
                const double scaled = depth / eps;
                double val;
                try {
                    val = side == 0 ? eval_layer(classify_layer(res.C, res.u0, a), scaled)
                                    : right_layer_value(res.C, res.u0, a, scaled);
                } catch (const std::domain_error&) {
                    break;
                }
                xs.push_back(x);
                vals.push_back(val);
            }
            write_csv(opts.out_dir + "/" + s.name + (side == 0 ? "_layerL.csv" : "_layerR.csv"),
                      {"x", "u"}, {xs, vals});
        }
    }
}

double outer_drift(const NetworkLayout& layout, const Scenario& s,
                   const std::vector<std::vector<double>>& u_now) {
    double drift = 0.0;
    for (std::size_t e = 0; e < layout.edges.size(); ++e) {
        const auto u0 = s.initial_cells(s.topology.edges[e]);
        if (layout.edges[e].left.outer)
            drift = std::max(drift, std::abs(u_now[e].front() - u0.front()));
        if (layout.edges[e].right.outer)
            drift = std::max(drift, std::abs(u_now[e].back() - u0.back()));
    }
    return drift;
}

} // namespace

std::string to_string(Model m) {
    switch (m) {
        case Model::Kinetic: return "kinetic";
        case Model::Burgers: return "burgers";
        case Model::Both: return "both";
    }
    return "?";
}

int margin_cell(const EdgeGrid& grid, EdgeEnd end, double margin) {
    int i;
    if (end == EdgeEnd::Left) {
        i = static_cast<int>(std::ceil(margin / grid.dx - 0.5));
    } else {
        i = grid.cells - 1 - static_cast<int>(std::ceil(margin / grid.dx - 0.5));
    }
    return std::clamp(i, 0, grid.cells - 1);
}

double compare_fields(const std::vector<double>& u_kinetic, const std::vector<double>& u_burgers,
                      const EdgeGrid& grid, double margin) {
    if (u_kinetic.size() != u_burgers.size() ||
        u_kinetic.size() != static_cast<std::size_t>(grid.cells))
        throw std::invalid_argument("compare_fields: grid mismatch");
    KahanSum s;
    for (int i = 0; i < grid.cells; ++i) {
        const double x = grid.center(i);
        if (x <= margin || grid.length - x <= margin) continue;
        s.add(std::abs(u_kinetic[static_cast<std::size_t>(i)] -
                       u_burgers[static_cast<std::size_t>(i)]) *
              grid.dx);
    }
    return s.value();
}

RunReport run_scenario(const Scenario& s, Model model, const RunOptions& opts) {
    const auto diagnostics = validate_scenario(s);
    if (!diagnostics.empty()) {
        std::string msg = "invalid scenario '" + s.name + "':";
        for (const auto& d : diagnostics) msg += "\n  " + d;
        throw std::invalid_argument(msg);
    }

    RunReport report;
    report.scenario = s.name;
    report.model = model;
    report.t_final = s.t_final;
    report.margin = opts.margin >= 0.0 ? opts.margin : 50.0 * s.params.epsilon;

    std::vector<double> times = opts.output_times;
    if (times.empty()) times = {s.t_final};
    std::sort(times.begin(), times.end());

    const bool want_kinetic = model != Model::Burgers;
    const bool want_burgers = model != Model::Kinetic;
    const bool emit = !opts.out_dir.empty();
    if (emit) std::filesystem::create_directories(opts.out_dir);

    bool check_outer_drift = !s.topology.nodes.empty();
    for (const auto& [key, bc] : s.boundaries)
        if (bc.type == BoundarySpec::Type::Inflow) check_outer_drift = false;

    const auto t0 = std::chrono::steady_clock::now();

    std::unique_ptr<KineticNetworkSolver> kin;
    std::unique_ptr<BurgersNetworkSolver> bur;

    if (want_kinetic) {
        kin = std::make_unique<KineticNetworkSolver>(s);
        for (double t : times) {
            kin->advance_to(t);
            if (emit) write_kinetic_snapshot(*kin, s, opts, t);
        }
        kin->advance_to(s.t_final);
        report.kinetic_steps = kin->steps_taken();
        report.kinetic_max_step_residual = kin->max_step_residual();
        report.kinetic_balance =
            kin->mass() - kin->initial_mass() - kin->boundary_integral();
        if (!kin->finite()) report.problems.push_back("kinetic field has non-finite values");
        if (std::abs(report.kinetic_balance) > kResidualLimit)
            report.problems.push_back("kinetic mass balance residual " +
                                      format_double(report.kinetic_balance));
        std::vector<std::vector<double>> u_now;
        for (std::size_t e = 0; e < kin->layout().edges.size(); ++e)
            u_now.push_back(kin->u(static_cast<int>(e)));
        report.kinetic_outer_drift = outer_drift(kin->layout(), s, u_now);
        if (check_outer_drift && report.kinetic_outer_drift > kOuterDriftLimit)
            report.problems.push_back("kinetic waves reached an outer end (drift " +
                                      format_double(report.kinetic_outer_drift) + ")");
    }

    if (want_burgers) {
        bur = std::make_unique<BurgersNetworkSolver>(s);
        for (double t : times) {
            bur->advance_to(t);
            if (emit) write_burgers_snapshot(*bur, s, opts, t);
        }
        bur->advance_to(s.t_final);
        report.burgers_steps = bur->steps_taken();
        report.burgers_max_step_residual = bur->max_step_residual();
        report.burgers_balance =
            bur->mass() - bur->initial_mass() - bur->boundary_integral();
        if (!bur->finite()) report.problems.push_back("burgers field has non-finite values");
        if (std::abs(report.burgers_balance) > kResidualLimit)
            report.problems.push_back("burgers mass balance residual " +
                                      format_double(report.burgers_balance));
        std::vector<std::vector<double>> u_now;
        for (std::size_t e = 0; e < bur->layout().edges.size(); ++e)
            u_now.push_back(bur->u(static_cast<int>(e)));
        report.burgers_outer_drift = outer_drift(bur->layout(), s, u_now);
        if (check_outer_drift && report.burgers_outer_drift > kOuterDriftLimit)
            report.problems.push_back("burgers waves reached an outer end (drift " +
                                      format_double(report.burgers_outer_drift) + ")");
        if (emit && opts.layer_profiles) write_layer_profiles(*bur, s, opts);
    }

    if (kin && bur) {
        const auto& layout = kin->layout();
        for (std::size_t e = 0; e < layout.edges.size(); ++e) {
            const double l1 = compare_fields(kin->u(static_cast<int>(e)),
                                             bur->u(static_cast<int>(e)),
                                             layout.edges[e].grid, report.margin);
            report.l1.push_back({layout.edges[e].id, l1});
        }
    }

    // Junction traces at the final time.
    {
        std::vector<NodeObservation> kin_obs, bur_obs;
        if (kin) kin_obs = kin->observe_nodes();
        if (bur) bur_obs = bur->observe_nodes();
        const NetworkLayout* layout = kin ? &kin->layout() : bur ? &bur->layout() : nullptr;
        if (layout) {
            for (std::size_t ni = 0; ni < layout->nodes.size(); ++ni) {
                const auto& node = layout->nodes[ni];
                const int deg = node_degree(node.kind);
                for (int r = 0; r < deg; ++r) {
                    TraceRecord rec;
                    rec.node_id = node.id;
                    rec.role = r;
                    const int e = node.edge_index[r];
                    rec.edge_id = layout->edges[e].id;
                    if (bur) {
                        rec.case_label = bur_obs[ni].case_label;
                        rec.burgers_trace = bur_obs[ni].trace[r];
                        rec.burgers_C = bur_obs[ni].flux[r];
                    }
                    if (kin) {
                        rec.kinetic_flux = kin_obs[ni].flux[r];
                        const auto& grid = layout->edges[e].grid;
                        const int i = margin_cell(
                            grid, role_end(node.kind, r), report.margin);
                        rec.kinetic_u_margin = kin->u(e)[static_cast<std::size_t>(i)];
                    }
                    report.traces.push_back(rec);
                }
            }
        }
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (emit) {
        std::ofstream out(opts.out_dir + "/" + s.name + "_report.json", std::ios::binary);
        out << report_to_json(report) << "\n";
    }
    return report;
}

std::string report_to_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["scenario"] = r.scenario;
    j["model"] = to_string(r.model);
    j["t_final"] = r.t_final;
    j["margin"] = r.margin;
    j["kinetic"] = {{"steps", r.kinetic_steps},
                    {"max_step_residual", r.kinetic_max_step_residual},
                    {"mass_balance", r.kinetic_balance},
                    {"outer_drift", r.kinetic_outer_drift}};
    j["burgers"] = {{"steps", r.burgers_steps},
                    {"max_step_residual", r.burgers_max_step_residual},
                    {"mass_balance", r.burgers_balance},
                    {"outer_drift", r.burgers_outer_drift}};
    auto l1 = nlohmann::ordered_json::array();
    for (const auto& e : r.l1) l1.push_back({{"edge", e.edge_id}, {"l1", e.l1}});
    j["l1"] = l1;
    auto traces = nlohmann::ordered_json::array();
    for (const auto& t : r.traces)
        traces.push_back({{"node", t.node_id},
                          {"role", t.role},
                          {"edge", t.edge_id},
                          {"case", t.case_label},
                          {"burgers_trace", t.burgers_trace},
                          {"burgers_C", t.burgers_C},
                          {"kinetic_u_margin", t.kinetic_u_margin},
                          {"kinetic_flux", t.kinetic_flux}});
    j["traces"] = traces;
    j["wall_seconds"] = r.wall_seconds;
    j["problems"] = r.problems;
    return j.dump(2);
}

Scenario make_tripod(NodeKind kind, const std::string& name, double u_i, double u_j, double u_k,
                     double epsilon, int cells, double t_final) {
    Scenario s;
    s.name = name;
    s.t_final = t_final;
    s.params.epsilon = epsilon;
    for (int id = 1; id <= 3; ++id) s.topology.edges.push_back({id, 1.0, cells});
    s.topology.nodes.push_back({1, kind, {1, 2, 3}});
    s.initial[1] = constant_profile(u_i);
    s.initial[2] = constant_profile(u_j);
    s.initial[3] = constant_profile(u_k);
    return s;
}

Scenario make_single_edge(const std::string& name, double u0, BoundarySpec left,
                          BoundarySpec right, double epsilon, int cells, double t_final) {
    Scenario s;
    s.name = name;
    s.t_final = t_final;
    s.params.epsilon = epsilon;
    s.topology.edges.push_back({1, 1.0, cells});
    s.initial[1] = constant_profile(u0);
    s.set_boundary(1, EdgeEnd::Left, left);
    s.set_boundary(1, EdgeEnd::Right, right);
    return s;
}

std::vector<Scenario> scenario_suite() {
    std::vector<Scenario> suite;
    suite.push_back(make_single_edge("boundary_layer", 0.5,
                                     {BoundarySpec::Type::Inflow, -0.25},
                                     {BoundarySpec::Type::Inflow, -9.0 / 64.0}));
    const NodeKind k12 = NodeKind::OneTwo;
    suite.push_back(make_tripod(k12, "j12_rp111", -1.0, 0.75, 0.5));
    suite.push_back(make_tripod(k12, "j12_rp112", -1.0, 0.75, -0.5));
    suite.push_back(make_tripod(k12, "j12_rp211", 1.0, 0.75, 0.5));
    suite.push_back(make_tripod(k12, "j12_rp122", -1.0, -0.75, -0.5));
    suite.push_back(make_tripod(k12, "j12_rp212", 0.6, 0.75, -0.5));
    suite.push_back(make_tripod(k12, "j12_rp222", 0.8, -0.75, -0.5));
    const NodeKind k21 = NodeKind::TwoOne;
    suite.push_back(make_tripod(k21, "j21_rp111", -1.0, -0.75, 0.5));
    suite.push_back(make_tripod(k21, "j21_rp112", -1.0, -0.75, -0.5));
    suite.push_back(make_tripod(k21, "j21_rp211", 1.0, -0.75, 0.5));
    suite.push_back(make_tripod(k21, "j21_rp122", -1.0, 0.5, -0.6));
    suite.push_back(make_tripod(k21, "j21_rp221", 0.5, 0.4, 0.75));
    suite.push_back(make_tripod(k21, "j21_rp222", 0.5, 0.4, -0.3));
    return suite;
}

} // namespace netkin
