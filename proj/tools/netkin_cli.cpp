#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "netkin/coupling.hpp"
#include "netkin/run.hpp"
#include "netkin/scenario_io.hpp"

namespace {

using namespace netkin;

Model parse_model(const std::string& s) {
    if (s == "kinetic") return Model::Kinetic;
    if (s == "burgers") return Model::Burgers;
    if (s == "both") return Model::Both;
    throw CLI::ValidationError("--model", "must be kinetic, burgers or both");
}

void print_summary(const RunReport& r) {
    std::printf("%-16s steps(kin/bur)=%zu/%zu  balance(kin/bur)=%.3e/%.3e  wall=%.2fs\n",
                r.scenario.c_str(), r.kinetic_steps, r.burgers_steps, r.kinetic_balance,
                r.burgers_balance, r.wall_seconds);
    for (const auto& e : r.l1)
        std::printf("  edge %d: L1(kinetic, burgers) = %.6f\n", e.edge_id, e.l1);
    for (const auto& t : r.traces)
        std::printf("  node %d role %d (edge %d, %s): burgers trace %.6f, C %.6f, "
                    "kinetic u@margin %.6f, flux %.6f\n",
                    t.node_id, t.role, t.edge_id, t.case_label.c_str(), t.burgers_trace,
                    t.burgers_C, t.kinetic_u_margin, t.kinetic_flux);
    for (const auto& p : r.problems) std::printf("  PROBLEM: %s\n", p.c_str());
}

nlohmann::ordered_json resolution_json(const coupling::CouplingResolution& res) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(res.kind);
    j["case"] = res.case_label;
    auto edges = nlohmann::ordered_json::array();
    const char* roles[3] = {"i", "j", "k"};
    for (int r = 0; r < res.degree(); ++r) {
        nlohmann::ordered_json e;
        e["role"] = roles[r];
        e["u_K"] = res.edge[r].u_K;
        e["C"] = res.edge[r].C;
        if (res.edge[r].u0) e["u0"] = *res.edge[r].u0;
        edges.push_back(e);
    }
    j["edges"] = edges;
    j["mass_balance"] = res.mass_balance;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kinetic relaxation and Burgers solvers on networks"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run one scenario file");
    std::string config, out_dir, model_str = "both";
    double epsilon_override = -1.0, t_final_override = -1.0;
    int cells_override = -1;
    run->add_option("--config", config, "scenario file")->required();
    run->add_option("--model", model_str, "kinetic|burgers|both");
    run->add_option("--out", out_dir, "output directory for CSV snapshots and the report");
    run->add_option("--epsilon", epsilon_override, "override relaxation parameter");
    run->add_option("--cells", cells_override, "override cell count on every edge");
    run->add_option("--t-final", t_final_override, "override final time");

    // suite
    auto* suite = app.add_subcommand("suite", "run all packaged scenarios");
    std::string suite_out;
    suite->add_option("--out", suite_out, "output directory")->required();

    // coupling-table
    auto* table = app.add_subcommand("coupling-table", "print one junction resolution");
    std::string kind_str;
    std::vector<double> u_values;
    double v = 2.0;
    table->add_option("--kind", kind_str, "1-1|1-2|2-1")->required();
    table->add_option("--u", u_values, "interior states in role order")->required();
    table->add_option("--v", v, "kinetic speed (v2 = -v1 = v)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            Scenario s = load_scenario_file(config);
            if (epsilon_override > 0.0) s.params.epsilon = epsilon_override;
            if (t_final_override > 0.0) s.t_final = t_final_override;
            if (cells_override > 0)
                for (auto& e : s.topology.edges) e.cells = cells_override;
            RunOptions opts;
            opts.out_dir = out_dir;
            RunReport r = run_scenario(s, parse_model(model_str), opts);
            print_summary(r);
            return r.ok() ? 0 : 2;
        }
        if (*suite) {
            auto scenarios = scenario_suite();
            std::vector<RunReport> reports(scenarios.size());
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(scenarios.size()); ++i) {
                RunOptions opts;
                opts.out_dir = suite_out;
                reports[static_cast<std::size_t>(i)] =
                    run_scenario(scenarios[static_cast<std::size_t>(i)], Model::Both, opts);
            }
            bool ok = true;
            for (const auto& r : reports) {
                print_summary(r);
                ok = ok && r.ok();
            }
            return ok ? 0 : 2;
        }
        if (*table) {
            coupling::CouplingResolution res;
            if (kind_str == "1-1") {
                if (u_values.size() != 2)
                    throw std::runtime_error("1-1 nodes take two u values");
                res = coupling::couple_1_1(u_values[0], u_values[1]);
            } else if (kind_str == "1-2" || kind_str == "2-1") {
                if (u_values.size() != 3)
                    throw std::runtime_error("tripod nodes take three u values");
                res = kind_str == "1-2"
                          ? coupling::couple_1_2(u_values[0], u_values[1], u_values[2], v)
                          : coupling::couple_2_1(u_values[0], u_values[1], u_values[2], v);
            } else {
                throw std::runtime_error("unknown node kind '" + kind_str + "'");
            }
            std::cout << resolution_json(res).dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
