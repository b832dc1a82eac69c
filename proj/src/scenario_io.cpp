#include "netkin/scenario_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace netkin {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Line {
    int number = 0;
    std::string key, value;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw std::runtime_error("scenario line " + std::to_string(line) + ": " + msg);
}

double parse_double(const Line& l, const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') fail(l.number, "bad number '" + text + "'");
    return v;
}

int parse_int(const Line& l, const std::string& text) {
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0') fail(l.number, "bad integer '" + text + "'");
    return static_cast<int>(v);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

struct Section {
    int line = 0;
    std::string name;
    std::vector<Line> entries;
};

} // namespace

std::string format_double(double x) {
    // Shortest representation that round-trips.
    for (int prec = 1; prec <= 17; ++prec) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) return buf;
    }
    return "0";
}

Scenario load_scenario(std::istream& in, const std::string& name) {
    std::vector<Section> sections;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(lineno, "unterminated section header");
            sections.push_back({lineno, trim(line.substr(1, line.size() - 2)), {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected key = value");
        if (sections.empty()) fail(lineno, "key outside of a section");
        sections.back().entries.push_back(
            {lineno, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
    }

    Scenario s;
    s.name = name;
    bool have_params = false;
    for (const auto& sec : sections) {
        if (sec.name == "params") {
            if (have_params) fail(sec.line, "duplicate [params] section");
            have_params = true;
            for (const auto& l : sec.entries) {
                if (l.key == "v1")
                    s.params.v1 = parse_double(l, l.value);
                else if (l.key == "v2")
                    s.params.v2 = parse_double(l, l.value);
                else if (l.key == "epsilon")
                    s.params.epsilon = parse_double(l, l.value);
                else if (l.key == "cfl")
                    s.cfl = parse_double(l, l.value);
                else if (l.key == "t_final")
                    s.t_final = parse_double(l, l.value);
                else
                    fail(l.number, "unknown key '" + l.key + "' in [params]");
            }
        } else if (sec.name == "edge") {
            Edge e;
            bool have_id = false, have_profile = false;
            std::vector<Piece> pieces;
            double constant = 0.0;
            bool have_constant = false;
            for (const auto& l : sec.entries) {
                if (l.key == "id") {
                    e.id = parse_int(l, l.value);
                    have_id = true;
                } else if (l.key == "length") {
                    e.length = parse_double(l, l.value);
                } else if (l.key == "cells") {
                    e.cells = parse_int(l, l.value);
                } else if (l.key == "u") {
                    constant = parse_double(l, l.value);
                    have_constant = true;
                    have_profile = true;
                } else if (l.key == "piece") {
                    const auto toks = split_ws(l.value);
                    if (toks.size() != 3) fail(l.number, "piece wants: lo hi value");
                    pieces.push_back({parse_double(l, toks[0]), parse_double(l, toks[1]),
                                      parse_double(l, toks[2])});
                    have_profile = true;
                } else {
                    fail(l.number, "unknown key '" + l.key + "' in [edge]");
                }
            }
            if (!have_id) fail(sec.line, "[edge] missing id");
            if (have_constant && !pieces.empty())
                fail(sec.line, "[edge] mixes 'u' and 'piece' entries");
            if (!have_profile) fail(sec.line, "[edge] missing initial profile (u or piece)");
            s.topology.edges.push_back(e);
            s.initial[e.id] = have_constant ? constant_profile(constant, e.length) : pieces;
        } else if (sec.name == "node") {
            Node n;
            bool have_id = false, have_kind = false, have_edges = false;
            for (const auto& l : sec.entries) {
                if (l.key == "id") {
                    n.id = parse_int(l, l.value);
                    have_id = true;
                } else if (l.key == "kind") {
                    const auto k = node_kind_from_string(l.value);
                    if (!k) fail(l.number, "unknown node kind '" + l.value + "'");
                    n.kind = *k;
                    have_kind = true;
                } else if (l.key == "edges") {
                    for (const auto& t : split_ws(l.value)) n.edges.push_back(parse_int(l, t));
                    have_edges = true;
                } else {
                    fail(l.number, "unknown key '" + l.key + "' in [node]");
                }
            }
            if (!have_id || !have_kind || !have_edges)
                fail(sec.line, "[node] needs id, kind and edges");
            s.topology.nodes.push_back(n);
        } else if (sec.name == "boundary") {
            int edge = 0;
            bool have_edge = false;
            EdgeEnd end = EdgeEnd::Left;
            bool have_end = false;
            BoundarySpec bc;
            bool have_type = false, have_value = false;
            for (const auto& l : sec.entries) {
                if (l.key == "edge") {
                    edge = parse_int(l, l.value);
                    have_edge = true;
                } else if (l.key == "end") {
                    if (l.value == "left")
                        end = EdgeEnd::Left;
                    else if (l.value == "right")
                        end = EdgeEnd::Right;
                    else
                        fail(l.number, "end must be left or right");
                    have_end = true;
                } else if (l.key == "type") {
                    if (l.value == "extrapolate")
                        bc.type = BoundarySpec::Type::Extrapolate;
                    else if (l.value == "inflow")
                        bc.type = BoundarySpec::Type::Inflow;
                    else
                        fail(l.number, "type must be extrapolate or inflow");
                    have_type = true;
                } else if (l.key == "value") {
                    bc.value = parse_double(l, l.value);
                    have_value = true;
                } else {
                    fail(l.number, "unknown key '" + l.key + "' in [boundary]");
                }
            }
            if (!have_edge || !have_end || !have_type)
                fail(sec.line, "[boundary] needs edge, end and type");
            if (bc.type == BoundarySpec::Type::Inflow && !have_value)
                fail(sec.line, "[boundary] inflow needs a value");
            if (bc.type == BoundarySpec::Type::Extrapolate && have_value)
                fail(sec.line, "[boundary] extrapolate takes no value");
            s.set_boundary(edge, end, bc);
        } else {
            fail(sec.line, "unknown section [" + sec.name + "]");
        }
    }
    if (!have_params) throw std::runtime_error("scenario: missing [params] section");
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::string name = path;
    const auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    if (dot != std::string::npos) name = name.substr(0, dot);
    return load_scenario(in, name);
}

std::string save_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "[params]\n";
    out << "v1 = " << format_double(s.params.v1) << "\n";
    out << "v2 = " << format_double(s.params.v2) << "\n";
    out << "epsilon = " << format_double(s.params.epsilon) << "\n";
    out << "cfl = " << format_double(s.cfl) << "\n";
    out << "t_final = " << format_double(s.t_final) << "\n";
    for (const auto& e : s.topology.edges) {
        out << "\n[edge]\n";
        out << "id = " << e.id << "\n";
        out << "length = " << format_double(e.length) << "\n";
        out << "cells = " << e.cells << "\n";
        const auto it = s.initial.find(e.id);
        if (it != s.initial.end()) {
            const auto& pieces = it->second;
            if (pieces.size() == 1 && pieces[0].lo == 0.0 && pieces[0].hi == e.length) {
                out << "u = " << format_double(pieces[0].value) << "\n";
            } else {
                for (const auto& p : pieces)
                    out << "piece = " << format_double(p.lo) << " " << format_double(p.hi) << " "
                        << format_double(p.value) << "\n";
            }
        }
    }
    for (const auto& n : s.topology.nodes) {
        out << "\n[node]\n";
        out << "id = " << n.id << "\n";
        out << "kind = " << to_string(n.kind) << "\n";
        out << "edges =";
        for (int e : n.edges) out << " " << e;
        out << "\n";
    }
    for (const auto& [key, bc] : s.boundaries) {
        out << "\n[boundary]\n";
        out << "edge = " << key.first << "\n";
        out << "end = " << (key.second == 0 ? "left" : "right") << "\n";
        if (bc.type == BoundarySpec::Type::Inflow) {
            out << "type = inflow\n";
            out << "value = " << format_double(bc.value) << "\n";
        } else {
            out << "type = extrapolate\n";
        }
    }
    return out.str();
}

void save_scenario_file(const Scenario& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write scenario file: " + path);
    out << save_scenario(s);
}

} // namespace netkin
