#include "netkin/network.hpp"

#include <algorithm>
#include <set>

namespace netkin {

std::string to_string(NodeKind k) {
    switch (k) {
        case NodeKind::OneOne: return "1-1";
        case NodeKind::OneTwo: return "1-2";
        case NodeKind::TwoOne: return "2-1";
        case NodeKind::ThreeZero: return "3-0";
        case NodeKind::ZeroThree: return "0-3";
    }
    return "?";
}

std::optional<NodeKind> node_kind_from_string(const std::string& s) {
    if (s == "1-1") return NodeKind::OneOne;
    if (s == "1-2") return NodeKind::OneTwo;
    if (s == "2-1") return NodeKind::TwoOne;
    if (s == "3-0") return NodeKind::ThreeZero;
    if (s == "0-3") return NodeKind::ZeroThree;
    return std::nullopt;
}

bool role_is_ingoing(NodeKind kind, int role) {
    switch (kind) {
        case NodeKind::OneOne: return role == 0;
        case NodeKind::OneTwo: return role == 0;
        case NodeKind::TwoOne: return role <= 1;
        case NodeKind::ThreeZero: return true;
        case NodeKind::ZeroThree: return false;
    }
    return false;
}

EdgeEnd role_end(NodeKind kind, int role) {
    return role_is_ingoing(kind, role) ? EdgeEnd::Right : EdgeEnd::Left;
}

const Edge* NetworkTopology::find_edge(int id) const {
    for (const auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

const Node* NetworkTopology::find_node(int id) const {
    for (const auto& n : nodes)
        if (n.id == id) return &n;
    return nullptr;
}

int NetworkTopology::attached_node(int edge_id, EdgeEnd end) const {
    for (std::size_t ni = 0; ni < nodes.size(); ++ni) {
        const Node& n = nodes[ni];
        for (std::size_t r = 0; r < n.edges.size(); ++r) {
            if (n.edges[r] == edge_id && role_end(n.kind, static_cast<int>(r)) == end)
                return static_cast<int>(ni);
        }
    }
    return -1;
}

std::vector<std::pair<int, EdgeEnd>> NetworkTopology::outer_ends() const {
    std::vector<std::pair<int, EdgeEnd>> out;
    for (const auto& e : edges) {
        if (attached_node(e.id, EdgeEnd::Left) < 0) out.emplace_back(e.id, EdgeEnd::Left);
        if (attached_node(e.id, EdgeEnd::Right) < 0) out.emplace_back(e.id, EdgeEnd::Right);
    }
    return out;
}

std::vector<std::string> NetworkTopology::structural_diagnostics() const {
    std::vector<std::string> diag;
    std::set<int> edge_ids;
    for (const auto& e : edges) {
        if (!edge_ids.insert(e.id).second)
            diag.push_back("duplicate edge id " + std::to_string(e.id));
    }
    std::set<int> node_ids;
    // Each (edge, end) may be claimed by at most one node role.
    std::set<std::pair<int, int>> claimed;
    for (const auto& n : nodes) {
        if (!node_ids.insert(n.id).second)
            diag.push_back("duplicate node id " + std::to_string(n.id));
        const int deg = node_degree(n.kind);
        if (static_cast<int>(n.edges.size()) != deg) {
            diag.push_back("node " + std::to_string(n.id) + " of kind " + to_string(n.kind) +
                           " must list " + std::to_string(deg) + " edges");
            continue;
        }
        for (std::size_t r = 0; r < n.edges.size(); ++r) {
            const int eid = n.edges[r];
            if (!edge_ids.count(eid)) {
                diag.push_back("node " + std::to_string(n.id) + " references unknown edge " +
                               std::to_string(eid));
                continue;
            }
            const EdgeEnd end = role_end(n.kind, static_cast<int>(r));
            if (!claimed.insert({eid, end == EdgeEnd::Left ? 0 : 1}).second) {
                diag.push_back("edge " + std::to_string(eid) + " " +
                               (end == EdgeEnd::Left ? std::string("left") : std::string("right")) +
                               " end attached to more than one node");
            }
        }
    }
    return diag;
}

} // namespace netkin
