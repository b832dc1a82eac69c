#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace netkin {

enum class EdgeEnd { Left, Right };

inline EdgeEnd opposite(EdgeEnd e) { return e == EdgeEnd::Left ? EdgeEnd::Right : EdgeEnd::Left; }

/// Node orientation classes. The first digit counts edges oriented into the
/// node, the second the edges oriented out of it. 3-0 and 0-3 admit only the
/// zero state and are handled diagnostically.
enum class NodeKind { OneOne, OneTwo, TwoOne, ThreeZero, ZeroThree };

inline int node_degree(NodeKind k) { return k == NodeKind::OneOne ? 2 : 3; }

std::string to_string(NodeKind k);
std::optional<NodeKind> node_kind_from_string(const std::string& s);

/// End of the edge that attaches to the node, for the role at position
/// `role` in the node's ordered edge list. In-edges attach at their right
/// end (x = length), out-edges at their left end (x = 0).
EdgeEnd role_end(NodeKind kind, int role);

/// True if the edge in role `role` is oriented into the node.
bool role_is_ingoing(NodeKind kind, int role);

struct Edge {
    int id = 0;
    double length = 1.0;
    int cells = 2;
};

struct Node {
    int id = 0;
    NodeKind kind = NodeKind::OneOne;
    /// Edge ids in role order; the order fixes the (i, j, k) roles used by
    /// the coupling tables.
    std::vector<int> edges;
};

struct NetworkTopology {
    std::vector<Edge> edges;
    std::vector<Node> nodes;

    const Edge* find_edge(int id) const;
    const Node* find_node(int id) const;

    /// Node index attached at (edge id, end), or -1 for an outer end.
    int attached_node(int edge_id, EdgeEnd end) const;

    /// All (edge id, end) pairs not attached to any node.
    std::vector<std::pair<int, EdgeEnd>> outer_ends() const;

    /// Structural problems: duplicate ids, unknown edge references, double
    /// attachments, arity mismatches. Empty when sound.
    std::vector<std::string> structural_diagnostics() const;
};

} // namespace netkin
