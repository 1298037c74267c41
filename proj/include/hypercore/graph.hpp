#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypercore {

using NodeId = std::int32_t;

// Optional per-node annotations attached by the generators.
struct NodeLabels {
    std::optional<std::vector<int>> depth;                   // rooted trees
    std::optional<std::vector<std::vector<int>>> coords;     // lattice points
    std::optional<std::vector<int>> layer;                   // tessellation balls
    std::optional<std::vector<double>> angle;                // tessellation balls
    std::optional<NodeId> middle;                            // path graphs

    bool operator==(const NodeLabels&) const = default;
};

// Immutable simple undirected graph over dense ids [0, node_count).
// Adjacency lists are sorted; symmetry, no self-loops and no duplicate
// edges are enforced at construction.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Throws on self-loops, duplicate edges
    // (in either orientation) and out-of-range endpoints.
    Graph(NodeId node_count, const std::vector<std::pair<NodeId, NodeId>>& edges,
          NodeLabels labels = {})
        : adjacency_(static_cast<std::size_t>(check_count(node_count))),
          labels_(std::move(labels)) {
        for (const auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= node_count || v >= node_count)
                throw std::invalid_argument("edge endpoint out of range: " +
                                            std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw std::invalid_argument("self-loop at node " + std::to_string(u));
            adjacency_[static_cast<std::size_t>(u)].push_back(v);
            adjacency_[static_cast<std::size_t>(v)].push_back(u);
        }
        std::size_t edge_count = 0;
        for (auto& nbrs : adjacency_) {
            std::sort(nbrs.begin(), nbrs.end());
            if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
                throw std::invalid_argument("duplicate edge");
            edge_count += nbrs.size();
        }
        edge_count_ = edge_count / 2;
    }

    NodeId node_count() const { return static_cast<NodeId>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<NodeId>& neighbors(NodeId v) const {
        return adjacency_[static_cast<std::size_t>(check_node(v))];
    }

    NodeId degree(NodeId v) const {
        return static_cast<NodeId>(neighbors(v).size());
    }

    bool has_edge(NodeId u, NodeId v) const {
        const auto& nbrs = neighbors(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    std::vector<std::pair<NodeId, NodeId>> edges() const {
        std::vector<std::pair<NodeId, NodeId>> out;
        out.reserve(edge_count_);
        for (NodeId u = 0; u < node_count(); ++u)
            for (NodeId v : adjacency_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_connected() const {
        if (adjacency_.empty()) return true;
        std::vector<char> seen(adjacency_.size(), 0);
        std::vector<NodeId> stack{0};
        seen[0] = 1;
        std::size_t visited = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId w : adjacency_[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++visited;
                    stack.push_back(w);
                }
        }
        return visited == adjacency_.size();
    }

    void require_connected() const {
        if (!is_connected()) throw std::runtime_error("graph is not connected");
    }

    NodeId check_node(NodeId v) const {
        if (v < 0 || v >= node_count())
            throw std::invalid_argument("invalid node id " + std::to_string(v));
        return v;
    }

    const NodeLabels& labels() const { return labels_; }

    bool same_structure(const Graph& other) const {
        return adjacency_ == other.adjacency_;
    }

private:
    static NodeId check_count(NodeId n) {
        if (n < 0) throw std::invalid_argument("negative node count");
        return n;
    }

    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
    NodeLabels labels_;
};

} // namespace hypercore
