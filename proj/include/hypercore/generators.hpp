#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hypercore/errors.hpp"
#include "hypercore/graph.hpp"
#include "hypercore/numeric.hpp"

namespace hypercore {

inline constexpr std::size_t kDefaultNodeCap = 2'000'000;

// Branching numbers k_1, k_2, ... of a rooted tree: every node at depth
// l has ks[l] children (k_0 = 1 is implicit, the root itself).
struct BranchingSequence {
    std::vector<int> ks;
    bool constant = false; // all-equal shorthand; ks holds one entry

    static BranchingSequence constant_k(int k) {
        if (k < 1) throw std::invalid_argument("branching constant must be >= 1");
        return BranchingSequence{{k}, true};
    }

    static BranchingSequence of(std::vector<int> values) {
        if (values.empty()) throw std::invalid_argument("empty branching sequence");
        for (int k : values)
            if (k < 1) throw std::invalid_argument("branching numbers must be >= 1");
        return BranchingSequence{std::move(values), false};
    }

    // k_{l} for l >= 1.
    int at(int l) const {
        if (l < 1) throw std::invalid_argument("branching index must be >= 1");
        if (constant) return ks[0];
        if (static_cast<std::size_t>(l) > ks.size())
            throw std::invalid_argument("branching sequence too short for depth " +
                                        std::to_string(l));
        return ks[static_cast<std::size_t>(l - 1)];
    }

    bool operator==(const BranchingSequence&) const = default;
};

// Rooted tree of depth n: node 0 is the root, ids assigned breadth-first
// so the depth-n tree is an id-prefix of the depth-(n+1) tree.
inline Graph branching_tree(const BranchingSequence& ks, int n,
                            std::size_t node_cap = kDefaultNodeCap) {
    if (n < 0) throw std::invalid_argument("tree depth must be >= 0");
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<int> depth{0};
    NodeId first_of_level = 0, count_of_level = 1, next_id = 1;
    for (int l = 0; l < n; ++l) {
        const int k = ks.at(l + 1);
        const NodeId parent_begin = first_of_level;
        for (NodeId p = 0; p < count_of_level; ++p) {
            for (int c = 0; c < k; ++c) {
                if (static_cast<std::size_t>(next_id) >= node_cap)
                    throw ResourceCapError("branching tree exceeds node cap");
                edges.emplace_back(parent_begin + p, next_id);
                depth.push_back(l + 1);
                ++next_id;
            }
        }
        first_of_level = parent_begin + count_of_level;
        count_of_level = count_of_level * k;
    }
    NodeLabels labels;
    labels.depth = std::move(depth);
    return Graph(next_id, edges, std::move(labels));
}

// Integer box {-n..n}^p with nearest-neighbor edges. Ids are assigned by
// (Chebyshev radius, lexicographic coordinates), so every box is an
// id-prefix of the next one and the origin is node 0.
inline Graph lattice_box(int p, int n, std::size_t node_cap = kDefaultNodeCap) {
    if (p < 1) throw std::invalid_argument("lattice dimension must be >= 1");
    if (n < 0) throw std::invalid_argument("lattice box radius must be >= 0");

    double approx = 1.0;
    for (int i = 0; i < p; ++i) approx *= 2.0 * n + 1.0;
    if (approx > static_cast<double>(node_cap))
        throw ResourceCapError("lattice box exceeds node cap");

    std::vector<std::vector<int>> points;
    std::map<std::vector<int>, NodeId> id_of;

    // Enumerate one Chebyshev shell in lexicographic order.
    std::vector<int> point(static_cast<std::size_t>(p));
    auto emit_shell = [&](int radius) {
        auto rec = [&](auto&& self, int dim, bool touches) -> void {
            if (dim == p) {
                if (touches) {
                    id_of.emplace(point, static_cast<NodeId>(points.size()));
                    points.push_back(point);
                }
                return;
            }
            for (int c = -radius; c <= radius; ++c) {
                point[static_cast<std::size_t>(dim)] = c;
                self(self, dim + 1, touches || c == radius || c == -radius);
            }
        };
        if (radius == 0) {
            std::fill(point.begin(), point.end(), 0);
            id_of.emplace(point, static_cast<NodeId>(points.size()));
            points.push_back(point);
        } else {
            rec(rec, 0, false);
        }
    };
    for (int r = 0; r <= n; ++r) emit_shell(r);

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < static_cast<NodeId>(points.size()); ++u) {
        auto nbr = points[static_cast<std::size_t>(u)];
        for (int d = 0; d < p; ++d) {
            for (int step : {-1, 1}) {
                nbr[static_cast<std::size_t>(d)] += step;
                auto it = id_of.find(nbr);
                if (it != id_of.end() && it->second > u) edges.emplace_back(u, it->second);
                nbr[static_cast<std::size_t>(d)] -= step;
            }
        }
    }
    NodeLabels labels;
    labels.coords = std::move(points);
    return Graph(static_cast<NodeId>(id_of.size()), edges, std::move(labels));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<NodeId>((i + 1) % n));
    return Graph(n, edges);
}

// Plain path with ids left to right; the middle node (lower of the two
// for even sizes) is recorded in the labels.
inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 node");
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    NodeLabels labels;
    labels.middle = static_cast<NodeId>((n - 1) / 2);
    return Graph(n, edges, std::move(labels));
}

// Edge-list reader: one "u v" pair per line, '#' starts a comment.
// Arbitrary ids are compacted to [0, n) by sorted original id.
// Self-loops and duplicate edges are hard errors, as are malformed lines.
inline Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    std::map<std::int64_t, NodeId> compact;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::int64_t u, v;
        if (!(ls >> u)) continue; // blank or comment-only line
        std::string trailing;
        if (!(ls >> v) || (ls >> trailing))
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected two ids");
        if (u == v)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": self-loop at " + std::to_string(u));
        raw.emplace_back(u, v);
        compact.emplace(u, 0);
        compact.emplace(v, 0);
    }
    NodeId next = 0;
    for (auto& [orig, id] : compact) id = next++;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.emplace_back(compact.at(u), compact.at(v));
    return Graph(next, edges); // duplicate edges rejected by the Graph ctor
}

inline Graph load_edge_list(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

} // namespace hypercore
