#pragma once

#include <limits>
#include <queue>
#include <vector>

#include "hypercore/graph.hpp"

namespace hypercore {

// Per-source geodesic data from one BFS: hop distances, counts of
// distinct shortest paths, shortest-path predecessors, and the nodes in
// non-decreasing distance order. Count is double (fast) or an exact
// big integer (oracle).
template <class Count>
struct GeodesicData {
    NodeId source = 0;
    std::vector<int> dist;
    std::vector<Count> sigma;
    std::vector<std::vector<NodeId>> preds;
    std::vector<NodeId> order;
};

template <class Count>
GeodesicData<Count> bfs_geodesics(const Graph& g, NodeId s) {
    g.check_node(s);
    g.require_connected();
    const auto n = static_cast<std::size_t>(g.node_count());

    GeodesicData<Count> out;
    out.source = s;
    out.dist.assign(n, -1);
    out.sigma.assign(n, Count(0));
    out.preds.assign(n, {});
    out.order.reserve(n);

    out.dist[static_cast<std::size_t>(s)] = 0;
    out.sigma[static_cast<std::size_t>(s)] = Count(1);

    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        out.order.push_back(u);
        const auto ui = static_cast<std::size_t>(u);
        for (NodeId w : g.neighbors(u)) {
            const auto wi = static_cast<std::size_t>(w);
            if (out.dist[wi] < 0) {
                out.dist[wi] = out.dist[ui] + 1;
                q.push(w);
            }
            if (out.dist[wi] == out.dist[ui] + 1) {
                out.sigma[wi] += out.sigma[ui];
                out.preds[wi].push_back(u);
            }
        }
    }
    return out;
}

// Distance-only BFS; -1 marks unreachable nodes.
inline std::vector<int> bfs_distances(const Graph& g, NodeId s) {
    g.check_node(s);
    std::vector<int> dist(static_cast<std::size_t>(g.node_count()), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId w : g.neighbors(u))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
    }
    return dist;
}

// Dense all-pairs hop distances (row-major). Guarded by a node cap:
// quadratic memory.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g, NodeId cap = 5000) {
        if (g.node_count() > cap)
            throw std::invalid_argument("graph too large for dense distance matrix");
        n_ = g.node_count();
        data_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        for (NodeId s = 0; s < n_; ++s) {
            auto d = bfs_distances(g, s);
            std::copy(d.begin(), d.end(),
                      data_.begin() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n_));
        }
    }

    int operator()(NodeId u, NodeId v) const {
        return data_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(v)];
    }

    NodeId size() const { return n_; }

    int diameter() const {
        int d = 0;
        for (int x : data_) d = std::max(d, x);
        return d;
    }

private:
    NodeId n_ = 0;
    std::vector<int> data_;
};

} // namespace hypercore
