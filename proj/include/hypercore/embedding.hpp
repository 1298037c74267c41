#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hypercore/geodesics.hpp"
#include "hypercore/graph.hpp"

namespace hypercore {

// Node placements in the Poincare disk: an angle and a hyperbolic radius
// per node. The root sits at the origin with angle 0 by convention.
struct DiskEmbedding {
    std::vector<double> angle;
    std::vector<double> rho;

    std::size_t size() const { return angle.size(); }
};

// Planar tree layout: each node's children split the parent's angular
// interval into equal parts (children in id order), and rho is
// depth * edge_length. The angular order of the leaves is the planar
// order of the tree.
inline DiskEmbedding embed_tree(const Graph& g, NodeId root = 0, double edge_length = 1.0) {
    g.check_node(root);
    g.require_connected();
    const auto n = static_cast<std::size_t>(g.node_count());
    if (g.edge_count() != n - 1) throw std::invalid_argument("graph is not a tree");

    auto dist = bfs_distances(g, root);
    DiskEmbedding emb;
    emb.angle.assign(n, 0.0);
    emb.rho.assign(n, 0.0);

    // Interval subdivision along BFS order keeps everything deterministic.
    std::vector<double> lo(n, 0.0), hi(n, 2.0 * std::numbers::pi);
    std::vector<NodeId> frontier{root};
    while (!frontier.empty()) {
        std::vector<NodeId> next;
        for (NodeId u : frontier) {
            const auto ui = static_cast<std::size_t>(u);
            std::vector<NodeId> children;
            for (NodeId w : g.neighbors(u))
                if (dist[static_cast<std::size_t>(w)] == dist[ui] + 1) children.push_back(w);
            const double width = (hi[ui] - lo[ui]) / std::max<std::size_t>(children.size(), 1);
            for (std::size_t c = 0; c < children.size(); ++c) {
                const auto wi = static_cast<std::size_t>(children[c]);
                lo[wi] = lo[ui] + width * static_cast<double>(c);
                hi[wi] = lo[wi] + width;
                emb.angle[wi] = 0.5 * (lo[wi] + hi[wi]);
                emb.rho[wi] = edge_length * (dist[ui] + 1);
                next.push_back(children[c]);
            }
        }
        frontier = std::move(next);
    }
    emb.angle[static_cast<std::size_t>(root)] = 0.0;
    return emb;
}

// Layout for tessellation balls: layer k at rho = k, each layer's
// vertices equally spaced in the cyclic order the generator recorded.
inline DiskEmbedding embed_tessellation(const Graph& g) {
    const auto& labels = g.labels();
    if (!labels.layer || !labels.angle)
        throw std::invalid_argument("graph carries no tessellation labels");
    const auto n = static_cast<std::size_t>(g.node_count());

    int max_layer = 0;
    for (int l : *labels.layer) max_layer = std::max(max_layer, l);

    DiskEmbedding emb;
    emb.angle.assign(n, 0.0);
    emb.rho.assign(n, 0.0);
    for (int layer = 1; layer <= max_layer; ++layer) {
        std::vector<NodeId> ring;
        for (std::size_t v = 0; v < n; ++v)
            if ((*labels.layer)[v] == layer) ring.push_back(static_cast<NodeId>(v));
        std::sort(ring.begin(), ring.end(), [&](NodeId a, NodeId b) {
            const double aa = (*labels.angle)[static_cast<std::size_t>(a)];
            const double ab = (*labels.angle)[static_cast<std::size_t>(b)];
            return aa != ab ? aa < ab : a < b;
        });
        // Equal spacing, anchored at the recorded position of the first
        // vertex so consecutive rings stay rotationally aligned.
        const double gap = 2.0 * std::numbers::pi / static_cast<double>(ring.size());
        const double offset = (*labels.angle)[static_cast<std::size_t>(ring.front())];
        for (std::size_t i = 0; i < ring.size(); ++i) {
            emb.angle[static_cast<std::size_t>(ring[i])] =
                std::fmod(offset + gap * static_cast<double>(i), 2.0 * std::numbers::pi);
            emb.rho[static_cast<std::size_t>(ring[i])] = layer;
        }
    }
    return emb;
}

} // namespace hypercore
