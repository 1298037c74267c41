#pragma once

// Brute-force traffic oracle used only in tests: enumerates every
// shortest path of every pair explicitly and splits demand by literal
// counting in exact rationals. Deliberately independent of the engine's
// dependency-accumulation route.

#include <vector>

#include "hypercore/geodesics.hpp"
#include "hypercore/graph.hpp"
#include "hypercore/measure.hpp"
#include "hypercore/numeric.hpp"

namespace oracle {

using hypercore::BigInt;
using hypercore::Graph;
using hypercore::NodeId;
using hypercore::NodeMeasure;
using hypercore::Rational;

// All shortest s-t paths as explicit vertex sequences.
inline std::vector<std::vector<NodeId>> all_shortest_paths(const Graph& g, NodeId s, NodeId t) {
    auto gd = hypercore::bfs_geodesics<double>(g, s);
    std::vector<std::vector<NodeId>> paths;
    std::vector<NodeId> cur{t};
    auto rec = [&](auto&& self, NodeId v) -> void {
        if (v == s) {
            paths.emplace_back(cur.rbegin(), cur.rend());
            return;
        }
        for (NodeId p : gd.preds[static_cast<std::size_t>(v)]) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    rec(rec, t);
    return paths;
}

inline Rational weight(const NodeMeasure& mu, std::size_t v) {
    return Rational(mu.weights[v]);
}

inline Rational brute_total(const NodeMeasure& mu) {
    Rational sum = 0, sq = 0;
    for (double w : mu.weights) {
        Rational x(w);
        sum += x;
        sq += x * x;
    }
    return (sum * sum - sq) / 2;
}

// Node loads by full path enumeration.
inline std::vector<Rational> brute_node_loads(const Graph& g, const NodeMeasure& mu) {
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<Rational> loads(n, Rational(0));
    for (NodeId s = 0; s < g.node_count(); ++s)
        for (NodeId t = s + 1; t < g.node_count(); ++t) {
            auto paths = all_shortest_paths(g, s, t);
            const Rational demand = weight(mu, static_cast<std::size_t>(s)) *
                                    weight(mu, static_cast<std::size_t>(t));
            const Rational share = demand / Rational(static_cast<BigInt>(paths.size()));
            for (const auto& path : paths)
                for (NodeId v : path) loads[static_cast<std::size_t>(v)] += share;
        }
    return loads;
}

// Ball load by full path enumeration: each pair contributes the fraction
// of its geodesics that touch the ball.
inline Rational brute_ball_load(const Graph& g, const NodeMeasure& mu, NodeId center, int r) {
    auto dist = hypercore::bfs_distances(g, center);
    auto in_ball = [&](NodeId v) { return dist[static_cast<std::size_t>(v)] <= r; };
    Rational load = 0;
    for (NodeId s = 0; s < g.node_count(); ++s)
        for (NodeId t = s + 1; t < g.node_count(); ++t) {
            auto paths = all_shortest_paths(g, s, t);
            std::size_t hits = 0;
            for (const auto& path : paths) {
                bool hit = false;
                for (NodeId v : path) hit = hit || in_ball(v);
                if (hit) ++hits;
            }
            const Rational demand = weight(mu, static_cast<std::size_t>(s)) *
                                    weight(mu, static_cast<std::size_t>(t));
            load += demand * Rational(static_cast<BigInt>(hits)) /
                    Rational(static_cast<BigInt>(paths.size()));
        }
    return load;
}

} // namespace oracle
