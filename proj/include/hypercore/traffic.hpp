#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "hypercore/geodesics.hpp"
#include "hypercore/graph.hpp"
#include "hypercore/measure.hpp"
#include "hypercore/numeric.hpp"

namespace hypercore {

// Geodesic traffic model: each unordered pair {s,t} exchanges demand
// mu(s)*mu(t), split equally among the sigma_st shortest s-t paths. The
// load of a node counts every pair whose chosen geodesic visits it,
// endpoints included, so a pair contributes its full demand to both of
// its endpoints.

template <class Value>
struct TrafficLoads {
    std::vector<Value> loads;
    Value total{};
    Mode mode = Mode::fast;
};

template <class Value>
struct BallLoadResult {
    NodeId center = 0;
    int radius = 0;
    Value load{};
    double proportion = 0.0;
};

// Total demand over unordered pairs: ((sum mu)^2 - sum mu^2) / 2.
// Independent of the graph.
template <class Policy = FastPolicy>
typename Policy::value_t total_traffic(const NodeMeasure& mu) {
    using V = typename Policy::value_t;
    if (mu.weights.empty() || !(mu.total_mass() > 0.0))
        throw std::invalid_argument("measure has zero total mass");
    V sum{}, sum_sq{};
    for (double w : mu.weights) {
        V x = Policy::value_from_weight(w);
        sum += x;
        sum_sq += x * x;
    }
    return (sum * sum - sum_sq) / 2;
}

namespace detail {

// Endpoint-inclusive dependency accumulation for one source. With delta
// initialized to mu(v) instead of 0, the backward pass over the BFS DAG
// yields delta[v] = sum over targets t of mu(t) * (fraction of s-t
// geodesics through v), with the t = v term equal to mu(v) itself.
template <class Policy>
std::vector<typename Policy::value_t> source_dependencies(
    const Graph& g, const NodeMeasure& mu,
    const GeodesicData<typename Policy::count_t>& gd) {
    using V = typename Policy::value_t;
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<V> delta(n);
    for (std::size_t v = 0; v < n; ++v)
        delta[v] = Policy::value_from_weight(mu.weights[v]);
    for (auto it = gd.order.rbegin(); it != gd.order.rend(); ++it) {
        const auto w = static_cast<std::size_t>(*it);
        for (NodeId u : gd.preds[w]) {
            const auto ui = static_cast<std::size_t>(u);
            delta[ui] += delta[w] * V(gd.sigma[ui]) / V(gd.sigma[w]);
        }
    }
    return delta;
}

} // namespace detail

// Per-node loads: load(v) = sum over unordered pairs {s,t} of
// mu(s)mu(t) * sigma_st(v)/sigma_st. Computed by per-source accumulation,
// never by path enumeration. Worker count never changes the result: each
// source's contribution is accumulated in fixed source order within
// fixed-size blocks, and blocks are reduced in index order.
template <class Policy = FastPolicy>
TrafficLoads<typename Policy::value_t> node_loads(const Graph& g, const NodeMeasure& mu,
                                                  unsigned workers = 1) {
    using V = typename Policy::value_t;
    g.require_connected();
    if (mu.size() != static_cast<std::size_t>(g.node_count()))
        throw std::invalid_argument("measure size does not match graph");
    mu.validate();

    const auto n = static_cast<std::size_t>(g.node_count());
    constexpr std::size_t kBlock = 64;
    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    std::vector<std::vector<V>> block_sums(blocks);

    auto run_block = [&](std::size_t b) {
        std::vector<V> acc(n);
        const std::size_t lo = b * kBlock, hi = std::min(n, lo + kBlock);
        for (std::size_t s = lo; s < hi; ++s) {
            auto gd = bfs_geodesics<typename Policy::count_t>(g, static_cast<NodeId>(s));
            auto delta = detail::source_dependencies<Policy>(g, mu, gd);
            const V ws = Policy::value_from_weight(mu.weights[s]);
            for (std::size_t v = 0; v < n; ++v) acc[v] += ws * delta[v];
        }
        block_sums[b] = std::move(acc);
    };

    if (workers <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next_block{0};
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::size_t b = next_block.fetch_add(1); b < blocks;
                     b = next_block.fetch_add(1))
                    run_block(b);
            });
        for (auto& th : pool) th.join();
    }

    TrafficLoads<V> out;
    out.mode = Policy::mode;
    out.loads.assign(n, V{});
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t v = 0; v < n; ++v) out.loads[v] += block_sums[b][v];
    // The double-sum counted each pair from both endpoints; the s = t term
    // contributed mu(v)^2 once per node.
    for (std::size_t v = 0; v < n; ++v) {
        V w = Policy::value_from_weight(mu.weights[v]);
        out.loads[v] = (out.loads[v] - w * w) / 2;
    }
    out.total = total_traffic<Policy>(mu);
    return out;
}

namespace detail {

// Nodes of B(center, r) in hop metric.
inline std::vector<char> ball_mask(const Graph& g, NodeId center, int r) {
    auto dist = bfs_distances(g, center);
    std::vector<char> mask(dist.size(), 0);
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist[i] >= 0 && dist[i] <= r) mask[i] = 1;
    return mask;
}

// BFS restricted to nodes outside the mask.
template <class Count>
void bfs_outside(const Graph& g, NodeId s, const std::vector<char>& mask,
                 std::vector<int>& dist, std::vector<Count>& sigma) {
    const auto n = static_cast<std::size_t>(g.node_count());
    dist.assign(n, -1);
    sigma.assign(n, Count(0));
    dist[static_cast<std::size_t>(s)] = 0;
    sigma[static_cast<std::size_t>(s)] = Count(1);
    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        const auto ui = static_cast<std::size_t>(u);
        for (NodeId w : g.neighbors(u)) {
            const auto wi = static_cast<std::size_t>(w);
            if (mask[wi]) continue;
            if (dist[wi] < 0) {
                dist[wi] = dist[ui] + 1;
                q.push(w);
            }
            if (dist[wi] == dist[ui] + 1) sigma[wi] += sigma[ui];
        }
    }
}

} // namespace detail

// Traffic through the ball B(center, r): a pair {s,t} contributes the
// fraction of its geodesics that intersect the ball. Pairs with an
// endpoint inside contribute fully; for the rest the avoiding fraction is
// sigma_{G\B}(s,t)/sigma_G(s,t) when the detour distance matches, zero
// when every shortest route (or any route at all) meets the ball.
template <class Policy = FastPolicy>
BallLoadResult<typename Policy::value_t> ball_load(const Graph& g, const NodeMeasure& mu,
                                                   NodeId center, int r) {
    using V = typename Policy::value_t;
    using C = typename Policy::count_t;
    g.require_connected();
    g.check_node(center);
    if (r < 0) throw std::invalid_argument("ball radius must be >= 0");
    if (mu.size() != static_cast<std::size_t>(g.node_count()))
        throw std::invalid_argument("measure size does not match graph");
    mu.validate();

    const auto n = static_cast<std::size_t>(g.node_count());
    const auto mask = detail::ball_mask(g, center, r);

    V inside{};   // pairs with an endpoint in the ball
    V crossing{}; // ball-avoiding deficit of outside pairs
    // Endpoint-in-ball pairs, counted directly from masses.
    V mass_in{}, mass_out{};
    for (std::size_t v = 0; v < n; ++v) {
        V w = Policy::value_from_weight(mu.weights[v]);
        if (mask[v]) mass_in += w; else mass_out += w;
    }
    V sq_in{};
    for (std::size_t v = 0; v < n; ++v)
        if (mask[v]) {
            V w = Policy::value_from_weight(mu.weights[v]);
            sq_in += w * w;
        }
    inside = (mass_in * mass_in - sq_in) / 2 + mass_in * mass_out;

    // Outside pairs: full BFS and masked BFS per outside source.
    std::vector<int> dist_out;
    std::vector<C> sigma_out;
    for (std::size_t s = 0; s < n; ++s) {
        if (mask[s]) continue;
        auto gd = bfs_geodesics<C>(g, static_cast<NodeId>(s));
        detail::bfs_outside<C>(g, static_cast<NodeId>(s), mask, dist_out, sigma_out);
        const V ws = Policy::value_from_weight(mu.weights[s]);
        for (std::size_t t = s + 1; t < n; ++t) {
            if (mask[t]) continue;
            V frac_avoid{};
            if (dist_out[t] >= 0 && dist_out[t] == gd.dist[t])
                frac_avoid = V(sigma_out[t]) / V(gd.sigma[t]);
            V hit = V(1) - frac_avoid;
            crossing += ws * Policy::value_from_weight(mu.weights[t]) * hit;
        }
    }

    BallLoadResult<V> out;
    out.center = center;
    out.radius = r;
    out.load = inside + crossing;
    V total = total_traffic<Policy>(mu);
    out.proportion = total > V(0) ? Policy::to_double(out.load / total)
                                  : 1.0;
    return out;
}

// Right-hand side of the conservation identity: every geodesic of a pair
// at distance d visits d+1 nodes, so the node loads must sum to
// sum over pairs of mu(s)mu(t)*(d(s,t)+1).
template <class Policy = FastPolicy>
typename Policy::value_t conservation_target(const Graph& g, const NodeMeasure& mu) {
    using V = typename Policy::value_t;
    g.require_connected();
    const auto n = static_cast<std::size_t>(g.node_count());
    V acc{};
    for (std::size_t s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, static_cast<NodeId>(s));
        const V ws = Policy::value_from_weight(mu.weights[s]);
        for (std::size_t t = s + 1; t < n; ++t)
            acc += ws * Policy::value_from_weight(mu.weights[t]) * V(dist[t] + 1);
    }
    return acc;
}

} // namespace hypercore
