#pragma once

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "hypercore/geodesics.hpp"
#include "hypercore/graph.hpp"
#include "hypercore/rng.hpp"

namespace hypercore {

enum class DeltaMethod { four_point, slim_triangle };

struct DeltaEstimate {
    double delta = 0.0; // half-integer
    DeltaMethod method = DeltaMethod::four_point;
    std::uint64_t samples = 0;
    bool exhaustive = false;
};

namespace detail {

inline std::uint64_t binom4(std::uint64_t n) {
    if (n < 4) return 0;
    return n * (n - 1) / 2 * (n - 2) / 3 * (n - 3) / 4;
}

inline std::uint64_t binom3(std::uint64_t n) {
    if (n < 3) return 0;
    return n * (n - 1) / 2 * (n - 2) / 3;
}

inline double four_point_value(const DistanceMatrix& d, NodeId x, NodeId y, NodeId z,
                               NodeId w) {
    const int s1 = d(x, y) + d(z, w);
    const int s2 = d(x, z) + d(y, w);
    const int s3 = d(x, w) + d(y, z);
    int hi = std::max({s1, s2, s3});
    int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
    return (hi - mid) / 2.0;
}

// Canonical geodesic between s and t: backtrack from t picking the
// smallest predecessor id at every step. Returns the vertex sequence.
template <class Count>
std::vector<NodeId> canonical_path(const GeodesicData<Count>& from_s, NodeId t) {
    std::vector<NodeId> path{t};
    NodeId cur = t;
    while (cur != from_s.source) {
        const auto& ps = from_s.preds[static_cast<std::size_t>(cur)];
        NodeId best = ps.front();
        for (NodeId p : ps) best = std::min(best, p);
        path.push_back(best);
        cur = best;
    }
    return path;
}

// Slimness of one triangle with canonically chosen sides: the largest
// distance from a point of one side to the union of the other two.
inline double slim_value(const Graph& g, const DistanceMatrix& d,
                         const std::vector<GeodesicData<double>>& geo, NodeId a, NodeId b,
                         NodeId c) {
    const std::array<std::vector<NodeId>, 3> sides = {
        canonical_path(geo[static_cast<std::size_t>(a)], b),
        canonical_path(geo[static_cast<std::size_t>(b)], c),
        canonical_path(geo[static_cast<std::size_t>(c)], a)};
    int worst = 0;
    std::vector<char> member(static_cast<std::size_t>(g.node_count()), 0);
    for (int i = 0; i < 3; ++i) {
        const auto& u1 = sides[static_cast<std::size_t>((i + 1) % 3)];
        const auto& u2 = sides[static_cast<std::size_t>((i + 2) % 3)];
        for (NodeId v : u1) member[static_cast<std::size_t>(v)] = 1;
        for (NodeId v : u2) member[static_cast<std::size_t>(v)] = 1;
        for (NodeId x : sides[static_cast<std::size_t>(i)]) {
            if (member[static_cast<std::size_t>(x)]) continue; // on another side
            int best = d.size();
            for (NodeId y : u1) best = std::min(best, d(x, y));
            for (NodeId y : u2) best = std::min(best, d(x, y));
            worst = std::max(worst, best);
        }
        for (NodeId v : u1) member[static_cast<std::size_t>(v)] = 0;
        for (NodeId v : u2) member[static_cast<std::size_t>(v)] = 0;
    }
    return static_cast<double>(worst);
}

} // namespace detail

// Four-point condition: over quadruples {x,y,z,w}, sort the three pair
// sums S1 >= S2 >= S3 and take max (S1 - S2)/2. sample_count == 0 or a
// count covering all quadruples enumerates exhaustively, which yields the
// exact four-point constant.
inline DeltaEstimate four_point_delta(const Graph& g, std::uint64_t sample_count,
                                      std::uint64_t seed) {
    g.require_connected();
    const NodeId n = g.node_count();
    DistanceMatrix d(g);
    DeltaEstimate out;
    out.method = DeltaMethod::four_point;

    const std::uint64_t all = detail::binom4(static_cast<std::uint64_t>(n));
    if (sample_count == 0 || sample_count >= all) {
        for (NodeId x = 0; x < n; ++x)
            for (NodeId y = x + 1; y < n; ++y)
                for (NodeId z = y + 1; z < n; ++z)
                    for (NodeId w = z + 1; w < n; ++w)
                        out.delta = std::max(out.delta, detail::four_point_value(d, x, y, z, w));
        out.samples = all;
        out.exhaustive = true;
        return out;
    }

    SplitMix64 rng(seed);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        NodeId q[4];
        do {
            for (auto& v : q) v = static_cast<NodeId>(rng.bounded(static_cast<std::uint64_t>(n)));
        } while (q[0] == q[1] || q[0] == q[2] || q[0] == q[3] || q[1] == q[2] ||
                 q[1] == q[3] || q[2] == q[3]);
        out.delta = std::max(out.delta, detail::four_point_value(d, q[0], q[1], q[2], q[3]));
    }
    out.samples = sample_count;
    out.exhaustive = false;
    return out;
}

// Slim-triangle condition over vertex triples, one canonical geodesic per
// side (smallest-predecessor backtracking). Exhaustive mode covers every
// triple but still fixes one geodesic per side, so the result is a lower
// bound on the true slimness constant whenever geodesics are not unique.
inline DeltaEstimate slim_triangle_delta(const Graph& g, std::uint64_t sample_count,
                                         std::uint64_t seed) {
    g.require_connected();
    const NodeId n = g.node_count();
    DistanceMatrix d(g);
    std::vector<GeodesicData<double>> geo;
    geo.reserve(static_cast<std::size_t>(n));
    for (NodeId s = 0; s < n; ++s) geo.push_back(bfs_geodesics<double>(g, s));

    DeltaEstimate out;
    out.method = DeltaMethod::slim_triangle;

    const std::uint64_t all = detail::binom3(static_cast<std::uint64_t>(n));
    if (sample_count == 0 || sample_count >= all) {
        for (NodeId a = 0; a < n; ++a)
            for (NodeId b = a + 1; b < n; ++b)
                for (NodeId c = b + 1; c < n; ++c)
                    out.delta = std::max(out.delta, detail::slim_value(g, d, geo, a, b, c));
        out.samples = all;
        out.exhaustive = true;
        return out;
    }

    SplitMix64 rng(seed);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        NodeId a, b, c;
        do {
            a = static_cast<NodeId>(rng.bounded(static_cast<std::uint64_t>(n)));
            b = static_cast<NodeId>(rng.bounded(static_cast<std::uint64_t>(n)));
            c = static_cast<NodeId>(rng.bounded(static_cast<std::uint64_t>(n)));
        } while (a == b || b == c || a == c);
        out.delta = std::max(out.delta, detail::slim_value(g, d, geo, a, b, c));
    }
    out.samples = sample_count;
    out.exhaustive = false;
    return out;
}

// Slimness of one specific triangle; exposed for targeted checks.
inline double slim_triangle_value(const Graph& g, NodeId a, NodeId b, NodeId c) {
    g.require_connected();
    DistanceMatrix d(g);
    std::vector<GeodesicData<double>> geo;
    for (NodeId s = 0; s < g.node_count(); ++s) geo.push_back(bfs_geodesics<double>(g, s));
    return detail::slim_value(g, d, geo, a, b, c);
}

} // namespace hypercore
