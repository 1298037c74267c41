#pragma once

#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "hypercore/errors.hpp"
#include "hypercore/graph.hpp"
#include "hypercore/geodesics.hpp"

namespace hypercore {

namespace detail {

// Incremental builder for the vertex-regular {p,q} tiling (degree q,
// p-gon faces). The built region is kept a topological disk; its
// boundary is a doubly-linked cyclic list. Closing a boundary vertex v
// adds the q - f(v) missing faces around it in one angular sweep. A new
// face absorbs ("zips") a run of existing boundary vertices exactly when
// those vertices receive their last missing face, which is what keeps
// every tiling vertex unique without any geometry.
class TilingBuilder {
public:
    TilingBuilder(int p, int q) : p_(p), q_(q) {
        if (p < 3 || q < 3 || (p - 2) * (q - 2) <= 4)
            throw std::invalid_argument("{p,q} must satisfy (p-2)(q-2) > 4 with p,q >= 3");
        // Bootstrap face: one p-gon whose vertex 0 is the root.
        for (int i = 0; i < p_; ++i) {
            new_vertex(2.0 * kPi * i / p_);
            faces_[static_cast<std::size_t>(i)] = 1;
        }
        for (int i = 0; i < p_; ++i) {
            int j = (i + 1) % p_;
            add_edge(i, j);
            next_[static_cast<std::size_t>(i)] = j;
            prev_[static_cast<std::size_t>(j)] = i;
            on_boundary_[static_cast<std::size_t>(i)] = true;
        }
        dist_[0] = 0;
        relax_from(0);
        for (int i = 0; i < p_; ++i) queue_.insert({dist_[static_cast<std::size_t>(i)], i});
    }

    // Closes every vertex at hop distance <= limit from the root.
    void close_up_to(int limit) {
        while (!queue_.empty()) {
            auto [d, v] = *queue_.begin();
            if (d > limit) break;
            queue_.erase(queue_.begin());
            if (!on_boundary_[static_cast<std::size_t>(v)]) continue;
            close(v);
        }
    }

    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const std::vector<int>& dist() const { return dist_; }
    const std::vector<double>& angle() const { return angle_; }

private:
    static constexpr double kPi = 3.14159265358979323846;

    int new_vertex(double angle) {
        int id = static_cast<int>(adj_.size());
        adj_.emplace_back();
        dist_.push_back(std::numeric_limits<int>::max() / 2);
        faces_.push_back(0);
        angle_.push_back(angle);
        next_.push_back(-1);
        prev_.push_back(-1);
        on_boundary_.push_back(false);
        return id;
    }

    void add_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        relax_edge(u, v);
    }

    // Edges only ever get added, so distances only ever decrease.
    void relax_edge(int u, int v) {
        if (dist_[static_cast<std::size_t>(u)] > dist_[static_cast<std::size_t>(v)]) std::swap(u, v);
        if (dist_[static_cast<std::size_t>(u)] + 1 < dist_[static_cast<std::size_t>(v)]) {
            lower_dist(v, dist_[static_cast<std::size_t>(u)] + 1);
            relax_from(v);
        }
    }

    void relax_from(int start) {
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj_[static_cast<std::size_t>(u)])
                if (dist_[static_cast<std::size_t>(u)] + 1 < dist_[static_cast<std::size_t>(w)]) {
                    lower_dist(w, dist_[static_cast<std::size_t>(u)] + 1);
                    q.push(w);
                }
        }
    }

    void lower_dist(int v, int d) {
        if (on_boundary_[static_cast<std::size_t>(v)])
            queue_.erase({dist_[static_cast<std::size_t>(v)], v});
        dist_[static_cast<std::size_t>(v)] = d;
        if (on_boundary_[static_cast<std::size_t>(v)])
            queue_.insert({d, v});
    }

    void leave_boundary(int v) {
        queue_.erase({dist_[static_cast<std::size_t>(v)], v});
        on_boundary_[static_cast<std::size_t>(v)] = false;
        next_[static_cast<std::size_t>(v)] = prev_[static_cast<std::size_t>(v)] = -1;
    }

    void add_face_at(int v) { ++faces_[static_cast<std::size_t>(v)]; }

    // Walks away from v along the boundary, collecting the contiguous run
    // of vertices the next face must absorb. The run extends past a vertex
    // exactly while that vertex is one face short of q.
    std::vector<int> collect_arc(int from, const std::vector<int>& dir) const {
        std::vector<int> arc;
        int cur = from;
        while (true) {
            arc.push_back(cur);
            if (static_cast<int>(arc.size()) > p_)
                throw std::runtime_error("tiling boundary arc exceeded face size");
            if (faces_[static_cast<std::size_t>(cur)] == q_ - 1)
                cur = dir[static_cast<std::size_t>(cur)];
            else
                break;
        }
        return arc;
    }

    // Adds the q - f(v) missing faces around boundary vertex v and splices
    // the boundary accordingly.
    void close(int v) {
        const int missing = q_ - faces_[static_cast<std::size_t>(v)];
        if (missing < 1) throw std::runtime_error("tiling vertex already saturated");
        const int left_end = prev_[static_cast<std::size_t>(v)];
        const int right_end = next_[static_cast<std::size_t>(v)];
        if (left_end == v || right_end == v)
            throw std::runtime_error("tiling boundary collapsed");

        std::vector<int> left_arc = collect_arc(left_end, prev_);
        std::vector<int> right_arc = collect_arc(right_end, next_);
        const int keep_left = left_arc.back();
        const int keep_right = right_arc.back();
        if (keep_left == v || keep_right == v)
            throw std::runtime_error("tiling boundary collapsed");
        for (int a : left_arc)
            for (int b : right_arc)
                if (a == b) throw std::runtime_error("tiling boundary collapsed");

        // New boundary segment replacing [keep_left .. v .. keep_right].
        std::vector<int> segment;

        if (missing == 1) {
            // One face absorbs both arcs.
            int used = static_cast<int>(left_arc.size() + right_arc.size()) + 1;
            int fresh = p_ - used;
            if (fresh < 0) throw std::runtime_error("tiling face overfull");
            for (int x : left_arc) add_face_at(x);
            for (int x : right_arc) add_face_at(x);
            add_face_at(v);
            segment = fresh_chain(keep_left, keep_right, fresh);
        } else {
            // Sweep left to right: first face takes the left arc, middle
            // faces hang off new spokes, last face takes the right arc.
            for (int x : left_arc) add_face_at(x);
            int k1 = p_ - static_cast<int>(left_arc.size()) - 1;
            if (k1 < 1) throw std::runtime_error("tiling sweep lost its spoke");
            std::vector<int> chain = fresh_chain_open(keep_left, k1);
            add_edge(chain.back(), v);     // spoke
            add_face_at(v);
            ++faces_[static_cast<std::size_t>(chain.back())]; // shares next face
            segment.insert(segment.end(), chain.begin(), chain.end());

            for (int i = 1; i < missing - 1; ++i) {
                std::vector<int> mid = fresh_chain_open(segment.back(), p_ - 2);
                add_edge(mid.back(), v);   // spoke
                add_face_at(v);
                ++faces_[static_cast<std::size_t>(mid.back())];
                segment.insert(segment.end(), mid.begin(), mid.end());
            }

            for (int x : right_arc) add_face_at(x);
            add_face_at(v);
            int kg = p_ - 2 - static_cast<int>(right_arc.size());
            if (kg < 0) throw std::runtime_error("tiling face overfull");
            std::vector<int> tail = fresh_chain(segment.back(), keep_right, kg);
            // fresh_chain spliced from segment.back(): append its interior
            segment.insert(segment.end(), tail.begin(), tail.end());
        }

        // Remove v and the zipped (now saturated) arc interiors.
        leave_boundary(v);
        for (std::size_t i = 0; i + 1 < left_arc.size(); ++i) leave_boundary(left_arc[i]);
        for (std::size_t i = 0; i + 1 < right_arc.size(); ++i) leave_boundary(right_arc[i]);
        for (int x : {keep_left, keep_right})
            if (faces_[static_cast<std::size_t>(x)] >= q_)
                throw std::runtime_error("tiling arc end oversaturated");

        splice(keep_left, segment, keep_right);
    }

    // Creates `count` fresh vertices chained between two kept boundary
    // vertices (count == 0 adds the direct closing edge).
    std::vector<int> fresh_chain(int from, int to, int count) {
        std::vector<int> chain = fresh_chain_open(from, count);
        add_edge(chain.empty() ? from : chain.back(), to);
        return chain;
    }

    // Creates `count` fresh vertices chained off `from`, left open-ended.
    std::vector<int> fresh_chain_open(int from, int count) {
        std::vector<int> chain;
        int cur = from;
        for (int i = 0; i < count; ++i) {
            int x = new_vertex(0.0); // angle assigned at splice time
            faces_[static_cast<std::size_t>(x)] = 1;
            add_edge(cur, x);
            chain.push_back(x);
            cur = x;
        }
        return chain;
    }

    // Rethreads the boundary as keep_left -> segment -> keep_right and
    // spreads the segment's angles over the gap between the kept ends.
    void splice(int keep_left, const std::vector<int>& segment, int keep_right) {
        const double a0 = angle_[static_cast<std::size_t>(keep_left)];
        double span = std::fmod(angle_[static_cast<std::size_t>(keep_right)] - a0 + 4.0 * kPi,
                                2.0 * kPi);
        if (span == 0.0) span = 2.0 * kPi;
        int cur = keep_left;
        int idx = 0;
        for (int x : segment) {
            angle_[static_cast<std::size_t>(x)] =
                std::fmod(a0 + span * (idx + 1) / (static_cast<int>(segment.size()) + 1),
                          2.0 * kPi);
            ++idx;
            next_[static_cast<std::size_t>(cur)] = x;
            prev_[static_cast<std::size_t>(x)] = cur;
            on_boundary_[static_cast<std::size_t>(x)] = true;
            queue_.insert({dist_[static_cast<std::size_t>(x)], x});
            cur = x;
        }
        next_[static_cast<std::size_t>(cur)] = keep_right;
        prev_[static_cast<std::size_t>(keep_right)] = cur;
    }

    int p_, q_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> dist_;
    std::vector<int> faces_;
    std::vector<double> angle_;
    std::vector<int> next_, prev_;
    std::vector<char> on_boundary_;
    std::set<std::pair<int, int>> queue_; // (dist, id) of boundary vertices
};

} // namespace detail

// Combinatorial ball of hop radius `layers` around a root vertex of the
// {p,q} tessellation. Kept ids are ordered by (hop distance, creation
// order), so each ball is an id-prefix of every deeper ball. Vertices in
// the outermost layers legitimately have degree < q.
inline Graph tessellation_ball(int p, int q, int layers,
                               std::size_t node_cap = kDefaultNodeCap) {
    if (layers < 0) throw std::invalid_argument("layers must be >= 0");
    if (p < 3 || q < 3 || (p - 2) * (q - 2) <= 4)
        throw std::invalid_argument("{p,q} must satisfy (p-2)(q-2) > 4 with p,q >= 3");

    if (layers == 0) {
        NodeLabels labels;
        labels.layer = std::vector<int>{0};
        labels.angle = std::vector<double>{0.0};
        return Graph(1, {}, std::move(labels));
    }

    detail::TilingBuilder builder(p, q);
    builder.close_up_to(layers - 1);

    const auto& dist = builder.dist();
    const auto n_built = dist.size();

    // Keep the true ball and remap ids by (distance, creation order).
    std::vector<int> kept;
    for (std::size_t i = 0; i < n_built; ++i)
        if (dist[i] <= layers) kept.push_back(static_cast<int>(i));
    std::stable_sort(kept.begin(), kept.end(),
                     [&](int a, int b) { return dist[static_cast<std::size_t>(a)] <
                                                dist[static_cast<std::size_t>(b)]; });
    if (kept.size() > node_cap) throw ResourceCapError("tessellation ball exceeds node cap");

    std::vector<NodeId> remap(n_built, -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        remap[static_cast<std::size_t>(kept[i])] = static_cast<NodeId>(i);

    std::vector<std::pair<NodeId, NodeId>> edges;
    NodeLabels labels;
    labels.layer = std::vector<int>(kept.size());
    labels.angle = std::vector<double>(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const auto old = static_cast<std::size_t>(kept[i]);
        (*labels.layer)[i] = dist[old];
        (*labels.angle)[i] = builder.angle()[old];
        for (int w : builder.adjacency()[old]) {
            NodeId rw = remap[static_cast<std::size_t>(w)];
            if (rw >= 0 && rw > static_cast<NodeId>(i))
                edges.emplace_back(static_cast<NodeId>(i), rw);
        }
    }
    return Graph(static_cast<NodeId>(kept.size()), edges, std::move(labels));
}

} // namespace hypercore
