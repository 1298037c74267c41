#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercore/disk.hpp"
#include "hypercore/embedding.hpp"
#include "hypercore/geodesics.hpp"
#include "hypercore/graph.hpp"
#include "hypercore/measure.hpp"

namespace hypercore {

// Boundary mass binned into K equal arcs. Masses sum to one.
struct VisualHistogram {
    int K = 0;
    std::vector<double> masses;
    int n = 0; // family index the histogram was computed from

    int arc_of(double angle) const {
        int idx = static_cast<int>(wrap_angle(angle) / (2.0 * std::numbers::pi) * K);
        return std::min(idx, K - 1);
    }

    double arc_center(int idx) const {
        return (idx + 0.5) * 2.0 * std::numbers::pi / K;
    }

    double max_mass() const {
        double m = 0.0;
        for (double x : masses) m = std::max(m, x);
        return m;
    }
};

// Boundary measure of one graph: every node x sends its mass toward the
// direction of one frontier node, namely the smallest-id node among the
// deepest targets reachable by extending a root geodesic through x. The
// paper-style ray measure is not additive (a node can sit on rays toward
// many directions); this canonical-direction rule forces a probability
// histogram.
inline VisualHistogram visual_histogram(const Graph& g, const DiskEmbedding& emb,
                                        const NodeMeasure& mu, int K, int n_index = 0,
                                        NodeId root = 0) {
    if (K < 2) throw std::invalid_argument("histogram needs K >= 2 arcs");
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");
    if (emb.size() != static_cast<std::size_t>(g.node_count()))
        throw std::invalid_argument("embedding does not cover the graph");
    const auto gd = bfs_geodesics<double>(g, root);
    const auto n = static_cast<std::size_t>(g.node_count());

    // DAG successors of x are the nodes listing x as a geodesic
    // predecessor. Scanning nodes farthest-first makes reach[] and the
    // canonical direction a single backward sweep.
    std::vector<int> reach(n);
    std::vector<NodeId> direction(n);
    for (std::size_t v = 0; v < n; ++v) {
        reach[v] = gd.dist[v];
        direction[v] = static_cast<NodeId>(v);
    }
    for (auto it = gd.order.rbegin(); it != gd.order.rend(); ++it) {
        const auto w = static_cast<std::size_t>(*it);
        for (NodeId u : gd.preds[w]) {
            const auto ui = static_cast<std::size_t>(u);
            if (reach[w] > reach[ui] ||
                (reach[w] == reach[ui] && direction[w] < direction[ui])) {
                reach[ui] = reach[w];
                direction[ui] = direction[w];
            }
        }
    }

    VisualHistogram hist;
    hist.K = K;
    hist.n = n_index;
    hist.masses.assign(static_cast<std::size_t>(K), 0.0);
    const double total = mu.total_mass();
    for (std::size_t v = 0; v < n; ++v) {
        const double theta = emb.angle[static_cast<std::size_t>(direction[v])];
        hist.masses[static_cast<std::size_t>(hist.arc_of(theta))] += mu.weights[v] / total;
    }
    return hist;
}

enum class MeasureClass { single_atom, atomic_multi, diffuse, inconclusive };

inline std::string to_string(MeasureClass c) {
    switch (c) {
        case MeasureClass::single_atom: return "single_atom";
        case MeasureClass::atomic_multi: return "atomic_multi";
        case MeasureClass::diffuse: return "diffuse";
        default: return "inconclusive";
    }
}

struct TrichotomyVerdict {
    MeasureClass klass = MeasureClass::inconclusive;
    std::optional<double> alpha_star; // 1 - sum p_i^2, atomic_multi only
    // max arc mass per histogram, in input order; the raw evidence
    std::vector<double> max_mass_evidence;
};

struct TrichotomyConfig {
    double atom_threshold = 0.1;
    double epsilon = 0.05;
};

// Classifies the limiting boundary measure from histograms computed at
// several family indices and several refinements K. The decision reads
// the largest family index: one arc holding nearly everything at every K
// means a single atom; a stable set of heavy arcs that keep their mass as
// K refines means a purely atomic limit (alpha_star = 1 - sum p_i^2);
// a max arc mass under epsilon at the finest K means diffuse. Anything
// else is reported as inconclusive rather than forced into a class.
inline TrichotomyVerdict classify_limit_measure(const std::vector<VisualHistogram>& hists,
                                                const std::vector<int>& K_schedule,
                                                const TrichotomyConfig& cfg = {}) {
    if (K_schedule.size() < 2 || hists.size() < 3)
        throw std::invalid_argument("need >= 3 histograms and >= 2 refinements");
    for (std::size_t i = 1; i < K_schedule.size(); ++i)
        if (K_schedule[i] <= K_schedule[i - 1])
            throw std::invalid_argument("K schedule must increase");

    TrichotomyVerdict verdict;
    for (const auto& h : hists) verdict.max_mass_evidence.push_back(h.max_mass());

    int n_max = 0;
    for (const auto& h : hists) n_max = std::max(n_max, h.n);

    // One histogram per K at the largest family index.
    std::vector<const VisualHistogram*> finest;
    for (int K : K_schedule) {
        const VisualHistogram* pick = nullptr;
        for (const auto& h : hists)
            if (h.K == K && h.n == n_max) pick = &h;
        if (!pick) throw std::invalid_argument("missing histogram for K at largest n");
        finest.push_back(pick);
    }

    bool single = true;
    for (const auto* h : finest) single = single && h->max_mass() >= 1.0 - cfg.epsilon;
    if (single) {
        verdict.klass = MeasureClass::single_atom;
        return verdict;
    }

    // Atom candidates per refinement: arcs at or above the threshold.
    std::vector<std::vector<int>> atoms;
    for (const auto* h : finest) {
        std::vector<int> idx;
        for (int a = 0; a < h->K; ++a)
            if (h->masses[static_cast<std::size_t>(a)] >= cfg.atom_threshold) idx.push_back(a);
        atoms.push_back(idx);
    }

    // Stable means: same number of heavy arcs at every refinement, and the
    // j-th finer atom always falls inside the j-th coarser one (both lists
    // are in angular order, so positional matching is the nesting check).
    bool stable = !atoms.front().empty();
    for (std::size_t i = 0; stable && i + 1 < atoms.size(); ++i) {
        if (atoms[i].size() != atoms[i + 1].size()) { stable = false; break; }
        for (std::size_t j = 0; stable && j < atoms[i + 1].size(); ++j) {
            const double center = finest[i + 1]->arc_center(atoms[i + 1][j]);
            if (finest[i]->arc_of(center) != atoms[i][j]) stable = false;
        }
    }
    if (stable) {
        double sum_sq = 0.0;
        const auto* fin = finest.back();
        for (int a : atoms.back()) {
            const double p = fin->masses[static_cast<std::size_t>(a)];
            sum_sq += p * p;
        }
        verdict.klass = MeasureClass::atomic_multi;
        verdict.alpha_star = 1.0 - sum_sq;
        return verdict;
    }

    if (finest.back()->max_mass() < cfg.epsilon) {
        verdict.klass = MeasureClass::diffuse;
        return verdict;
    }
    verdict.klass = MeasureClass::inconclusive;
    return verdict;
}

// Discrete version of the cap integral bounding the asymptotic ball
// proportion: sum_i p_i * (mass of arcs whose centers fall in the cap
// opposite arc i's center at radius r + C).
inline double core_upper_bound(const VisualHistogram& hist, double r, double C) {
    if (r < 0 || C < 0) throw std::invalid_argument("radii must be >= 0");
    double acc = 0.0;
    for (int i = 0; i < hist.K; ++i) {
        const double pi_mass = hist.masses[static_cast<std::size_t>(i)];
        if (pi_mass == 0.0) continue;
        const Arc cap = cap_opposite(hist.arc_center(i), r + C);
        double inside = 0.0;
        for (int j = 0; j < hist.K; ++j)
            if (cap.contains(hist.arc_center(j)))
                inside += hist.masses[static_cast<std::size_t>(j)];
        acc += pi_mass * inside;
    }
    return acc;
}

// Visual metric between two leaves of a rooted tree: a^(-depth of the
// bifurcation point), the lowest common ancestor.
inline double tree_boundary_metric(double a, const Graph& g, NodeId leaf1, NodeId leaf2,
                                   NodeId root = 0) {
    if (!(a > 1.0)) throw std::invalid_argument("visual parameter a must exceed 1");
    if (leaf1 == leaf2) throw std::invalid_argument("identical leaves");
    g.check_node(leaf1);
    g.check_node(leaf2);
    const auto n = static_cast<std::size_t>(g.node_count());
    if (g.edge_count() != n - 1) throw std::invalid_argument("graph is not a tree");

    auto dist = bfs_distances(g, root);
    auto parent_of = [&](NodeId v) {
        for (NodeId w : g.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] - 1)
                return w;
        return v;
    };
    NodeId x = leaf1, y = leaf2;
    while (dist[static_cast<std::size_t>(x)] > dist[static_cast<std::size_t>(y)]) x = parent_of(x);
    while (dist[static_cast<std::size_t>(y)] > dist[static_cast<std::size_t>(x)]) y = parent_of(y);
    while (x != y) {
        x = parent_of(x);
        y = parent_of(y);
    }
    return std::pow(a, -static_cast<double>(dist[static_cast<std::size_t>(x)]));
}

} // namespace hypercore
