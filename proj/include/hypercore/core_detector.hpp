#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypercore/family.hpp"
#include "hypercore/traffic.hpp"

namespace hypercore {

// Query grid for core detection: ball centers by stable id, radii, the
// alpha thresholds to decide, and the tail window used to estimate the
// liminf of each proportion sequence.
struct CoreQuery {
    std::vector<NodeId> centers;
    bool all_nodes_of_smallest = false; // shorthand: every node of X_{n_min}
    std::vector<int> radii{0};
    std::vector<double> alphas;
    int tail_window = 3;

    void validate() const {
        if (!all_nodes_of_smallest && centers.empty())
            throw std::invalid_argument("no centers requested");
        if (radii.empty() || !std::is_sorted(radii.begin(), radii.end()))
            throw std::invalid_argument("radii must be non-empty and ascending");
        for (int r : radii)
            if (r < 0) throw std::invalid_argument("radii must be >= 0");
        for (double a : alphas)
            if (!(a > 0.0) || !(a < 1.0))
                throw std::invalid_argument("alphas must lie in (0,1)");
        if (tail_window < 1) throw std::invalid_argument("tail window must be >= 1");
    }
};

struct SeriesPoint {
    int n = 0;
    std::int64_t N = 0;
    double proportion = 0.0;
    bool operator==(const SeriesPoint&) const = default;
};

// One (n, N, proportion) sequence for a fixed center and radius.
inline std::vector<SeriesPoint> proportion_series(const FamilySpec& family,
                                                  const MeasureRule& mu_rule, NodeId center,
                                                  int r, Mode mode = Mode::fast) {
    std::vector<SeriesPoint> out;
    for (int n = family.n_min; n <= family.n_max; ++n) {
        Graph g = family.member(n);
        g.check_node(center);
        NodeMeasure mu = mu_rule(g);
        double prop = mode == Mode::oracle
                          ? ball_load<OraclePolicy>(g, mu, center, r).proportion
                          : ball_load<FastPolicy>(g, mu, center, r).proportion;
        out.push_back({n, g.node_count(), prop});
    }
    return out;
}

struct FamilyValidation {
    std::vector<int> indices;      // n for each checked pair (n, n+1)
    std::vector<bool> nesting_ok;  // id-prefix with identical induced adjacency
    std::vector<bool> closure_ok;  // root distances preserved in the next member

    bool all_ok() const {
        for (bool b : nesting_ok) if (!b) return false;
        for (bool b : closure_ok) if (!b) return false;
        return true;
    }
    bool operator==(const FamilyValidation&) const = default;
};

// Checks the two growing-family conditions on consecutive members:
// (a) X_n occupies ids [0, |X_n|) of X_{n+1} with the same induced
// adjacency, and (b) hop distance from node 0 agrees on the shared nodes,
// which is the root-geodesic closure condition.
inline FamilyValidation validate_family(const FamilySpec& family) {
    FamilyValidation flags;
    if (family.n_min == family.n_max) return flags;
    Graph prev = family.member(family.n_min);
    for (int n = family.n_min + 1; n <= family.n_max; ++n) {
        Graph next = family.member(n);
        flags.indices.push_back(n - 1);

        bool nest = next.node_count() >= prev.node_count();
        if (nest) {
            for (NodeId u = 0; nest && u < prev.node_count(); ++u) {
                std::vector<NodeId> induced;
                for (NodeId w : next.neighbors(u))
                    if (w < prev.node_count()) induced.push_back(w);
                nest = induced == prev.neighbors(u);
            }
        }
        flags.nesting_ok.push_back(nest);

        bool closure = nest && prev.node_count() > 0 && prev.is_connected();
        if (closure) {
            auto d_prev = bfs_distances(prev, 0);
            auto d_next = bfs_distances(next, 0);
            for (NodeId v = 0; closure && v < prev.node_count(); ++v)
                closure = d_prev[static_cast<std::size_t>(v)] ==
                          d_next[static_cast<std::size_t>(v)];
        }
        flags.closure_ok.push_back(closure);
        prev = std::move(next);
    }
    return flags;
}

struct CoreCell {
    NodeId center = 0;
    int radius = 0;
    std::vector<SeriesPoint> series;
    double liminf_estimate = 0.0;
    std::vector<bool> verdicts; // parallel to query alphas
    bool operator==(const CoreCell&) const = default;
};

struct CoreReport {
    std::string family_kind;
    std::string family_params;
    int n_min = 0, n_max = 0;
    std::vector<std::int64_t> sizes; // N(n) over the range
    CoreQuery query;
    FamilyValidation validation;
    std::vector<CoreCell> cells; // ordered by (center, radius)

    const CoreCell* find(NodeId center, int radius) const {
        for (const auto& c : cells)
            if (c.center == center && c.radius == radius) return &c;
        return nullptr;
    }
};

inline std::string family_param_string(const FamilySpec& f) {
    switch (f.kind) {
        case FamilyKind::branching_tree: {
            std::string s = f.ks.constant ? "k=" + std::to_string(f.ks.ks[0]) : "ks=";
            if (!f.ks.constant)
                for (std::size_t i = 0; i < f.ks.ks.size(); ++i)
                    s += (i ? "," : "") + std::to_string(f.ks.ks[i]);
            return s;
        }
        case FamilyKind::lattice_box: return "p=" + std::to_string(f.p);
        case FamilyKind::tessellation_ball:
            return "p=" + std::to_string(f.p) + ",q=" + std::to_string(f.q);
        default: return "";
    }
}

// Runs the family over its whole range and fills the proportion grid.
// The liminf estimate is the minimum of the last tail_window terms: no
// extrapolation, so every verdict is an at-horizon statement, never a
// claim about the true limit.
inline CoreReport scan(const FamilySpec& family, const CoreQuery& query,
                       const MeasureRule& mu_rule, Mode mode = Mode::fast) {
    query.validate();

    CoreReport report;
    report.family_kind = to_string(family.kind);
    report.family_params = family_param_string(family);
    report.n_min = family.n_min;
    report.n_max = family.n_max;
    report.query = query;
    report.validation = validate_family(family);

    Graph smallest = family.member(family.n_min);
    std::vector<NodeId> centers = query.centers;
    if (query.all_nodes_of_smallest) {
        centers.clear();
        for (NodeId v = 0; v < smallest.node_count(); ++v) centers.push_back(v);
    }
    for (NodeId c : centers) smallest.check_node(c); // stable-identity requirement

    for (NodeId c : centers)
        for (int r : query.radii) {
            CoreCell cell;
            cell.center = c;
            cell.radius = r;
            report.cells.push_back(std::move(cell));
        }

    for (int n = family.n_min; n <= family.n_max; ++n) {
        Graph g = family.member(n);
        NodeMeasure mu = mu_rule(g);
        if (n == family.n_min)
            report.sizes.clear();
        report.sizes.push_back(g.node_count());
        for (auto& cell : report.cells) {
            double prop = mode == Mode::oracle
                              ? ball_load<OraclePolicy>(g, mu, cell.center, cell.radius).proportion
                              : ball_load<FastPolicy>(g, mu, cell.center, cell.radius).proportion;
            cell.series.push_back({n, g.node_count(), prop});
        }
    }

    for (auto& cell : report.cells) {
        const auto len = cell.series.size();
        const auto window = std::min<std::size_t>(static_cast<std::size_t>(query.tail_window), len);
        double lim = 1.0;
        for (std::size_t i = len - window; i < len; ++i)
            lim = std::min(lim, cell.series[i].proportion);
        cell.liminf_estimate = lim;
        cell.verdicts.clear();
        for (double a : query.alphas) cell.verdicts.push_back(cell.liminf_estimate >= a);
    }
    return report;
}

// Nodes in the alpha-core according to the report, with the smallest
// queried radius that puts them there.
inline std::vector<std::pair<NodeId, int>> alpha_core_set(const CoreReport& report,
                                                          double alpha) {
    std::size_t a_idx = report.query.alphas.size();
    for (std::size_t i = 0; i < report.query.alphas.size(); ++i)
        if (report.query.alphas[i] == alpha) a_idx = i;
    if (a_idx == report.query.alphas.size())
        throw std::invalid_argument("alpha not covered by report");

    std::vector<std::pair<NodeId, int>> result;
    std::vector<NodeId> centers;
    for (const auto& cell : report.cells)
        if (centers.empty() || centers.back() != cell.center) centers.push_back(cell.center);
    for (NodeId c : centers) {
        std::optional<int> best;
        for (const auto& cell : report.cells)
            if (cell.center == c && cell.verdicts[a_idx] && !best) best = cell.radius;
        if (best) result.emplace_back(c, *best);
    }
    return result;
}

} // namespace hypercore
