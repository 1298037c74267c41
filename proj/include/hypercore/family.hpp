#pragma once

#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "hypercore/generators.hpp"
#include "hypercore/tessellation.hpp"

namespace hypercore {

enum class FamilyKind { branching_tree, lattice_box, tessellation_ball, cycle, path, file };

inline std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::branching_tree: return "tree";
        case FamilyKind::lattice_box: return "lattice";
        case FamilyKind::tessellation_ball: return "tessellation";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::path: return "path";
        default: return "file";
    }
}

// A parametric growing family X_{n_min} .. X_{n_max}. Members are
// generated independently per index; the generators guarantee that each
// member is an id-prefix of the next (cycles are the deliberate
// exception and fail validation).
struct FamilySpec {
    FamilyKind kind = FamilyKind::branching_tree;
    BranchingSequence ks = BranchingSequence::constant_k(2); // trees
    int p = 2;                                               // lattice dim / tiling p
    int q = 3;                                               // tiling q
    std::vector<std::string> files;                          // file kind, indexed from n_min
    int n_min = 1;
    int n_max = 1;
    std::size_t node_cap = kDefaultNodeCap;

    static FamilySpec tree(BranchingSequence ks, int n_min, int n_max) {
        FamilySpec s;
        s.kind = FamilyKind::branching_tree;
        s.ks = std::move(ks);
        s.set_range(n_min, n_max);
        return s;
    }

    static FamilySpec lattice(int p, int n_min, int n_max) {
        if (p < 1) throw std::invalid_argument("lattice dimension must be >= 1");
        FamilySpec s;
        s.kind = FamilyKind::lattice_box;
        s.p = p;
        s.set_range(n_min, n_max);
        return s;
    }

    static FamilySpec tessellation(int p, int q, int n_min, int n_max) {
        if (p < 3 || q < 3 || (p - 2) * (q - 2) <= 4)
            throw std::invalid_argument("{p,q} must satisfy (p-2)(q-2) > 4 with p,q >= 3");
        FamilySpec s;
        s.kind = FamilyKind::tessellation_ball;
        s.p = p;
        s.q = q;
        s.set_range(n_min, n_max);
        return s;
    }

    static FamilySpec path_family(int n_min, int n_max) {
        FamilySpec s;
        s.kind = FamilyKind::path;
        s.set_range(n_min, n_max);
        return s;
    }

    static FamilySpec cycle_family(int n_min, int n_max) {
        if (n_min < 3) throw std::invalid_argument("cycle family needs n >= 3");
        FamilySpec s;
        s.kind = FamilyKind::cycle;
        s.set_range(n_min, n_max);
        return s;
    }

    static FamilySpec from_files(std::vector<std::string> paths) {
        if (paths.empty()) throw std::invalid_argument("file family needs at least one file");
        FamilySpec s;
        s.kind = FamilyKind::file;
        s.files = std::move(paths);
        s.n_min = 1;
        s.n_max = static_cast<int>(s.files.size());
        return s;
    }

    void set_range(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("empty family range");
        n_min = lo;
        n_max = hi;
    }

    // X_n for any index in [n_min, n_max].
    Graph member(int n) const {
        if (n < n_min || n > n_max) throw std::invalid_argument("family index out of range");
        switch (kind) {
            case FamilyKind::branching_tree: return branching_tree(ks, n, node_cap);
            case FamilyKind::lattice_box: return lattice_box(p, n, node_cap);
            case FamilyKind::tessellation_ball: return tessellation_ball(p, q, n, node_cap);
            case FamilyKind::cycle: return cycle_graph(n);
            // A growing path is the 1-d box: ids radiate from the middle so
            // the family nests; node 0 is the middle.
            case FamilyKind::path: return lattice_box(1, n, node_cap);
            case FamilyKind::file: {
                const auto& path = files[static_cast<std::size_t>(n - n_min)];
                std::ifstream in(path);
                if (!in) throw std::runtime_error("cannot open " + path);
                return load_edge_list(in);
            }
        }
        throw std::logic_error("unreachable");
    }
};

// Rule producing the measure for each family member.
using MeasureRule = std::function<NodeMeasure(const Graph&)>;

inline MeasureRule uniform_measure_rule() {
    return [](const Graph& g) { return NodeMeasure::uniform_on(g.node_count()); };
}

} // namespace hypercore
