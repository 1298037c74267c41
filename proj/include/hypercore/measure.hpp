#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "hypercore/graph.hpp"

namespace hypercore {

// Non-negative node weights with positive total mass. Weights are stored
// as doubles; oracle-mode computations convert them exactly (every double
// is a dyadic rational).
struct NodeMeasure {
    std::vector<double> weights;
    bool uniform = false;

    static NodeMeasure uniform_on(NodeId n) {
        NodeMeasure m;
        m.weights.assign(static_cast<std::size_t>(n), 1.0);
        m.uniform = true;
        return m;
    }

    static NodeMeasure of(std::vector<double> w) {
        NodeMeasure m;
        m.weights = std::move(w);
        m.validate();
        return m;
    }

    void validate() const {
        double total = 0.0;
        for (double x : weights) {
            if (x < 0.0) throw std::invalid_argument("negative measure weight");
            total += x;
        }
        if (!(total > 0.0)) throw std::invalid_argument("measure has zero total mass");
    }

    double total_mass() const {
        return std::accumulate(weights.begin(), weights.end(), 0.0);
    }

    std::size_t size() const { return weights.size(); }
};

} // namespace hypercore
