#pragma once

#include "hypercore/generators.hpp"
#include "hypercore/numeric.hpp"

namespace hypercore {

// Closed forms for geodesic traffic on branching trees under the uniform
// measure. All finite-depth quantities are exact; the asymptotic
// proportions are limits and come back as doubles.

// beta(l) = k_1 k_2 ... k_l, beta(0) = 1.
inline BigInt beta(const BranchingSequence& ks, int l) {
    if (l < 0) throw std::invalid_argument("depth must be >= 0");
    BigInt b = 1;
    for (int i = 1; i <= l; ++i) b *= ks.at(i);
    return b;
}

// Number of nodes of the depth-n tree: sum of the prefix products.
inline BigInt N_of(const BranchingSequence& ks, int n) {
    if (n < 0) throw std::invalid_argument("depth must be >= 0");
    BigInt total = 0, level = 1;
    for (int l = 0; l <= n; ++l) {
        total += level;
        if (l < n) level *= ks.at(l + 1);
    }
    return total;
}

// Exact root load: (k_1 - 1)/(2 k_1) * (N-1)^2 + (N-1). Removing the root
// leaves k_1 equal branches of (N-1)/k_1 nodes; the linear term is the
// root's own endpoint traffic.
inline Rational exact_root_load(const BranchingSequence& ks, int n) {
    if (n < 1) throw std::invalid_argument("depth must be >= 1");
    const BigInt k1 = ks.at(1);
    const BigInt N = N_of(ks, n);
    return Rational(k1 - 1, 2 * k1) * Rational((N - 1) * (N - 1)) + Rational(N - 1);
}

// Exact root proportion: 2 l_n(root) / (N (N-1)), which simplifies to
// (k_1 - 1)/k_1 * (N-1)/N + 2/N.
inline Rational exact_root_proportion(const BranchingSequence& ks, int n) {
    const BigInt N = N_of(ks, n);
    return exact_root_load(ks, n) * 2 / Rational(N * (N - 1));
}

// Strict descendants of a depth-l node in the depth-n tree:
// k_{l+1} + k_{l+1}k_{l+2} + ... + k_{l+1}...k_n.
inline BigInt descendant_count(const BranchingSequence& ks, int l, int n) {
    if (l < 0 || l > n) throw std::invalid_argument("need 0 <= l <= n");
    BigInt total = 0, prod = 1;
    for (int i = l + 1; i <= n; ++i) {
        prod *= ks.at(i);
        total += prod;
    }
    return total;
}

// Asymptotic proportion of traffic through a depth-l node:
// (1/beta(l)) * (2 - 1/beta(l) - 1/beta(l+1)).
inline double ap_tree(const BranchingSequence& ks, int l) {
    const double bl = static_cast<double>(beta(ks, l));
    const double bl1 = static_cast<double>(beta(ks, l + 1));
    return (1.0 / bl) * (2.0 - 1.0 / bl - 1.0 / bl1);
}

} // namespace hypercore
