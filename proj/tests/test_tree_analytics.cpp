#include <catch2/catch_amalgamated.hpp>

#include "hypercore/generators.hpp"
#include "hypercore/rng.hpp"
#include "hypercore/traffic.hpp"
#include "hypercore/tree_analytics.hpp"

using namespace hypercore;

TEST_CASE("beta prefix products") {
    auto k3 = BranchingSequence::constant_k(3);
    CHECK(beta(k3, 0) == 1);
    CHECK(beta(k3, 2) == 9);
    auto ks = BranchingSequence::of({2, 3, 5});
    CHECK(beta(ks, 3) == 30);
}

TEST_CASE("node counts") {
    CHECK(N_of(BranchingSequence::constant_k(2), 3) == 15);
    CHECK(N_of(BranchingSequence::of({7, 7}), 0) == 1);
    CHECK(N_of(BranchingSequence::of({3, 2}), 2) == 10);
}

TEST_CASE("node count matches the generated tree for random sequences") {
    SplitMix64 rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> ks;
        const int depth = 1 + static_cast<int>(rng.bounded(4));
        for (int i = 0; i < depth; ++i) ks.push_back(1 + static_cast<int>(rng.bounded(4)));
        auto seq = BranchingSequence::of(ks);
        auto g = branching_tree(seq, depth);
        CHECK(BigInt(g.node_count()) == N_of(seq, depth));
    }
}

TEST_CASE("exact root load") {
    CHECK(exact_root_load(BranchingSequence::constant_k(2), 3) == Rational(63));
    // unary root: no cross traffic, only the N-1 endpoint flows
    auto unary = BranchingSequence::of({1, 3, 3});
    CHECK(exact_root_load(unary, 3) == Rational(N_of(unary, 3) - 1));
    CHECK(exact_root_load(BranchingSequence::constant_k(3), 2) == Rational(60));
}

TEST_CASE("exact root proportion") {
    CHECK(exact_root_proportion(BranchingSequence::constant_k(2), 3) == Rational(3, 5));
    auto unary = BranchingSequence::of({1, 2, 2});
    CHECK(exact_root_proportion(unary, 3) == Rational(2) / Rational(BigInt(N_of(unary, 3))));
    CHECK(exact_root_proportion(BranchingSequence::constant_k(3), 2) == Rational(10, 13));
}

TEST_CASE("descendant counts") {
    auto k2 = BranchingSequence::constant_k(2);
    CHECK(descendant_count(k2, 3, 3) == 0);
    CHECK(descendant_count(k2, 1, 3) == 6);
    // c_n(v)/N -> 1/beta(l)
    const double ratio = static_cast<double>(descendant_count(k2, 2, 20)) /
                         static_cast<double>(N_of(k2, 20));
    CHECK(std::fabs(ratio - 1.0 / static_cast<double>(beta(k2, 2))) < 1e-3);
}

TEST_CASE("asymptotic proportions") {
    auto k2 = BranchingSequence::constant_k(2);
    CHECK(ap_tree(k2, 0) == Catch::Approx(0.5).margin(1e-15));
    CHECK(ap_tree(k2, 1) == Catch::Approx(0.625).margin(1e-15));
    // monotone decay beyond depth 1
    double prev = ap_tree(k2, 1);
    for (int l = 2; l <= 10; ++l) {
        const double cur = ap_tree(k2, l);
        CHECK(cur < prev);
        prev = cur;
    }
    // ap(root) = 1 - 1/k for (k+1)-regular trees
    CHECK(ap_tree(BranchingSequence::constant_k(3), 0) == Catch::Approx(2.0 / 3.0));
    CHECK(ap_tree(BranchingSequence::constant_k(5), 0) == Catch::Approx(0.8));
}

TEST_CASE("root proportion approaches 1 - 1/k1") {
    auto k2 = BranchingSequence::constant_k(2);
    // N stays under 1e6 at depth 19
    const double p = static_cast<double>(exact_root_proportion(k2, 19));
    CHECK(std::fabs(p - 0.5) < 1e-3);
}

TEST_CASE("closed forms agree with the traffic engine, exactly") {
    for (int k : {2, 3}) {
        auto ks = BranchingSequence::constant_k(k);
        for (int n = 2; n <= 6; ++n) {
            auto g = branching_tree(ks, n);
            auto mu = NodeMeasure::uniform_on(g.node_count());
            auto loads = node_loads<OraclePolicy>(g, mu);
            REQUIRE(loads.loads[0] == exact_root_load(ks, n));
            REQUIRE(loads.total ==
                    Rational(BigInt(g.node_count()) * BigInt(g.node_count() - 1)) / 2);
        }
    }
}

TEST_CASE("finite-horizon proportions approach the asymptotic values") {
    // depth-l representative: the first node at depth l (same-depth nodes
    // are equivalent, subtree shape depends only on depth)
    auto k2 = BranchingSequence::constant_k(2);
    const int n = 12;
    auto g = branching_tree(k2, n);
    auto mu = NodeMeasure::uniform_on(g.node_count());
    auto loads = node_loads<FastPolicy>(g, mu);
    const auto& depth = *g.labels().depth;
    for (int l : {0, 1, 2}) {
        NodeId v = -1;
        for (NodeId i = 0; i < g.node_count(); ++i)
            if (depth[static_cast<std::size_t>(i)] == l) { v = i; break; }
        REQUIRE(v >= 0);
        const double p_n = loads.loads[static_cast<std::size_t>(v)] / loads.total;
        const double ap = ap_tree(k2, l);
        CHECK(std::fabs(p_n - ap) / ap < 0.05);
    }
}
