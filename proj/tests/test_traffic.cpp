#include <catch2/catch_amalgamated.hpp>

#include "hypercore/core_detector.hpp"
#include "hypercore/family.hpp"
#include "hypercore/generators.hpp"
#include "hypercore/traffic.hpp"
#include "hypercore/tree_analytics.hpp"
#include "oracles/brute_force.hpp"
#include "oracles/random_graphs.hpp"

using namespace hypercore;

TEST_CASE("total traffic") {
    CHECK(total_traffic<OraclePolicy>(NodeMeasure::uniform_on(15)) == Rational(105));
    CHECK(total_traffic<OraclePolicy>(NodeMeasure::uniform_on(1)) == Rational(0));
    CHECK(total_traffic<OraclePolicy>(NodeMeasure::of({1, 2, 3})) == Rational(11));
    CHECK(total_traffic<FastPolicy>(NodeMeasure::uniform_on(15)) == 105.0);
    CHECK_THROWS_AS(total_traffic<FastPolicy>(NodeMeasure{{0.0, 0.0}, false}),
                    std::invalid_argument);
}

TEST_CASE("binary tree root load is 63 at depth 3") {
    auto g = branching_tree(BranchingSequence::constant_k(2), 3);
    auto mu = NodeMeasure::uniform_on(g.node_count());
    auto exact = node_loads<OraclePolicy>(g, mu);
    CHECK(exact.loads[0] == Rational(63));
    auto fast = node_loads<FastPolicy>(g, mu);
    CHECK(fast.loads[0] == 63.0);
    CHECK(fast.loads[0] / fast.total == Catch::Approx(0.6).margin(1e-12));
}

TEST_CASE("middle of a 3-path carries all three pairs") {
    auto g = path_graph(3);
    auto loads = node_loads<OraclePolicy>(g, NodeMeasure::uniform_on(3));
    CHECK(loads.loads[1] == Rational(3));
    CHECK(loads.loads[0] == Rational(2));
}

TEST_CASE("engine equals brute-force path enumeration on random graphs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const int n = 5 + static_cast<int>(seed % 4) * 5;
        auto g = oracle::random_connected_graph(n, seed * 77 + 1);
        auto mu = NodeMeasure::uniform_on(g.node_count());
        auto engine = node_loads<OraclePolicy>(g, mu);
        auto brute = oracle::brute_node_loads(g, mu);
        for (NodeId v = 0; v < g.node_count(); ++v)
            REQUIRE(engine.loads[static_cast<std::size_t>(v)] ==
                    brute[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("engine matches brute force under a non-uniform measure") {
    auto g = oracle::random_connected_graph(12, 2024);
    std::vector<double> w;
    for (NodeId v = 0; v < g.node_count(); ++v) w.push_back(1.0 + (v % 3));
    auto mu = NodeMeasure::of(w);
    auto engine = node_loads<OraclePolicy>(g, mu);
    auto brute = oracle::brute_node_loads(g, mu);
    for (NodeId v = 0; v < g.node_count(); ++v)
        REQUIRE(engine.loads[static_cast<std::size_t>(v)] == brute[static_cast<std::size_t>(v)]);
}

TEST_CASE("conservation identity") {
    SECTION("exact in oracle mode") {
        for (std::uint64_t seed : {3u, 14u}) {
            auto g = oracle::random_connected_graph(18, seed);
            auto mu = NodeMeasure::of([&] {
                std::vector<double> w;
                for (NodeId v = 0; v < g.node_count(); ++v) w.push_back(0.5 + (v % 4));
                return w;
            }());
            auto loads = node_loads<OraclePolicy>(g, mu);
            Rational sum = 0;
            for (const auto& x : loads.loads) sum += x;
            REQUIRE(sum == conservation_target<OraclePolicy>(g, mu));
        }
    }
    SECTION("1e-9 relative in fast mode, larger graphs") {
        auto tree = branching_tree(BranchingSequence::constant_k(2), 9); // 1023 nodes
        auto box = lattice_box(2, 10);                                   // 441 nodes
        for (const Graph* g : {&tree, &box}) {
            auto mu = NodeMeasure::uniform_on(g->node_count());
            auto loads = node_loads<FastPolicy>(*g, mu);
            double sum = 0;
            for (double x : loads.loads) sum += x;
            const double target = conservation_target<FastPolicy>(*g, mu);
            REQUIRE(std::fabs(sum - target) / target < 1e-9);
        }
    }
}

TEST_CASE("every pair touching a node passes through it") {
    auto g = oracle::random_connected_graph(30, 8);
    auto mu = NodeMeasure::of([&] {
        std::vector<double> w;
        for (NodeId v = 0; v < g.node_count(); ++v) w.push_back(1.0 + (v % 2));
        return w;
    }());
    auto loads = node_loads<FastPolicy>(g, mu);
    const double mass = mu.total_mass();
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const double w = mu.weights[static_cast<std::size_t>(v)];
        CHECK(loads.loads[static_cast<std::size_t>(v)] >= w * (mass - w) - 1e-9);
        CHECK(loads.loads[static_cast<std::size_t>(v)] <= loads.total + 1e-9);
    }
}

TEST_CASE("scaling the measure scales loads quadratically") {
    auto g = oracle::random_connected_graph(20, 5);
    std::vector<double> w;
    for (NodeId v = 0; v < g.node_count(); ++v) w.push_back(1.0 + 0.25 * (v % 5));
    auto base = node_loads<FastPolicy>(g, NodeMeasure::of(w));
    const double c = 3.5;
    for (auto& x : w) x *= c;
    auto scaled = node_loads<FastPolicy>(g, NodeMeasure::of(w));
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto vi = static_cast<std::size_t>(v);
        CHECK(scaled.loads[vi] == Catch::Approx(c * c * base.loads[vi]).epsilon(1e-12));
        CHECK(scaled.loads[vi] / scaled.total ==
              Catch::Approx(base.loads[vi] / base.total).epsilon(1e-12));
    }
}

TEST_CASE("fast mode tracks oracle mode to 1e-9 relative") {
    auto g = oracle::random_connected_graph(40, 31);
    auto mu = NodeMeasure::uniform_on(g.node_count());
    auto fast = node_loads<FastPolicy>(g, mu);
    auto exact = node_loads<OraclePolicy>(g, mu);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const double e = static_cast<double>(exact.loads[static_cast<std::size_t>(v)]);
        CHECK(std::fabs(fast.loads[static_cast<std::size_t>(v)] - e) / e < 1e-9);
    }
}

TEST_CASE("worker count never changes the result") {
    auto g = branching_tree(BranchingSequence::constant_k(3), 5);
    auto mu = NodeMeasure::uniform_on(g.node_count());
    auto one = node_loads<FastPolicy>(g, mu, 1);
    auto four = node_loads<FastPolicy>(g, mu, 4);
    REQUIRE(one.loads == four.loads);
}

TEST_CASE("ball load: depth-1 ball of the 7-node binary tree catches every pair") {
    auto g = branching_tree(BranchingSequence::constant_k(2), 2);
    auto mu = NodeMeasure::uniform_on(g.node_count());
    auto res = ball_load<OraclePolicy>(g, mu, 0, 1);
    CHECK(res.load == Rational(21));
    CHECK(res.proportion == 1.0);
}

TEST_CASE("ball load covers everything at large radius") {
    auto g = oracle::random_connected_graph(15, 4);
    auto mu = NodeMeasure::uniform_on(g.node_count());
    auto res = ball_load<FastPolicy>(g, mu, 2, 50);
    CHECK(res.proportion == 1.0);
}

TEST_CASE("radius-zero ball equals the node load, exactly") {
    auto g = oracle::random_connected_graph(17, 10);
    auto mu = NodeMeasure::uniform_on(g.node_count());
    auto loads = node_loads<OraclePolicy>(g, mu);
    for (NodeId v = 0; v < g.node_count(); v += 3) {
        auto res = ball_load<OraclePolicy>(g, mu, v, 0);
        REQUIRE(res.load == loads.loads[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("ball load equals brute-force enumeration") {
    for (std::uint64_t seed : {6u, 9u, 21u}) {
        auto g = oracle::random_connected_graph(14, seed);
        auto mu = NodeMeasure::uniform_on(g.node_count());
        for (int r : {0, 1, 2}) {
            auto engine = ball_load<OraclePolicy>(g, mu, 1, r);
            REQUIRE(engine.load == oracle::brute_ball_load(g, mu, 1, r));
        }
    }
}

TEST_CASE("proportion series on the binary tree reproduces the closed form") {
    auto family = FamilySpec::tree(BranchingSequence::constant_k(2), 1, 8);
    auto series = proportion_series(family, uniform_measure_rule(), 0, 0);
    REQUIRE(series.size() == 8);
    for (const auto& pt : series) {
        const double expect =
            static_cast<double>(exact_root_proportion(BranchingSequence::constant_k(2), pt.n));
        CHECK(pt.proportion == Catch::Approx(expect).margin(1e-12));
        CHECK(pt.N == static_cast<std::int64_t>(
                          static_cast<long long>(N_of(BranchingSequence::constant_k(2), pt.n))));
    }
}

TEST_CASE("path-family middle proportions approach one half") {
    // closed form (n+2)/(2n+1), cross-checked by brute force on small paths
    auto family = FamilySpec::path_family(1, 6);
    auto series = proportion_series(family, uniform_measure_rule(), 0, 0, Mode::oracle);
    for (const auto& pt : series) {
        auto g = family.member(pt.n);
        auto mu = NodeMeasure::uniform_on(g.node_count());
        const Rational brute =
            oracle::brute_ball_load(g, mu, 0, 0) / oracle::brute_total(mu);
        CHECK(pt.proportion == Catch::Approx(static_cast<double>(brute)).margin(1e-12));
        CHECK(static_cast<double>(brute) ==
              Catch::Approx((pt.n + 2.0) / (2.0 * pt.n + 1.0)).margin(1e-12));
    }
}

TEST_CASE("plane lattice proportions decrease") {
    auto family = FamilySpec::lattice(2, 3, 10);
    auto series = proportion_series(family, uniform_measure_rule(), 0, 1);
    for (std::size_t i = 1; i < series.size(); ++i)
        CHECK(series[i].proportion < series[i - 1].proportion);
}

TEST_CASE("input validation") {
    auto g = path_graph(4);
    auto mu = NodeMeasure::uniform_on(4);
    CHECK_THROWS_AS(ball_load<FastPolicy>(g, mu, 0, -1), std::invalid_argument);
    CHECK_THROWS_AS(ball_load<FastPolicy>(g, mu, 9, 1), std::invalid_argument);
    CHECK_THROWS_AS(node_loads<FastPolicy>(g, NodeMeasure::uniform_on(3)),
                    std::invalid_argument);
    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(node_loads<FastPolicy>(disconnected, mu), std::runtime_error);
}
