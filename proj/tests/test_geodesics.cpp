#include <catch2/catch_amalgamated.hpp>

#include "hypercore/generators.hpp"
#include "hypercore/geodesics.hpp"
#include "hypercore/graph.hpp"
#include "oracles/brute_force.hpp"
#include "oracles/random_graphs.hpp"

using namespace hypercore;

TEST_CASE("graph construction enforces simplicity") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);

    Graph g(3, {{1, 0}, {1, 2}});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbors(1) == std::vector<NodeId>{0, 2});
    CHECK(g.has_edge(2, 1));
}

TEST_CASE("connectivity check and errors") {
    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(disconnected.is_connected());
    CHECK_THROWS_AS(bfs_geodesics<double>(disconnected, 0), std::runtime_error);
    CHECK_THROWS_AS(bfs_geodesics<double>(path_graph(3), 7), std::invalid_argument);
}

TEST_CASE("bfs on the 3-node path") {
    auto g = path_graph(3);
    auto gd = bfs_geodesics<double>(g, 0);
    CHECK(gd.dist == std::vector<int>{0, 1, 2});
    CHECK(gd.sigma == std::vector<double>{1, 1, 1});
    CHECK(gd.preds[2] == std::vector<NodeId>{1});
}

TEST_CASE("two geodesics around a 4-cycle") {
    auto g = cycle_graph(4);
    auto gd = bfs_geodesics<double>(g, 0);
    CHECK(gd.dist[2] == 2);
    CHECK(gd.sigma[2] == 2.0);
}

TEST_CASE("grid corner-to-corner geodesic count matches enumeration") {
    auto g = lattice_box(2, 2); // 5x5 box
    // corner (2,2): look it up through the labels
    NodeId corner = -1;
    const auto& coords = *g.labels().coords;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (coords[static_cast<std::size_t>(v)] == std::vector<int>{2, 2}) corner = v;
    REQUIRE(corner >= 0);
    NodeId opposite = -1;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (coords[static_cast<std::size_t>(v)] == std::vector<int>{-2, -2}) opposite = v;
    REQUIRE(opposite >= 0);

    auto gd = bfs_geodesics<BigInt>(g, corner);
    auto paths = oracle::all_shortest_paths(g, corner, opposite);
    CHECK(gd.dist[static_cast<std::size_t>(opposite)] == 8);
    CHECK(gd.sigma[static_cast<std::size_t>(opposite)] == BigInt(paths.size()));
    CHECK(gd.sigma[static_cast<std::size_t>(opposite)] == 70); // C(8,4)
}

TEST_CASE("sigma is the sum over predecessors, exhaustively") {
    for (std::uint64_t seed : {11u, 22u, 33u}) {
        auto g = oracle::random_connected_graph(60, seed);
        for (NodeId s = 0; s < g.node_count(); s += 7) {
            auto gd = bfs_geodesics<BigInt>(g, s);
            for (NodeId v = 0; v < g.node_count(); ++v) {
                if (v == s) {
                    CHECK(gd.sigma[static_cast<std::size_t>(v)] == 1);
                    continue;
                }
                BigInt total = 0;
                for (NodeId u : gd.preds[static_cast<std::size_t>(v)]) {
                    CHECK(gd.dist[static_cast<std::size_t>(u)] ==
                          gd.dist[static_cast<std::size_t>(v)] - 1);
                    total += gd.sigma[static_cast<std::size_t>(u)];
                }
                CHECK(gd.sigma[static_cast<std::size_t>(v)] == total);
            }
        }
    }
}

TEST_CASE("sigma consistency holds on a 1000-node graph") {
    auto g = oracle::random_connected_graph(1000, 99, 0.004);
    auto gd = bfs_geodesics<BigInt>(g, 0);
    for (NodeId v = 1; v < g.node_count(); ++v) {
        BigInt total = 0;
        for (NodeId u : gd.preds[static_cast<std::size_t>(v)])
            total += gd.sigma[static_cast<std::size_t>(u)];
        REQUIRE(gd.sigma[static_cast<std::size_t>(v)] == total);
    }
}

TEST_CASE("bfs order is sorted by distance") {
    auto g = oracle::random_connected_graph(40, 5);
    auto gd = bfs_geodesics<double>(g, 3);
    for (std::size_t i = 1; i < gd.order.size(); ++i)
        CHECK(gd.dist[static_cast<std::size_t>(gd.order[i - 1])] <=
              gd.dist[static_cast<std::size_t>(gd.order[i])]);
}
