#include "distspec/families.hpp"
#include "distspec/graph.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace distspec;

TEST(Graph, BasicInvariants) {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.degree(1), 2);
    EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
    EXPECT_THROW(g.has_edge(0, 4), std::out_of_range);
    g.remove_edge(0, 1);
    EXPECT_FALSE(g.has_edge(1, 0));
}

TEST(Graph, OrderLimits) {
    EXPECT_THROW(Graph(0), std::invalid_argument);
    EXPECT_THROW(Graph(2001), std::invalid_argument);
    EXPECT_NO_THROW(Graph(2000));
}

TEST(Graph, ComplementExamples) {
    // K4 -> empty graph
    Graph k4 = make_complete(4);
    EXPECT_EQ(complement(k4).edge_count(), 0u);
    // P4 {01,12,23} -> {02,03,13}
    Graph p4 = make_path(4);
    Graph c = complement(p4);
    EXPECT_TRUE(c.has_edge(0, 2));
    EXPECT_TRUE(c.has_edge(0, 3));
    EXPECT_TRUE(c.has_edge(1, 3));
    EXPECT_EQ(c.edge_count(), 3u);
}

TEST(Graph, ComplementInvolutionAndEdgePartition) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 70);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        const Graph gc = complement(g);
        EXPECT_EQ(g.edge_count() + gc.edge_count(),
                  static_cast<std::size_t>(n) * (n - 1) / 2);
        EXPECT_EQ(complement(gc), g);
    }
}

TEST(Graph, Connectivity) {
    EXPECT_TRUE(is_connected(make_path(5)));
    Graph g(5); // K4 plus isolated vertex
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(is_connected(complement(make_path(5))));
}

TEST(Graph, BfsDistanceExamples) {
    const DistanceMatrix d = bfs_distances(make_path(4));
    EXPECT_EQ(d(0, 3), 3);
    EXPECT_EQ(d(3, 0), 3);
    EXPECT_EQ(d(2, 2), 0);
    const DistanceMatrix k5 = bfs_distances(make_complete(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) EXPECT_EQ(k5(i, j), i == j ? 0 : 1);
}

TEST(Graph, BfsDisconnectedNamesUnreachablePair) {
    Graph g(3);
    g.add_edge(0, 1);
    try {
        bfs_distances(g);
        FAIL() << "expected disconnected_error";
    } catch (const disconnected_error& e) {
        EXPECT_EQ(e.to(), 2);
    }
}

TEST(Graph, DiameterExamples) {
    EXPECT_EQ(diameter(make_path(5)), 4);
    EXPECT_EQ(diameter(make_complete(7)), 1);
}

// Distance oracle: d(i,j) = least k with (A^k)_{ij} > 0, via boolean powers.
static std::vector<int> power_distances(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
        reach[i][i] = true;
        dist[static_cast<std::size_t>(i) * n + i] = 0;
    }
    for (int step = 1; step <= n; ++step) {
        std::vector<std::vector<bool>> next = reach;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!next[i][j]) {
                    for (int k = 0; k < n; ++k)
                        if (reach[i][k] && g.has_edge(k, j)) {
                            next[i][j] = true;
                            break;
                        }
                    if (next[i][j]) dist[static_cast<std::size_t>(i) * n + j] = step;
                }
        reach = std::move(next);
    }
    return dist;
}

TEST(Graph, BfsMatchesMatrixPowerOracle) {
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 200) {
        const int n = 2 + static_cast<int>(rng() % 6); // n <= 7
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 < 2) g.add_edge(u, v);
        if (!is_connected(g)) continue;
        ++checked;
        const DistanceMatrix d = bfs_distances(g);
        const auto oracle = power_distances(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                EXPECT_EQ(d(i, j), oracle[static_cast<std::size_t>(i) * n + j]);
    }
}

TEST(Graph, DistanceMatrixInvariants) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        Graph g = make_path(n);
        for (int e = 0; e < 2; ++e) {
            const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
        const DistanceMatrix d = bfs_distances(g);
        for (int i = 0; i < n; ++i) {
            EXPECT_EQ(d(i, i), 0);
            for (int j = 0; j < n; ++j) {
                EXPECT_EQ(d(i, j), d(j, i));
                if (i != j) EXPECT_GE(d(i, j), 1);
                for (int k = 0; k < n; ++k) EXPECT_LE(d(i, k), d(i, j) + d(j, k));
            }
        }
    }
}

TEST(Graph, DiameterGt3ImpliesComplementDiameterLe2) {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 100) {
        const int n = 5 + static_cast<int>(rng() % 4);
        Graph g = make_path(n);
        for (int e = 0; e < static_cast<int>(rng() % 3); ++e) {
            const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
        if (diameter(g) <= 3) continue;
        ++checked;
        const Graph gc = complement(g);
        ASSERT_TRUE(is_connected(gc));
        EXPECT_LE(diameter(gc), 2);
    }
}
