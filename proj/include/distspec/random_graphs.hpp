// Seeded generators for the randomized campaigns: connected graphs with
// diameter > 3 (trees via Prufer sequences plus a few extra edges, filtered)
// and connected graphs with diameter exactly 3. Deterministic given
// (seed, trial index).
#pragma once

#include "distspec/graph.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace distspec {

// splitmix64: decorrelates (seed, stream) pairs into generator seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("random_tree requires n >= 2");
    Graph g(n);
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> prufer(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& p : prufer) p = pick(rng);
    std::vector<int> degree(n, 1);
    for (int p : prufer) ++degree[p];
    std::vector<bool> used(n, false);
    for (int p : prufer) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        g.add_edge(leaf, p);
        used[leaf] = true;
        --degree[p];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1 && !used[v]) (a < 0 ? a : b) = v;
    g.add_edge(a, b);
    return g;
}

// Connected graph on n_min..n_max vertices with diameter > 3: random tree
// plus a geometric number of random extra edges, rejection-filtered.
inline Graph random_connected_diam_gt3(int n_min, int n_max, std::mt19937_64& rng) {
    if (n_min < 5) throw std::invalid_argument("diameter > 3 requires at least 5 vertices");
    if (n_max < n_min) throw std::invalid_argument("empty order range");
    std::uniform_int_distribution<int> pick_n(n_min, n_max);
    std::geometric_distribution<int> extra(0.5);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const int n = pick_n(rng);
        Graph g = random_tree(n, rng);
        const int k = extra(rng);
        std::uniform_int_distribution<int> pick_v(0, n - 1);
        for (int e = 0; e < k; ++e) {
            const int u = pick_v(rng), v = pick_v(rng);
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
        if (diameter(g) > 3) return g;
    }
    throw std::runtime_error("failed to sample a diameter > 3 graph");
}

// Connected graph with diameter exactly 3: G(n, p) rejection sampling.
inline Graph random_connected_diam_eq3(int n_min, int n_max, std::mt19937_64& rng) {
    if (n_min < 4) throw std::invalid_argument("diameter 3 requires at least 4 vertices");
    if (n_max < n_min) throw std::invalid_argument("empty order range");
    std::uniform_int_distribution<int> pick_n(n_min, n_max);
    std::uniform_real_distribution<double> pick_p(0.2, 0.55);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const int n = pick_n(rng);
        const double p = pick_p(rng);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        if (!is_connected(g)) continue;
        if (diameter(g) == 3) return g;
    }
    throw std::runtime_error("failed to sample a diameter 3 graph");
}

} // namespace distspec
