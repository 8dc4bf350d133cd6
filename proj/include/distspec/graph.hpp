// Simple undirected graphs on 0..n-1 with bitset adjacency rows, plus the
// shortest-path machinery everything else is built on: BFS distance matrices,
// connectivity, diameter, complement.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace distspec {

class disconnected_error : public std::runtime_error {
public:
    disconnected_error(int from, int to)
        : std::runtime_error("graph is disconnected: no path from vertex " +
                             std::to_string(from) + " to vertex " + std::to_string(to)),
          from_(from), to_(to) {}
    int from() const noexcept { return from_; }
    int to() const noexcept { return to_; }

private:
    int from_;
    int to_;
};

// Undirected simple graph. Adjacency is stored one bitset row per vertex
// (ceil(n/64) words); for n <= 64 a row is a single word, which is the hot
// path for enumeration. No self-loops, always symmetric.
class Graph {
public:
    static constexpr int max_order = 2000;

    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > max_order)
            throw std::invalid_argument("graph order must be in [1, " +
                                        std::to_string(max_order) + "], got " + std::to_string(n));
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const noexcept { return n_; }
    int words_per_row() const noexcept { return words_; }

    bool has_edge(int u, int v) const {
        check_pair(u, v);
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check_pair(u, v);
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += __builtin_popcountll(bits_[static_cast<std::size_t>(v) * words_ + w]);
        return d;
    }

    std::size_t edge_count() const noexcept {
        std::size_t total = 0;
        for (std::uint64_t w : bits_) total += __builtin_popcountll(w);
        return total / 2;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u != v && has_edge(v, u)) out.push_back(u);
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    std::span<const std::uint64_t> row(int v) const {
        check_vertex(v);
        return {bits_.data() + static_cast<std::size_t>(v) * words_,
                static_cast<std::size_t>(words_)};
    }

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex index " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
    }
    void check_pair(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

inline Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

namespace detail {

// Single-source BFS into dist (preallocated, size n). Returns number reached.
inline int bfs_from(const Graph& g, int src, std::vector<int>& dist) {
    const int n = g.order();
    const int words = g.words_per_row();
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    frontier[src / 64] = std::uint64_t{1} << (src % 64);
    visited[src / 64] = frontier[src / 64];
    int reached = 1;
    int level = 0;
    for (;;) {
        ++level;
        std::fill(next.begin(), next.end(), 0);
        for (int w = 0; w < words; ++w) {
            std::uint64_t f = frontier[w];
            while (f) {
                int v = w * 64 + __builtin_ctzll(f);
                f &= f - 1;
                auto rowv = g.row(v);
                for (int k = 0; k < words; ++k) next[k] |= rowv[k];
            }
        }
        bool any = false;
        for (int w = 0; w < words; ++w) {
            next[w] &= ~visited[w];
            if (next[w]) any = true;
        }
        if (!any) break;
        for (int w = 0; w < words; ++w) {
            std::uint64_t f = next[w];
            visited[w] |= f;
            while (f) {
                int v = w * 64 + __builtin_ctzll(f);
                f &= f - 1;
                dist[v] = level;
                ++reached;
            }
        }
        frontier.swap(next);
    }
    return reached;
}

} // namespace detail

inline bool is_connected(const Graph& g) {
    std::vector<int> dist(g.order());
    return detail::bfs_from(g, 0, dist) == g.order();
}

// Matrix of pairwise shortest-path lengths of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {
        if (d_.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("distance matrix storage size mismatch");
    }

    int order() const noexcept { return n_; }
    int operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

    int max_entry() const noexcept {
        int m = 0;
        for (int v : d_) m = std::max(m, v);
        return m;
    }

    const std::vector<int>& data() const noexcept { return d_; }

private:
    int n_;
    std::vector<int> d_;
};

inline DistanceMatrix bfs_distances(const Graph& g) {
    const int n = g.order();
    std::vector<int> all(static_cast<std::size_t>(n) * n);
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        if (detail::bfs_from(g, s, dist) != n) {
            for (int v = 0; v < n; ++v)
                if (dist[v] < 0) throw disconnected_error(s, v);
        }
        std::copy(dist.begin(), dist.end(), all.begin() + static_cast<std::size_t>(s) * n);
    }
    return DistanceMatrix(n, std::move(all));
}

inline int diameter(const Graph& g) { return bfs_distances(g).max_entry(); }

} // namespace distspec
