// Exhaustive scan machinery: labeled enumeration of connected diameter > 3
// graphs on 5..8 vertices over edge bitmasks, canonical forms by minimum
// graph6 string, and the extremal scan of lambda_n(D(g^c)) with deterministic
// parallel merging. Streamed graph6 input is supported for any order.
//
// The scan evaluates lambda_n(D(g^c)) as the least eigenvalue of J - I + A(g),
// valid because every candidate has diameter > 3.
#pragma once

#include "distspec/eigen.hpp"
#include "distspec/graph.hpp"
#include "distspec/graph6.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <istream>
#include <string>
#include <thread>
#include <vector>

namespace distspec {

namespace detail {

// Whole adjacency matrix of an order <= 8 graph in one word: bit (8*v + u)
// set iff v ~ u.
struct Adj8 {
    std::uint64_t rows;
    int n;

    std::uint64_t row(int v) const { return (rows >> (8 * v)) & 0xFFu; }

    bool all_degrees_positive() const {
        for (int v = 0; v < n; ++v)
            if (row(v) == 0) return false;
        return true;
    }

    std::uint64_t closure_from(int src) const {
        std::uint64_t reach = std::uint64_t{1} << src;
        for (;;) {
            std::uint64_t next = reach;
            std::uint64_t f = reach;
            while (f) {
                const int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= row(v);
            }
            if (next == reach) return reach;
            reach = next;
        }
    }

    bool connected() const {
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        return closure_from(0) == full;
    }

    // True iff some pair of vertices is at distance >= 4.
    bool diameter_gt3() const {
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (int v = 0; v < n; ++v) {
            std::uint64_t reach = (std::uint64_t{1} << v) | row(v);
            for (int step = 0; step < 2; ++step) {
                std::uint64_t next = reach, f = reach;
                while (f) {
                    const int u = __builtin_ctzll(f);
                    f &= f - 1;
                    next |= row(u);
                }
                reach = next;
            }
            if (reach != full) return true; // v misses someone within 3 steps
        }
        return false;
    }
};

// Edge bit k corresponds to the graph6 pair order (0,1),(0,2),(1,2),(0,3),...
inline std::vector<std::pair<int, int>> edge_bit_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    return pairs;
}

// part[byte][value] = adjacency-word contribution of that mask byte.
inline std::vector<std::array<std::uint64_t, 256>> mask_byte_tables(int n) {
    const auto pairs = edge_bit_pairs(n);
    const int nbytes = (static_cast<int>(pairs.size()) + 7) / 8;
    std::vector<std::array<std::uint64_t, 256>> tables(nbytes);
    for (int b = 0; b < nbytes; ++b)
        for (int val = 0; val < 256; ++val) {
            std::uint64_t w = 0;
            for (int bit = 0; bit < 8; ++bit) {
                const std::size_t k = static_cast<std::size_t>(b) * 8 + bit;
                if (k >= pairs.size() || !((val >> bit) & 1)) continue;
                const auto [i, j] = pairs[k];
                w |= std::uint64_t{1} << (8 * i + j);
                w |= std::uint64_t{1} << (8 * j + i);
            }
            tables[b][val] = w;
        }
    return tables;
}

inline Graph graph_from_mask(int n, std::uint64_t mask,
                             const std::vector<std::pair<int, int>>& pairs) {
    Graph g(n);
    std::uint64_t m = mask;
    while (m) {
        const int k = __builtin_ctzll(m);
        m &= m - 1;
        g.add_edge(pairs[k].first, pairs[k].second);
    }
    return g;
}

inline SymMatrix jia_from_adj8(const Adj8& a) {
    SymMatrix m(a.n);
    for (int i = 0; i < a.n; ++i) {
        const std::uint64_t ri = a.row(i);
        for (int j = 0; j < a.n; ++j)
            m(i, j) = (i == j) ? 0.0 : (((ri >> j) & 1) ? 2.0 : 1.0);
    }
    return m;
}

} // namespace detail

// Visits every labeled simple connected graph with diameter > 3 on n vertices
// exactly once, ascending by edge bitmask. Returns the visit count.
template <class Sink>
std::uint64_t enumerate_filtered(int n, Sink&& sink) {
    if (n < 5 || n > 8)
        throw std::invalid_argument("built-in enumeration supports 5 <= n <= 8; "
                                    "use a graph6 stream for other orders");
    const auto pairs = detail::edge_bit_pairs(n);
    const auto tables = detail::mask_byte_tables(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::uint64_t rows = 0;
        for (std::size_t b = 0; b < tables.size(); ++b) rows |= tables[b][(mask >> (8 * b)) & 0xFF];
        detail::Adj8 adj{rows, n};
        if (!adj.all_degrees_positive()) continue;
        if (!adj.connected()) continue;
        if (!adj.diameter_gt3()) continue;
        ++count;
        sink(detail::graph_from_mask(n, mask, pairs));
    }
    return count;
}

// Minimum graph6 string over all vertex relabelings; equal strings iff
// isomorphic. Backtracking over positions with bit-prefix pruning.
inline std::string canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw std::invalid_argument("canonical_form supports orders up to 10");
    if (n == 1) return write_graph6(g);

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::uint8_t> best(nbits, 2); // 2 = "unset", larger than any bit
    std::vector<std::uint8_t> cur(nbits, 0);
    std::vector<int> perm(n, -1); // perm[pos] = original vertex at position pos
    std::vector<bool> used(n, false);

    // Column j of the bit string is fully determined once positions 0..j are
    // assigned; bits_before[j] = number of bits in columns < j.
    auto bits_before = [](int j) { return static_cast<std::size_t>(j) * (j - 1) / 2; };

    auto dfs = [&](auto&& self, int pos, bool strictly_less) -> void {
        if (pos == n) {
            if (strictly_less) best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            // write column `pos`
            const std::size_t base = bits_before(pos);
            bool less = strictly_less, greater = false;
            for (int i = 0; i < pos; ++i) {
                const std::uint8_t bit = g.has_edge(perm[i], v) ? 1 : 0;
                cur[base + i] = bit;
                if (!less) {
                    if (bit < best[base + i])
                        less = true;
                    else if (bit > best[base + i]) {
                        greater = true;
                        break;
                    }
                }
            }
            if (greater) continue;
            used[v] = true;
            perm[pos] = v;
            self(self, pos + 1, less);
            used[v] = false;
        }
    };
    dfs(dfs, 0, false);

    // Pack the winning bitstring as graph6.
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    unsigned group = 0;
    int fill = 0;
    for (std::size_t k = 0; k < nbits; ++k) {
        group = (group << 1) | best[k];
        if (++fill == 6) {
            out.push_back(static_cast<char>(group + 63));
            group = 0;
            fill = 0;
        }
    }
    if (fill > 0) out.push_back(static_cast<char>((group << (6 - fill)) + 63));
    return out;
}

struct ScanEntry {
    double lambda;
    std::string graph6;
};

struct ScanReport {
    int n = 0;
    std::uint64_t candidates_examined = 0;
    double max_lambda = 0;
    std::vector<std::string> maximizers; // canonical graph6 of the tie set, deduped, sorted
    std::size_t tie_count = 0;           // labeled graphs within tie_tol of the max
    std::vector<ScanEntry> ranking;      // top-k by (lambda desc, graph6 asc)
    double runner_up_lambda = 0;         // best value strictly below max - tie_tol
    bool has_runner_up = false;
    double tie_tol = 1e-9;
    double residual_budget = 0; // max eigensolver residual bound over all candidates
    double runtime_seconds = 0;
    int workers = 1;
    bool canonicalized = true; // false when orders exceed the canonical_form cap
};

namespace detail {

struct WorkerAccum {
    double max_lambda = -1e300;
    std::vector<std::pair<double, std::uint64_t>> loose_ties; // lambda >= max - 2*tol
    double runner_up = -1e300;                                // best below max - 2*tol
    bool has_runner_up = false;
    std::vector<std::pair<double, std::uint64_t>> topk;
    std::uint64_t count = 0;
    double residual = 0;

    void note_runner(double lam) {
        if (!has_runner_up || lam > runner_up) {
            runner_up = lam;
            has_runner_up = true;
        }
    }

    void add(double lam, std::uint64_t mask, double tie_tol, std::size_t k) {
        ++count;
        if (lam > max_lambda) {
            max_lambda = lam;
            std::vector<std::pair<double, std::uint64_t>> keep;
            for (auto& e : loose_ties) {
                if (e.first >= max_lambda - 2 * tie_tol)
                    keep.push_back(e);
                else
                    note_runner(e.first);
            }
            loose_ties = std::move(keep);
        }
        if (lam >= max_lambda - 2 * tie_tol) {
            if (loose_ties.size() < 200000) loose_ties.emplace_back(lam, mask);
        } else {
            note_runner(lam);
        }
        if (k > 0) {
            topk.emplace_back(lam, mask);
            if (topk.size() >= 4 * k + 16) shrink_topk(k);
        }
    }

    void shrink_topk(std::size_t k) {
        std::sort(topk.begin(), topk.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        if (topk.size() > k) topk.resize(k);
    }
};

} // namespace detail

// Exhaustive extremal scan at order n (5..8): tracks the maximum of
// lambda_n(D(g^c)) over all connected diameter > 3 labeled graphs, the tie
// set within tie_tol, and the top-k ranking. The mask space is split by
// high-order edge bits into chunks owned by workers; the merge is
// commutative, so results are identical for any worker count.
inline ScanReport extremal_scan(int n, std::size_t top_k = 10, double tie_tol = 1e-9,
                                int workers = 1) {
    if (n < 5 || n > 8)
        throw std::invalid_argument("built-in enumeration supports 5 <= n <= 8");
    if (workers < 1) workers = 1;
    const auto start_time = std::chrono::steady_clock::now();

    const auto pairs = detail::edge_bit_pairs(n);
    const auto tables = detail::mask_byte_tables(n);
    const int nbits = static_cast<int>(pairs.size());
    const std::uint64_t total = std::uint64_t{1} << nbits;

    const int chunk_bits = std::max(0, nbits - 8);
    const std::uint64_t chunk_size = std::uint64_t{1} << chunk_bits;
    const std::uint64_t nchunks = total / chunk_size;

    std::vector<detail::WorkerAccum> accums(workers);
    auto run_worker = [&](int w) {
        detail::WorkerAccum& acc = accums[w];
        for (std::uint64_t c = w; c < nchunks; c += workers) {
            const std::uint64_t lo = c * chunk_size, hi = lo + chunk_size;
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                std::uint64_t rows = 0;
                for (std::size_t b = 0; b < tables.size(); ++b)
                    rows |= tables[b][(mask >> (8 * b)) & 0xFF];
                detail::Adj8 adj{rows, n};
                if (!adj.all_degrees_positive()) continue;
                if (!adj.connected()) continue;
                if (!adj.diameter_gt3()) continue;
                const SymMatrix m = detail::jia_from_adj8(adj);
                const double lam = symmetric_least_value(m);
                acc.residual = std::max(acc.residual, 1e-13 * m.frobenius());
                acc.add(lam, mask, tie_tol, top_k);
            }
        }
        acc.shrink_topk(top_k);
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
        for (auto& t : threads) t.join();
    }

    // Deterministic merge: max / union / sorted-truncate are order-free.
    ScanReport rep;
    rep.n = n;
    rep.tie_tol = tie_tol;
    rep.workers = workers;
    double gmax = -1e300;
    for (const auto& acc : accums) {
        rep.candidates_examined += acc.count;
        rep.residual_budget = std::max(rep.residual_budget, acc.residual);
        if (acc.count > 0) gmax = std::max(gmax, acc.max_lambda);
    }
    if (rep.candidates_examined == 0) return rep;
    rep.max_lambda = gmax;

    std::vector<std::pair<double, std::uint64_t>> ties;
    double runner = -1e300;
    bool has_runner = false;
    for (const auto& acc : accums) {
        if (acc.count == 0) continue;
        for (const auto& e : acc.loose_ties) {
            if (e.first >= gmax - tie_tol)
                ties.push_back(e);
            else if (!has_runner || e.first > runner) {
                runner = e.first;
                has_runner = true;
            }
        }
        if (acc.has_runner_up && (!has_runner || acc.runner_up > runner)) {
            runner = acc.runner_up;
            has_runner = true;
        }
        if (acc.max_lambda < gmax - tie_tol && (!has_runner || acc.max_lambda > runner)) {
            runner = acc.max_lambda;
            has_runner = true;
        }
    }
    rep.runner_up_lambda = runner;
    rep.has_runner_up = has_runner;
    rep.tie_count = ties.size();

    std::vector<std::string> canon;
    for (const auto& [lam, mask] : ties)
        canon.push_back(canonical_form(detail::graph_from_mask(n, mask, pairs)));
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    rep.maximizers = std::move(canon);

    std::vector<std::pair<double, std::uint64_t>> topk;
    for (const auto& acc : accums) topk.insert(topk.end(), acc.topk.begin(), acc.topk.end());
    std::sort(topk.begin(), topk.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    if (topk.size() > top_k) topk.resize(top_k);
    for (const auto& [lam, mask] : topk)
        rep.ranking.push_back({lam, write_graph6(detail::graph_from_mask(n, mask, pairs))});

    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return rep;
}

// Same scan over a graph6 stream (one record per line); the connectivity and
// diameter filters are re-applied to every streamed graph. All records must
// have the given order.
inline ScanReport extremal_scan_stream(std::istream& in, int n, std::size_t top_k = 10,
                                       double tie_tol = 1e-9) {
    const auto start_time = std::chrono::steady_clock::now();
    ScanReport rep;
    rep.n = n;
    rep.tie_tol = tie_tol;
    rep.canonicalized = n <= 10;

    std::vector<std::pair<double, std::string>> ties, topk;
    double gmax = -1e300, runner = -1e300;
    bool has_runner = false;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        const Graph g = parse_graph6(line);
        if (g.order() != n)
            throw std::invalid_argument("streamed graph has order " + std::to_string(g.order()) +
                                        ", expected " + std::to_string(n));
        if (!is_connected(g)) continue;
        if (diameter(g) <= 3) continue;
        const SymMatrix m = j_minus_i_plus_a(g);
        const double lam = symmetric_least_value(m);
        rep.residual_budget = std::max(rep.residual_budget, 1e-13 * m.frobenius());
        ++rep.candidates_examined;
        const std::string g6 = write_graph6(g);
        if (lam > gmax) gmax = lam;
        ties.emplace_back(lam, g6);
        topk.emplace_back(lam, g6);
        if (topk.size() > 4 * top_k + 16) {
            std::sort(topk.begin(), topk.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
            });
            topk.resize(top_k);
        }
        if (ties.size() > 400000) {
            std::vector<std::pair<double, std::string>> keep;
            for (auto& e : ties)
                if (e.first >= gmax - 2 * tie_tol)
                    keep.push_back(std::move(e));
                else if (!has_runner || e.first > runner) {
                    runner = e.first;
                    has_runner = true;
                }
            ties = std::move(keep);
        }
    }
    if (rep.candidates_examined == 0) return rep;
    rep.max_lambda = gmax;
    std::vector<std::string> canon;
    for (auto& [lam, g6] : ties) {
        if (lam >= gmax - tie_tol) {
            ++rep.tie_count;
            canon.push_back(rep.canonicalized ? canonical_form(parse_graph6(g6)) : g6);
        } else if (!has_runner || lam > runner) {
            runner = lam;
            has_runner = true;
        }
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    rep.maximizers = std::move(canon);
    rep.runner_up_lambda = runner;
    rep.has_runner_up = has_runner;
    std::sort(topk.begin(), topk.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    if (topk.size() > top_k) topk.resize(top_k);
    for (auto& [lam, g6] : topk) rep.ranking.push_back({lam, g6});
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return rep;
}

} // namespace distspec
