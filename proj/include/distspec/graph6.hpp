// graph6 short-form codec (orders 1..62) and a plain edge-list text format
// for anything larger.
//
// graph6 layout: one byte n+63 for the order, then the upper triangle of the
// adjacency matrix in column-major order -- pairs (0,1),(0,2),(1,2),(0,3),...
// -- packed big-endian into 6-bit groups, zero-padded to a multiple of 6,
// each group emitted as one ASCII byte group+63. An optional ">>graph6<<"
// header prefix is accepted on input.
#pragma once

#include "distspec/graph.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <string_view>

namespace distspec {

class graph6_parse_error : public std::runtime_error {
public:
    graph6_parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class unsupported_size_error : public std::runtime_error {
public:
    explicit unsupported_size_error(int n)
        : std::runtime_error("graph6 short form supports orders up to 62, got " +
                             std::to_string(n)) {}
};

inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (text.substr(0, header.size()) == header) base = header.size();
    if (base >= text.size()) throw graph6_parse_error("missing order byte", base);

    const unsigned char nb = static_cast<unsigned char>(text[base]);
    if (nb < 63 || nb > 126) throw graph6_parse_error("order byte out of range", base);
    if (nb == 126) throw graph6_parse_error("long-form order prefix is unsupported", base);
    const int n = nb - 63;
    if (n < 1) throw graph6_parse_error("order 0 is not supported", base);
    if (n > 62) throw graph6_parse_error("order exceeds short-form limit 62", base);

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - base - 1 < nbytes)
        throw graph6_parse_error("record truncated: expected " + std::to_string(nbytes) +
                                     " data bytes",
                                 text.size());
    if (text.size() - base - 1 > nbytes)
        throw graph6_parse_error("trailing characters after record", base + 1 + nbytes);

    Graph g(n);
    std::size_t bit = 0;
    int i = 0, j = 1;
    for (std::size_t k = 0; k < nbytes; ++k) {
        const std::size_t off = base + 1 + k;
        const unsigned char c = static_cast<unsigned char>(text[off]);
        if (c < 63 || c > 126) throw graph6_parse_error("data byte out of range", off);
        const unsigned group = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (group >> b) & 1u;
            if (bit < nbits) {
                if (set) g.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (set) {
                throw graph6_parse_error("nonzero padding bits", off);
            }
        }
    }
    return g;
}

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw unsupported_size_error(n);
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    unsigned group = 0;
    int fill = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++fill == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                fill = 0;
            }
        }
    }
    if (fill > 0) out.push_back(static_cast<char>((group << (6 - fill)) + 63));
    return out;
}

// Edge-list text: one "u v" pair per line, 0-indexed; blank lines and lines
// starting with '#' are skipped. The order is max vertex index + 1.
inline Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int maxv = -1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v))
            throw std::runtime_error("edge list: malformed line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u >= Graph::max_order || v >= Graph::max_order || u == v)
            throw std::runtime_error("edge list: bad endpoints on line " + std::to_string(lineno));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        maxv = std::max(maxv, static_cast<int>(std::max(u, v)));
    }
    if (maxv < 0) throw std::runtime_error("edge list: no edges");
    return Graph::from_edges(maxv + 1, edges);
}

inline std::string write_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

} // namespace distspec
