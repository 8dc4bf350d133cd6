// Constructors for the named graph families the toolkit studies, with role
// labels for the distinguished vertices. Vertex layout convention: clique
// vertices first (the deleted-edge endpoints leading), appended/pendant
// vertices last, so quotient partition indices are deterministic.
#pragma once

#include "distspec/graph.hpp"

#include <map>
#include <string>

namespace distspec {

enum class FamilyKind { k_prime, k_double_prime, k_ab, tree_t, path, complete };

inline const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::k_prime: return "kprime";
        case FamilyKind::k_double_prime: return "kdprime";
        case FamilyKind::k_ab: return "kab";
        case FamilyKind::tree_t: return "treeT";
        case FamilyKind::path: return "path";
        case FamilyKind::complete: return "complete";
    }
    return "?";
}

struct FamilyGraph {
    Graph graph;
    FamilyKind kind;
    std::map<std::string, int> roles;
    int a = 0, b = 0; // split parameters (k_ab only)
};

// K_{n-2} minus one edge uv, with pendant u' attached to u and pendant v'
// attached to v. Layout: u=0, v=1, clique rest 2..n-3, u'=n-2, v'=n-1.
inline FamilyGraph make_k_prime(int n) {
    if (n < 7) throw std::invalid_argument("k_prime requires n >= 7, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n - 2; ++i)
        for (int j = i + 1; j < n - 2; ++j)
            if (!(i == 0 && j == 1)) g.add_edge(i, j);
    g.add_edge(0, n - 2);
    g.add_edge(1, n - 1);
    return {std::move(g),
            FamilyKind::k_prime,
            {{"u", 0}, {"v", 1}, {"u_prime", n - 2}, {"v_prime", n - 1}}};
}

// K_{n-2} minus one edge uv, with a pendant path u-a-b of two new vertices.
// Layout: u=0, v=1, clique rest 2..n-3, a=n-2, b=n-1.
inline FamilyGraph make_k_double_prime(int n) {
    if (n < 7)
        throw std::invalid_argument("k_double_prime requires n >= 7, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n - 2; ++i)
        for (int j = i + 1; j < n - 2; ++j)
            if (!(i == 0 && j == 1)) g.add_edge(i, j);
    g.add_edge(0, n - 2);
    g.add_edge(n - 2, n - 1);
    return {std::move(g), FamilyKind::k_double_prime, {{"u", 0}, {"v", 1}, {"a", n - 2}, {"b", n - 1}}};
}

// K_a minus one edge uw, joined by the bridge uv to a disjoint K_b.
// Layout: u=0, w=1, K_a rest 2..a-1, v=a, K_b rest a+1..a+b-1.
inline FamilyGraph make_k_ab(int a, int b) {
    if (a < 3 || b < 2)
        throw std::invalid_argument("k_ab requires a >= 3 and b >= 2, got a=" +
                                    std::to_string(a) + " b=" + std::to_string(b));
    const int n = a + b;
    Graph g(n);
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j)
            if (!(i == 0 && j == 1)) g.add_edge(i, j);
    for (int i = a; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.add_edge(0, a);
    FamilyGraph out{std::move(g), FamilyKind::k_ab, {{"u", 0}, {"w", 1}, {"v", a}}};
    out.a = a;
    out.b = b;
    return out;
}

// Order-5 tree: path c1-c2-c3 with two pendant vertices on c3.
// Degree multiset {1,1,1,2,3}, diameter 3.
inline FamilyGraph make_tree_T() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    return {std::move(g), FamilyKind::tree_t, {{"c1", 0}, {"c2", 1}, {"c3", 2}, {"p1", 3}, {"p2", 4}}};
}

inline Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

} // namespace distspec
