// Sign partitions from the least eigenvector of D(G^c), the edge moves whose
// monotonicity the Rayleigh argument guarantees, and a greedy local search
// over the add-within / delete-across move menu.
#pragma once

#include "distspec/eigen.hpp"
#include "distspec/graph.hpp"
#include "distspec/graph6.hpp"

#include <optional>
#include <string>
#include <vector>

namespace distspec {

class illegal_move_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class move_disconnects_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class move_diameter_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vertex classes by the sign of the least eigenvector of D(g^c), oriented so
// that |V+ u V0| >= |V-|.
struct SignPartition {
    std::vector<int> v_plus, v_zero, v_minus;
    std::vector<double> source_vector; // the (possibly flipped) least eigenvector
    double zero_tol;
    double lambda;          // least eigenvalue of D(g^c)
    double least_gap;       // second-least minus least eigenvalue
    bool degenerate;        // least_gap < 1e-8: partition depends on solver's choice
    int p() const noexcept { return static_cast<int>(v_plus.size() + v_zero.size()); }
    int q() const noexcept { return static_cast<int>(v_minus.size()); }

    bool on_plus_side(int v) const {
        for (int u : v_plus)
            if (u == v) return true;
        for (int u : v_zero)
            if (u == v) return true;
        return false;
    }
    bool on_minus_side(int v) const {
        for (int u : v_minus)
            if (u == v) return true;
        return false;
    }
};

inline SignPartition sign_partition(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("sign_partition requires a connected graph");
    if (diameter(g) <= 3)
        throw std::invalid_argument("sign_partition requires diameter > 3");
    const Graph gc = complement(g);
    const DistanceMatrix dc = bfs_distances(gc);
    const SymMatrix m = SymMatrix::from_distances(dc);
    const EigenSystem es = jacobi_eigensystem(m);
    const int n = g.order();

    std::vector<double> x(n);
    for (int k = 0; k < n; ++k) x[k] = es.vectors[static_cast<std::size_t>(k) * n + (n - 1)];

    double maxabs = 0;
    for (double c : x) maxabs = std::max(maxabs, std::abs(c));
    const double tol = 1e-9 * maxabs;

    auto classify = [&](const std::vector<double>& vec) {
        SignPartition sp;
        sp.zero_tol = tol;
        for (int v = 0; v < n; ++v) {
            if (vec[v] > tol)
                sp.v_plus.push_back(v);
            else if (vec[v] < -tol)
                sp.v_minus.push_back(v);
            else
                sp.v_zero.push_back(v);
        }
        return sp;
    };

    SignPartition sp = classify(x);
    if (sp.p() < sp.q()) {
        for (double& c : x) c = -c;
        sp = classify(x);
    }
    sp.source_vector = std::move(x);
    sp.lambda = es.values[n - 1];
    sp.least_gap = n >= 2 ? es.values[n - 2] - es.values[n - 1] : 0.0;
    sp.degenerate = sp.least_gap < 1e-8;
    return sp;
}

enum class MoveKind { delete_within, add_across, rewire };

// delete_within: remove edge (u,v) lying inside one side of the partition.
// add_across:    add edge (u,v) between the two sides.
// rewire:        remove edge (u,v), add edge (u, target).
struct EdgeMove {
    MoveKind kind;
    int u, v;
    int target = -1; // rewire only
};

inline const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::delete_within: return "delete_within";
        case MoveKind::add_across: return "add_across";
        case MoveKind::rewire: return "rewire";
    }
    return "?";
}

// Applies the move mechanically, enforcing edge legality, connectivity of the
// result, and (for add_across and rewire) diameter > 3 of the result.
inline Graph apply_move(const Graph& g, const EdgeMove& m) {
    Graph out = g;
    switch (m.kind) {
        case MoveKind::delete_within:
            if (!g.has_edge(m.u, m.v))
                throw illegal_move_error("delete_within: edge does not exist");
            out.remove_edge(m.u, m.v);
            break;
        case MoveKind::add_across:
            if (g.has_edge(m.u, m.v)) throw illegal_move_error("add_across: edge already present");
            out.add_edge(m.u, m.v);
            break;
        case MoveKind::rewire:
            if (!g.has_edge(m.u, m.v)) throw illegal_move_error("rewire: edge to delete is absent");
            if (m.target < 0 || m.target == m.u)
                throw illegal_move_error("rewire: invalid target vertex");
            if (g.has_edge(m.u, m.target) || m.target == m.v)
                throw illegal_move_error("rewire: target edge already present");
            out.remove_edge(m.u, m.v);
            out.add_edge(m.u, m.target);
            break;
    }
    if (!is_connected(out)) throw move_disconnects_error("move disconnects the graph");
    if (m.kind != MoveKind::delete_within && diameter(out) <= 3)
        throw move_diameter_error("move drops the diameter to 3 or below");
    return out;
}

struct MonotoneOutcome {
    enum class Status { confirmed, violated, hypothesis_unmet } status;
    double lambda_before = 0, lambda_after = 0;
    // x^T D(G'^c) x for the pre-move least eigenvector x; the Rayleigh chain
    // gives lambda_before >= rayleigh_after >= lambda_after when confirmed.
    double rayleigh_after = 0;
    std::string reason;
};

// Checks the guaranteed inequality lambda_n(G^c) >= lambda_n(G'^c) for a move
// satisfying the relevant hypotheses. Unmet hypotheses are a separate outcome,
// not a violation.
inline MonotoneOutcome monotone_check(const Graph& g, const EdgeMove& m) {
    using Status = MonotoneOutcome::Status;
    if (!is_connected(g) || diameter(g) <= 3)
        throw std::invalid_argument("monotone_check requires a connected graph of diameter > 3");

    const SignPartition sp = sign_partition(g);
    MonotoneOutcome out{Status::hypothesis_unmet, sp.lambda, 0, 0, ""};

    auto same_side = [&](int a, int b) {
        return (sp.on_plus_side(a) && sp.on_plus_side(b)) ||
               (sp.on_minus_side(a) && sp.on_minus_side(b));
    };
    auto cross_side = [&](int a, int b) {
        return (sp.on_plus_side(a) && sp.on_minus_side(b)) ||
               (sp.on_minus_side(a) && sp.on_plus_side(b));
    };

    switch (m.kind) {
        case MoveKind::delete_within:
            if (!same_side(m.u, m.v)) {
                out.reason = "edge endpoints are not inside one partition side";
                return out;
            }
            break;
        case MoveKind::add_across:
            if (!cross_side(m.u, m.v)) {
                out.reason = "edge endpoints are not on opposite partition sides";
                return out;
            }
            break;
        case MoveKind::rewire: {
            const double xu = sp.source_vector[m.u];
            const double xv = sp.source_vector[m.v];
            const double xt = sp.source_vector[m.target];
            if (xu * xv < xu * xt) {
                out.reason = "eigenvector product hypothesis x(u)x(v) >= x(u)x(target) fails";
                return out;
            }
            break;
        }
    }

    Graph moved = g;
    try {
        moved = apply_move(g, m);
    } catch (const move_disconnects_error&) {
        out.reason = "move disconnects the graph";
        return out;
    } catch (const move_diameter_error&) {
        out.reason = "resulting diameter is not > 3";
        return out;
    }

    const DistanceMatrix dc = bfs_distances(complement(moved));
    const SymMatrix md = SymMatrix::from_distances(dc);
    out.lambda_after = symmetric_eigenvalues(md).least();
    out.rayleigh_after = quadratic_form(md, sp.source_vector);
    out.status =
        (out.lambda_before >= out.lambda_after - 1e-8) ? Status::confirmed : Status::violated;
    return out;
}

struct TrajectoryStep {
    std::string graph6;
    double lambda;
    std::string move; // empty for the starting graph
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;
    bool reached_local_max = false;
};

// Greedy ascent on lambda_n(G^c) over the move menu: add an edge inside
// either partition side, or delete an edge between the sides; every candidate
// must stay connected with diameter > 3. Takes the best improving move
// (improvement > 1e-10); ties within 1e-10 go to the lexicographically
// smallest edge pair. Strictly increasing, hence terminating.
inline Trajectory local_search_max(const Graph& start, int max_steps) {
    if (!is_connected(start) || diameter(start) <= 3)
        throw std::invalid_argument("local_search_max requires a connected graph of diameter > 3");

    auto lambda_of = [](const Graph& g) {
        return symmetric_eigenvalues(SymMatrix::from_distances(bfs_distances(complement(g))))
            .least();
    };

    Trajectory traj;
    Graph cur = start;
    double cur_lambda = lambda_of(cur);
    traj.steps.push_back({write_graph6(cur), cur_lambda, ""});

    for (int step = 0; step < max_steps; ++step) {
        const SignPartition sp = sign_partition(cur);
        const int n = cur.order();

        struct Candidate {
            double lambda;
            int u, v;
            bool add;
        };
        std::optional<Candidate> best;

        auto consider = [&](int u, int v, bool add) {
            Graph moved = cur;
            if (add)
                moved.add_edge(u, v);
            else
                moved.remove_edge(u, v);
            if (!is_connected(moved) || diameter(moved) <= 3) return;
            const double lam = lambda_of(moved);
            if (lam <= cur_lambda + 1e-10) return;
            if (!best || lam > best->lambda + 1e-10 ||
                (lam > best->lambda - 1e-10 &&
                 std::pair{u, v} < std::pair{best->u, best->v}))
                best = Candidate{lam, u, v, add};
        };

        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const bool uplus = sp.on_plus_side(u), vplus = sp.on_plus_side(v);
                if (uplus == vplus) {
                    if (!cur.has_edge(u, v)) consider(u, v, true);
                } else {
                    if (cur.has_edge(u, v)) consider(u, v, false);
                }
            }

        if (!best) {
            traj.reached_local_max = true;
            break;
        }
        if (best->add)
            cur.add_edge(best->u, best->v);
        else
            cur.remove_edge(best->u, best->v);
        cur_lambda = best->lambda;
        traj.steps.push_back({write_graph6(cur), cur_lambda,
                              std::string(best->add ? "add " : "delete ") +
                                  std::to_string(best->u) + " " + std::to_string(best->v)});
    }
    return traj;
}

} // namespace distspec
