// Seeded randomized campaigns shared by the CLI and the acceptance suite:
// the complement distance identity over random graphs, and the edge-move
// monotonicity checks. Trial t of a campaign with seed s uses an independent
// generator seeded by mix_seed(s, t), so campaigns parallelize and reproduce.
#pragma once

#include "distspec/eigen.hpp"
#include "distspec/random_graphs.hpp"
#include "distspec/transforms.hpp"

#include <string>
#include <vector>

namespace distspec {

struct IdentityCampaignResult {
    int equal_trials = 0;     // diameter > 3 graphs, expect entrywise equality
    int geq_trials = 0;       // diameter 3 graphs, expect entrywise >=
    int violations = 0;
    std::vector<std::string> witnesses; // graph6 of violating graphs
};

inline IdentityCampaignResult run_identity_campaign(int trials_equal, int trials_geq, int max_n,
                                                    std::uint64_t seed) {
    IdentityCampaignResult res;
    for (int t = 0; t < trials_equal; ++t) {
        std::mt19937_64 rng(mix_seed(seed, t));
        const Graph g = random_connected_diam_gt3(5, std::max(5, max_n), rng);
        ++res.equal_trials;
        if (verify_complement_identity(g).status != IdentityStatus::holds_equal) {
            ++res.violations;
            res.witnesses.push_back(write_graph6(g));
        }
    }
    for (int t = 0; t < trials_geq; ++t) {
        std::mt19937_64 rng(mix_seed(seed ^ 0x5eed5eedULL, t));
        const Graph g = random_connected_diam_eq3(4, std::max(4, max_n), rng);
        ++res.geq_trials;
        if (verify_complement_identity(g).status != IdentityStatus::holds_geq) {
            ++res.violations;
            res.witnesses.push_back(write_graph6(g));
        }
    }
    return res;
}

struct MonotoneCampaignResult {
    int confirmed = 0;
    int violated = 0;
    int hypothesis_unmet = 0;
    std::vector<std::string> witnesses; // graph6 + move of violating trials
};

// One seeded trial: sample a diameter > 3 graph, then a random legal move of
// the requested kind; unmet hypotheses count separately, never as passes.
inline MonotoneCampaignResult run_monotone_campaign(MoveKind kind, int trials, int max_n,
                                                    std::uint64_t seed) {
    MonotoneCampaignResult res;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(mix_seed(seed + static_cast<int>(kind) * 0x9e37ULL, t));
        const Graph g = random_connected_diam_gt3(5, std::max(5, max_n), rng);
        const SignPartition sp = sign_partition(g);
        const int n = g.order();

        std::vector<EdgeMove> candidates;
        switch (kind) {
            case MoveKind::delete_within:
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (g.has_edge(u, v) &&
                            (sp.on_plus_side(u) == sp.on_plus_side(v)))
                            candidates.push_back({kind, u, v});
                break;
            case MoveKind::add_across:
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (!g.has_edge(u, v) && (sp.on_plus_side(u) != sp.on_plus_side(v)))
                            candidates.push_back({kind, u, v});
                break;
            case MoveKind::rewire:
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        if (v == u || !g.has_edge(u, v)) continue;
                        for (int w = 0; w < n; ++w)
                            if (w != u && w != v && !g.has_edge(u, w))
                                candidates.push_back({kind, u, v, w});
                    }
                break;
        }
        if (candidates.empty()) {
            ++res.hypothesis_unmet;
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const EdgeMove mv = candidates[pick(rng)];
        const MonotoneOutcome out = monotone_check(g, mv);
        switch (out.status) {
            case MonotoneOutcome::Status::confirmed: ++res.confirmed; break;
            case MonotoneOutcome::Status::hypothesis_unmet: ++res.hypothesis_unmet; break;
            case MonotoneOutcome::Status::violated:
                ++res.violated;
                res.witnesses.push_back(write_graph6(g) + " move " +
                                        std::string(move_kind_name(mv.kind)) + " " +
                                        std::to_string(mv.u) + "," + std::to_string(mv.v));
                break;
        }
    }
    return res;
}

} // namespace distspec
