// Extremal verdict at order n: scans every connected diameter > 3 graph and
// tests whether the unique maximizer isomorphism class of lambda_n(D(g^c)) is
// K(ceil(n/2), floor(n/2)), with strictness over the runner-up. Orders below
// 7 get a report without a verdict.
#pragma once

#include "distspec/enumerate.hpp"
#include "distspec/families.hpp"
#include "distspec/polyroot.hpp"
#include "distspec/quotient.hpp"

#include <string>

namespace distspec {

struct TheoremCheck {
    enum class Verdict { verified, refuted, report_only } verdict;
    ScanReport scan;
    std::string expected_canonical; // canonical graph6 of K(ceil(n/2), floor(n/2))
    double expected_lambda = 0;     // least root of the K(p,q) quotient polynomial
    std::string witness;            // on refutation: a maximizer differing from expected
    std::string detail;
};

inline TheoremCheck verify_theorem(int n, std::size_t top_k = 10, double tie_tol = 1e-9,
                                   int workers = 1) {
    TheoremCheck out{TheoremCheck::Verdict::report_only, extremal_scan(n, top_k, tie_tol, workers),
                     "", 0, "", ""};
    const int p = (n + 1) / 2, q = n / 2;
    out.expected_canonical = canonical_form(make_k_ab(p, q).graph);
    if (auto r = least_real_root(kab_poly(p, q))) out.expected_lambda = r->approx;

    if (n < 7) {
        out.detail = "order below 7: scan reported without a verdict";
        return out;
    }

    const auto& maxers = out.scan.maximizers;
    const bool unique_expected = maxers.size() == 1 && maxers[0] == out.expected_canonical;
    const double margin = out.scan.has_runner_up
                              ? out.scan.max_lambda - out.scan.runner_up_lambda -
                                    2 * out.scan.residual_budget
                              : 1e300;
    const bool strict = margin > tie_tol;

    if (unique_expected && strict) {
        out.verdict = TheoremCheck::Verdict::verified;
        out.detail = "unique maximizer matches the balanced construction";
    } else {
        out.verdict = TheoremCheck::Verdict::refuted;
        for (const auto& m : maxers)
            if (m != out.expected_canonical) {
                out.witness = m;
                break;
            }
        if (!unique_expected) {
            out.detail = maxers.size() == 1
                             ? "maximizer class differs from the balanced construction"
                             : "maximizer class is not unique";
        } else {
            out.detail = "strictness margin over the runner-up is below tie tolerance";
        }
    }
    return out;
}

} // namespace distspec
