// The 5x5 equitable quotients of the complement distance matrices of the
// K', K'' and K(a,b) families, their closed-form characteristic polynomials,
// the low-degree difference identities between those polynomials, and exact
// sign checks of the differences over rational lambda grids.
//
// Formula mismatches are results, not errors: the characteristic polynomial
// of the constructed quotient matrix is authoritative, and any disagreement
// with a closed form is returned as a coefficient-difference polynomial.
#pragma once

#include "distspec/charpoly.hpp"
#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/int_poly.hpp"

#include <array>
#include <optional>
#include <vector>

namespace distspec {

struct QuotientMatrix {
    std::array<std::array<long long, 5>, 5> entries{};
    std::array<std::vector<int>, 5> classes;

    IntMatrix as_int_matrix() const {
        IntMatrix m(5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m(i, j) = entries[i][j];
        return m;
    }
};

struct EquitableViolation {
    int class_i, class_j; // class pair where row sums disagree
    int v1, v2;           // witnesses in class_i
    long long sum1, sum2;
};

// Checks that every vertex of class i has the same d-row sum over class j.
inline std::optional<EquitableViolation>
equitable_violation(const DistanceMatrix& d, const std::array<std::vector<int>, 5>& classes) {
    for (int ci = 0; ci < 5; ++ci)
        for (int cj = 0; cj < 5; ++cj) {
            bool have = false;
            long long ref = 0;
            int refv = -1;
            for (int v : classes[ci]) {
                long long s = 0;
                for (int w : classes[cj]) s += d(v, w);
                if (!have) {
                    ref = s;
                    refv = v;
                    have = true;
                } else if (s != ref) {
                    return EquitableViolation{ci, cj, refv, v, ref, s};
                }
            }
        }
    return std::nullopt;
}

// Block row-sum quotient of d over the given classes; throws if the partition
// is not equitable.
inline QuotientMatrix block_quotient(const DistanceMatrix& d,
                                     std::array<std::vector<int>, 5> classes) {
    if (auto bad = equitable_violation(d, classes))
        throw std::runtime_error("partition is not equitable: vertices " +
                                 std::to_string(bad->v1) + " and " + std::to_string(bad->v2) +
                                 " of class " + std::to_string(bad->class_i) +
                                 " have row sums " + std::to_string(bad->sum1) + " vs " +
                                 std::to_string(bad->sum2) + " over class " +
                                 std::to_string(bad->class_j));
    QuotientMatrix q;
    for (int ci = 0; ci < 5; ++ci)
        for (int cj = 0; cj < 5; ++cj) {
            long long s = 0;
            for (int w : classes[cj]) s += d(classes[ci][0], w);
            q.entries[ci][cj] = s;
        }
    q.classes = std::move(classes);
    return q;
}

namespace detail {

inline std::vector<int> index_range(int lo, int hi) { // [lo, hi)
    std::vector<int> out;
    for (int i = lo; i < hi; ++i) out.push_back(i);
    return out;
}

} // namespace detail

// Quotient of D(K'^c) over classes (u, u', v, v', rest).
inline QuotientMatrix quotient_kprime(int n) {
    if (n < 7) throw std::invalid_argument("quotient_kprime requires n >= 7");
    QuotientMatrix q;
    const long long r = n - 4;
    q.entries = {{{0, 2, 1, 1, 2 * r},
                  {2, 0, 1, 1, r},
                  {1, 1, 0, 2, 2 * r},
                  {1, 1, 2, 0, r},
                  {2, 1, 2, 1, 2 * (n - 5)}}};
    q.classes = {std::vector<int>{0},
                 std::vector<int>{n - 2},
                 std::vector<int>{1},
                 std::vector<int>{n - 1},
                 detail::index_range(2, n - 2)};
    return q;
}

// Quotient of D(K^c(p,q)) over classes (u, v, w, K_p-rest, K_q-rest).
inline QuotientMatrix quotient_kab(int p, int q) {
    if (p < 3 || q < 2) throw std::invalid_argument("quotient_kab requires p >= 3 and q >= 2");
    QuotientMatrix m;
    m.entries = {{{0, 2, 1, 2 * (p - 2), q - 1},
                  {2, 0, 1, p - 2, 2 * (q - 1)},
                  {1, 1, 0, 2 * (p - 2), q - 1},
                  {2, 1, 2, 2 * (p - 3), q - 1},
                  {1, 2, 1, p - 2, 2 * (q - 2)}}};
    m.classes = {std::vector<int>{0},
                 std::vector<int>{p},
                 std::vector<int>{1},
                 detail::index_range(2, p),
                 detail::index_range(p + 1, p + q)};
    return m;
}

// Quotient of D(K''^c) over classes (u, v, a, b, rest), derived from the full
// matrix by block row sums (no closed form is assumed for the entries).
inline QuotientMatrix quotient_kdprime(int n) {
    if (n < 7) throw std::invalid_argument("quotient_kdprime requires n >= 7");
    const FamilyGraph fam = make_k_double_prime(n);
    const DistanceMatrix d = bfs_distances(complement(fam.graph));
    std::array<std::vector<int>, 5> classes = {std::vector<int>{0},
                                               std::vector<int>{1},
                                               std::vector<int>{n - 2},
                                               std::vector<int>{n - 1},
                                               detail::index_range(2, n - 2)};
    return block_quotient(d, std::move(classes));
}

// Closed-form characteristic polynomial of quotient_kprime(n).
inline IntPolynomial kprime_poly(int n) {
    return IntPolynomial::from_coeffs({BigInt(0), BigInt(4 * n - 48), BigInt(-10 * n),
                                       BigInt(-(10 * n - 28)), BigInt(-(2 * n - 10)), BigInt(1)});
}

// Closed-form characteristic polynomial of quotient_kdprime(n).
inline IntPolynomial kdprime_poly(int n) {
    return IntPolynomial::from_coeffs({BigInt(14 * n - 70), BigInt(15 * n - 103),
                                       BigInt(-(8 * n + 10)), BigInt(-(10 * n - 28)),
                                       BigInt(-(2 * n - 10)), BigInt(1)});
}

// Closed-form characteristic polynomial of quotient_kab(p,q).
inline IntPolynomial kab_poly(int p, int q) {
    const long long pq = static_cast<long long>(p) * q;
    return IntPolynomial::from_coeffs(
        {BigInt(12 * pq - 10 * p - 22 * q + 2), BigInt(30 * pq - 45 * p - 63 * q + 53),
         BigInt(18 * pq - 44 * p - 50 * q + 74), BigInt(3 * pq - 16 * p - 16 * q + 40),
         BigInt(10 - 2 * p - 2 * q), BigInt(1)});
}

// Printed low-degree difference forms.
inline IntPolynomial diff_form_kprime_kdprime(int n) {
    return IntPolynomial::from_coeffs({BigInt(70 - 14 * n), BigInt(55 - 11 * n), BigInt(10 - 2 * n)});
}

inline IntPolynomial diff_form_kab_kprime(int p) {
    return IntPolynomial::from_coeffs({BigInt(14 * p - 42), BigInt(11 * p - 33), BigInt(2 * p - 6)});
}

inline IntPolynomial diff_form_kab_step(int p, int q) {
    return IntPolynomial::from_coeffs({BigInt(-12 * p + 12 * q + 24), BigInt(-30 * p + 30 * q + 48),
                                       BigInt(-18 * p + 18 * q + 24), BigInt(-3 * p + 3 * q + 3)});
}

struct PolyMatch {
    bool match;
    IntPolynomial actual;
    IntPolynomial expected;
    IntPolynomial diff; // actual - expected; zero iff match
};

inline PolyMatch compare_polys(IntPolynomial actual, IntPolynomial expected) {
    IntPolynomial diff = actual - expected;
    return {diff.is_zero(), std::move(actual), std::move(expected), std::move(diff)};
}

// Characteristic polynomial of the constructed quotient vs the closed form.
inline PolyMatch check_charpoly_kprime(int n) {
    return compare_polys(char_poly_exact(quotient_kprime(n).as_int_matrix()), kprime_poly(n));
}

inline PolyMatch check_charpoly_kdprime(int n) {
    return compare_polys(char_poly_exact(quotient_kdprime(n).as_int_matrix()), kdprime_poly(n));
}

inline PolyMatch check_charpoly_kab(int p, int q) {
    return compare_polys(char_poly_exact(quotient_kab(p, q).as_int_matrix()), kab_poly(p, q));
}

// Differences of the actual quotient characteristic polynomials against the
// printed forms.
inline PolyMatch diff_identity_kprime_kdprime(int n) {
    IntPolynomial actual = char_poly_exact(quotient_kprime(n).as_int_matrix()) -
                           char_poly_exact(quotient_kdprime(n).as_int_matrix());
    return compare_polys(std::move(actual), diff_form_kprime_kdprime(n));
}

inline PolyMatch diff_identity_kab_vs_kprime(int p, int q) {
    IntPolynomial actual = char_poly_exact(quotient_kab(p, q).as_int_matrix()) -
                           char_poly_exact(quotient_kprime(p + q).as_int_matrix());
    return compare_polys(std::move(actual), diff_form_kab_kprime(p));
}

// Step toward the balanced split at fixed order: (p,q) -> (p-1,q+1).
inline PolyMatch diff_identity_kab_step(int p, int q) {
    if (p < 4) throw std::invalid_argument("kab step requires p >= 4 so that (p-1,q+1) is valid");
    IntPolynomial actual = char_poly_exact(quotient_kab(p, q).as_int_matrix()) -
                           char_poly_exact(quotient_kab(p - 1, q + 1).as_int_matrix());
    return compare_polys(std::move(actual), diff_form_kab_step(p, q));
}

enum class DiffRegime {
    kprime_minus_kdprime, // expected < 0 for lambda < -19/5, n >= 7
    kab_minus_kprime,     // expected > 0 for lambda < -19/5, p >= 4
    kab_balance_step,     // expected > 0 for lambda < -3, p > q >= 2
};

struct SignViolation {
    BigRat lambda;
    BigRat value;
};

struct SignRegimeReport {
    bool in_regime = false; // parameters satisfy the regime's hypotheses
    IntPolynomial poly;
    std::size_t points_checked = 0;
    std::vector<SignViolation> violations;
};

inline BigRat regime_lambda_bound(DiffRegime r) {
    return r == DiffRegime::kab_balance_step ? BigRat(-3) : BigRat(-19, 5);
}

// Evaluates the printed difference polynomial over the grid with exact
// rational arithmetic; any sign violation is reported with its witness.
// Grid points at or above the regime bound are ignored.
inline SignRegimeReport sign_regime_check(DiffRegime regime, int p_or_n, int q,
                                          const std::vector<BigRat>& grid) {
    SignRegimeReport rep;
    int expected_sign = 0;
    switch (regime) {
        case DiffRegime::kprime_minus_kdprime:
            if (p_or_n < 7) return rep;
            rep.poly = diff_form_kprime_kdprime(p_or_n);
            expected_sign = -1;
            break;
        case DiffRegime::kab_minus_kprime:
            if (p_or_n < 4 || q < 2) return rep;
            rep.poly = diff_form_kab_kprime(p_or_n);
            expected_sign = 1;
            break;
        case DiffRegime::kab_balance_step:
            if (!(p_or_n > q && q >= 2)) return rep; // p == q is out of regime
            rep.poly = diff_form_kab_step(p_or_n, q);
            expected_sign = 1;
            break;
    }
    rep.in_regime = true;
    const BigRat bound = regime_lambda_bound(regime);
    for (const BigRat& lam : grid) {
        if (lam >= bound) continue;
        ++rep.points_checked;
        BigRat val = rep.poly.eval(lam);
        const bool ok = expected_sign > 0 ? val > 0 : val < 0;
        if (!ok) rep.violations.push_back({lam, std::move(val)});
    }
    return rep;
}

// Descending grid from just below hi down to lo (inclusive-ish), fixed step.
inline std::vector<BigRat> lambda_grid(const BigRat& lo, const BigRat& hi,
                                       const BigRat& step = BigRat(1, 8)) {
    std::vector<BigRat> out;
    for (BigRat x = hi; x >= lo; x -= step) out.push_back(x);
    return out;
}

} // namespace distspec
