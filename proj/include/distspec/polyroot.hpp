// Least real root of an exact integer polynomial, isolated by Sturm-sequence
// root counting and refined by bisection with rational endpoints. Nothing
// here trusts floating point: the returned bracket is exact.
#pragma once

#include "distspec/int_poly.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace distspec {

namespace detail {

using RatPoly = std::vector<BigRat>; // ascending degree, no trailing zeros

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rp_from(const IntPolynomial& p) {
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return out;
}

inline BigRat rp_eval(const RatPoly& p, const BigRat& x) {
    BigRat acc{0};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline RatPoly rp_derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<int>(i));
    return out;
}

// Remainder of a by b (b nonzero).
inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        BigRat factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        rp_trim(a);
    }
    return a;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RatPoly r = rp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        BigRat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline RatPoly rp_divide_exact(const RatPoly& a, const RatPoly& b) {
    RatPoly rem = a, quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRat(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        BigRat factor = rem.back() / b.back();
        std::size_t shift = rem.size() - b.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
        rem.pop_back();
        rp_trim(rem);
    }
    return quot;
}

inline int sgn(const BigRat& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

struct SturmChain {
    std::vector<RatPoly> seq;

    explicit SturmChain(const RatPoly& squarefree) {
        seq.push_back(squarefree);
        seq.push_back(rp_derivative(squarefree));
        rp_trim(seq.back());
        while (!seq.back().empty() && seq.back().size() > 1) {
            RatPoly r = rp_rem(seq[seq.size() - 2], seq.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            seq.push_back(std::move(r));
        }
    }

    int variations_at(const BigRat& x) const {
        int count = 0, prev = 0;
        for (const auto& p : seq) {
            if (p.empty()) continue;
            int s = sgn(rp_eval(p, x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    int variations_at_minus_inf() const {
        int count = 0, prev = 0;
        for (const auto& p : seq) {
            if (p.empty()) continue;
            int s = sgn(p.back());
            if ((p.size() - 1) % 2 == 1) s = -s; // odd degree flips at -inf
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    // Number of roots of the squarefree polynomial in (-inf, x].
    int roots_leq(const BigRat& x) const { return variations_at_minus_inf() - variations_at(x); }
};

} // namespace detail

struct RootBracket {
    BigRat lo, hi;   // exact bracket around the least real root, hi - lo <= width
    double approx;   // midpoint as double
};

// Least real root of p, or nullopt when p has no real roots. Multiple roots
// are handled by working on the squarefree part.
inline std::optional<RootBracket> least_real_root(const IntPolynomial& p,
                                                  const BigRat& width = BigRat(1, 10000000000LL)) {
    if (p.is_zero() || p.degree() == 0) return std::nullopt;

    detail::RatPoly rp = detail::rp_from(p);
    detail::RatPoly g = detail::rp_gcd(rp, detail::rp_derivative(rp));
    detail::RatPoly sf = (g.size() <= 1) ? rp : detail::rp_divide_exact(rp, g);
    detail::rp_trim(sf);
    if (sf.size() <= 1) return std::nullopt;

    detail::SturmChain chain(sf);
    // Cauchy bound: all roots lie in (-B, B).
    BigRat maxratio{0};
    for (std::size_t i = 0; i + 1 < sf.size(); ++i) {
        BigRat r = sf[i] / sf.back();
        if (r < 0) r = -r;
        maxratio = std::max(maxratio, r);
    }
    BigRat bound = BigRat(1) + maxratio;
    BigInt bceil = boost::multiprecision::numerator(bound) /
                       boost::multiprecision::denominator(bound) +
                   1;
    BigRat lo{-bceil}, hi{bceil};

    const int total = chain.roots_leq(hi);
    if (total == 0) return std::nullopt;

    // Invariant: no roots <= lo, at least one root <= hi.
    while (hi - lo > width) {
        BigRat mid = (lo + hi) / 2;
        if (chain.roots_leq(mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    BigRat mid = (lo + hi) / 2;
    return RootBracket{lo, hi, static_cast<double>(mid)};
}

} // namespace distspec
