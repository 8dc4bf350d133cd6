// Exact characteristic polynomials det(xI - M) of small integer matrices via
// the Faddeev-LeVerrier recurrence over exact rationals. The division-by-k
// steps are exact over Q and every resulting coefficient must be integral,
// which doubles as a self-check on the arithmetic.
#pragma once

#include "distspec/graph.hpp"
#include "distspec/int_poly.hpp"

#include <vector>

namespace distspec {

class IntMatrix {
public:
    static constexpr int max_dim = 16;

    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, BigInt(0)) {
        if (n < 1) throw std::invalid_argument("IntMatrix dimension must be positive");
    }

    static IntMatrix from_distances(const DistanceMatrix& d) {
        IntMatrix m(d.order());
        for (int i = 0; i < d.order(); ++i)
            for (int j = 0; j < d.order(); ++j) m(i, j) = d(i, j);
        return m;
    }

    int dim() const noexcept { return n_; }
    BigInt& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const BigInt& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

private:
    int n_;
    std::vector<BigInt> a_;
};

inline IntPolynomial char_poly_exact(const IntMatrix& m) {
    const int n = m.dim();
    if (n > IntMatrix::max_dim)
        throw std::invalid_argument("char_poly_exact supports dimensions up to " +
                                    std::to_string(IntMatrix::max_dim) + ", got " +
                                    std::to_string(n));

    using Rat = BigRat;
    std::vector<Rat> work(static_cast<std::size_t>(n) * n, Rat(0)); // N_k
    std::vector<Rat> next(work.size(), Rat(0));
    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    coeffs[n] = 1;

    Rat ck{1}; // c_{n-k+1} entering step k
    for (int k = 1; k <= n; ++k) {
        // N_k = M * N_{k-1} + c_{n-k+1} * I
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat s = (i == j) ? ck : Rat(0);
                for (int t = 0; t < n; ++t) {
                    if (m(i, t) == 0) continue;
                    s += Rat(m(i, t)) * work[static_cast<std::size_t>(t) * n + j];
                }
                next[static_cast<std::size_t>(i) * n + j] = s;
            }
        work.swap(next);
        // c_{n-k} = -tr(M * N_k) / k
        Rat tr{0};
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) {
                if (m(i, t) == 0) continue;
                tr += Rat(m(i, t)) * work[static_cast<std::size_t>(t) * n + i];
            }
        Rat c = -tr / k;
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("char_poly_exact: non-integral coefficient, arithmetic bug");
        coeffs[n - k] = boost::multiprecision::numerator(c);
        ck = c;
    }
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

} // namespace distspec
