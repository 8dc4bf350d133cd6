#include "distspec/charpoly.hpp"
#include "distspec/int_poly.hpp"
#include "distspec/polyroot.hpp"
#include "distspec/quotient.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace distspec;

TEST(IntPolynomial, Arithmetic) {
    IntPolynomial a{1, 2};      // 1 + 2x
    IntPolynomial b{-1, 0, 3};  // -1 + 3x^2
    EXPECT_EQ(a + b, (IntPolynomial{0, 2, 3}));
    EXPECT_EQ(a - b, (IntPolynomial{2, 2, -3}));
    EXPECT_EQ(a * b, (IntPolynomial{-1, -2, 3, 6}));
    EXPECT_EQ((a - a).degree(), -1);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.eval(BigInt(5)), 11);
    EXPECT_EQ(b.eval(BigRat(1, 2)), BigRat(-1, 4));
    EXPECT_EQ((IntPolynomial{0, 0, 0, 4}).derivative(), (IntPolynomial{0, 0, 12}));
    EXPECT_EQ((IntPolynomial{-20, 0, 1}).str(), "x^2 - 20");
}

TEST(CharPoly, SmallKnownMatrices) {
    IntMatrix id2(2);
    id2(0, 0) = 1;
    id2(1, 1) = 1;
    EXPECT_EQ(char_poly_exact(id2), (IntPolynomial{1, -2, 1}));

    IntMatrix swap2(2);
    swap2(0, 1) = 1;
    swap2(1, 0) = 1;
    EXPECT_EQ(char_poly_exact(swap2), (IntPolynomial{-1, 0, 1}));
}

TEST(CharPoly, KprimeQuotientAtN7) {
    const IntPolynomial p = char_poly_exact(quotient_kprime(7).as_int_matrix());
    // x^5 - 4x^4 - 42x^3 - 70x^2 - 20x
    EXPECT_EQ(p, (IntPolynomial{0, -20, -70, -42, -4, 1}));
}

TEST(CharPoly, DimensionCap) {
    EXPECT_THROW(char_poly_exact(IntMatrix(17)), std::invalid_argument);
}

// Independent oracle: sum over permutations of sgn(s) * prod (xI - M)_{i,s(i)},
// expanded as exact polynomials.
namespace {

IntPolynomial permanent_style_charpoly(const IntMatrix& m) {
    const int n = m.dim();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    IntPolynomial total;
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        IntPolynomial prod{1};
        for (int i = 0; i < n; ++i) {
            IntPolynomial factor;
            if (perm[i] == i)
                factor = IntPolynomial::from_coeffs({-m(i, i), BigInt(1)}); // x - m_ii
            else
                factor = IntPolynomial::from_coeffs({-m(i, perm[i])});
            prod = prod * factor;
        }
        total = sign > 0 ? total + prod : total - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

TEST(CharPoly, MatchesPermutationExpansionOracle) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        IntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = static_cast<int>(rng() % 7) - 3;
        EXPECT_EQ(char_poly_exact(m), permanent_style_charpoly(m)) << "dim " << n;
    }
}

TEST(PolyRoot, SimpleRoots) {
    // (x + 2)(x - 1) = x^2 + x - 2
    auto r = least_real_root(IntPolynomial{-2, 1, 1});
    ASSERT_TRUE(r.has_value());
    EXPECT_NEAR(r->approx, -2.0, 1e-10);
    EXPECT_LE(static_cast<double>(r->hi - r->lo), 1e-10);

    // no real roots
    EXPECT_FALSE(least_real_root(IntPolynomial{1, 0, 1}).has_value());

    // multiple root handled through the squarefree part: (x+1)^2 (x-3)
    IntPolynomial p = IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{-3, 1};
    auto r2 = least_real_root(p);
    ASSERT_TRUE(r2.has_value());
    EXPECT_NEAR(r2->approx, -1.0, 1e-10);

    // root at zero: x^3 - 4x = x(x-2)(x+2)
    auto r3 = least_real_root(IntPolynomial{0, -4, 0, 1});
    ASSERT_TRUE(r3.has_value());
    EXPECT_NEAR(r3->approx, -2.0, 1e-10);
}

TEST(PolyRoot, AgreesWithJacobiOnQuotientPolys) {
    for (int n = 7; n <= 12; ++n) {
        auto bracket = least_real_root(kprime_poly(n));
        ASSERT_TRUE(bracket.has_value());
        const BigRat lo = bracket->lo, hi = bracket->hi;
        // the bracket really brackets: p(lo) and p(hi) have opposite signs
        const IntPolynomial p = kprime_poly(n);
        EXPECT_LE(p.eval(lo) * p.eval(hi), 0);
    }
}
