// Exact integer-coefficient univariate polynomials over arbitrary-precision
// integers, with rational evaluation. Coefficients are stored ascending by
// degree with no trailing zeros.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace distspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class IntPolynomial {
public:
    IntPolynomial() = default;

    // Ascending-degree coefficient list: {c0, c1, ...}.
    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (long long c : coeffs) c_.emplace_back(c);
        normalize();
    }

    static IntPolynomial from_coeffs(std::vector<BigInt> coeffs) {
        IntPolynomial p;
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    static IntPolynomial monomial(BigInt coef, int deg) {
        IntPolynomial p;
        if (coef != 0) {
            p.c_.assign(deg + 1, BigInt(0));
            p.c_[deg] = std::move(coef);
        }
        return p;
    }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(int k) const {
        static const BigInt zero{0};
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[k];
    }

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return from_coeffs(std::move(out));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
        return from_coeffs(std::move(out));
    }

    IntPolynomial operator-() const {
        std::vector<BigInt> out(c_);
        for (auto& c : out) c = -c;
        return from_coeffs(std::move(out));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return from_coeffs(std::move(out));
    }

    bool operator==(const IntPolynomial& other) const = default;

    BigInt eval(const BigInt& x) const {
        BigInt acc{0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    BigRat eval(const BigRat& x) const {
        BigRat acc{0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
        return acc;
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<int>(i);
        return from_coeffs(std::move(out));
    }

    // Human-readable form, highest degree first, e.g. "x^5 - 4*x^4 - 20*x".
    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& c = c_[k];
            if (c == 0) continue;
            const bool neg = c < 0;
            BigInt mag = neg ? BigInt(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const bool unit = (mag == 1) && k > 0;
            if (!unit) out += mag.str();
            if (k > 0) {
                if (!unit) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    // Decimal coefficient strings, ascending degree (for JSON reports).
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(c.str());
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

} // namespace distspec
