#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate polynomials with exact coefficients (ascending order).
 */

#include "tentspec/matrix.hpp"

#include <complex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tentspec {

template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<int> coefficients) {
        for (int v : coefficients) c_.emplace_back(v);
        trim();
    }

    static Polynomial monomial(const T& coef, std::size_t power) {
        std::vector<T> c(power + 1);
        c[power] = coef;
        return Polynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<T>& coefficients() const noexcept { return c_; }
    T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const T& leading() const { return c_.back(); }

    template <class U>
    U evaluate(const U& x) const {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<U>(*it);
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const T& s, const Polynomial& a) {
        std::vector<T> c = a.c_;
        for (T& v : c) v *= s;
        return Polynomial(std::move(c));
    }

    /// Human-readable form, highest power first: "x^3 - 2*x^2 - 2".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const T& v = c_[static_cast<std::size_t>(k)];
            if (v == 0) continue;
            T mag = v < 0 ? T(-v) : v;
            if (first) {
                if (v < 0) os << "-";
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            first = false;
            const bool unit = (mag == 1);
            if (!unit || k == 0) os << mag;
            if (k > 0) {
                if (!unit) os << "*";
                os << "x";
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coefficients().size());
    for (const BigInt& v : p.coefficients()) c.emplace_back(v);
    return RationalPolynomial(std::move(c));
}

/// Clear denominators and content; the leading coefficient is made positive.
IntPolynomial primitive_part(const RationalPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// Euclidean division over the rationals. Throws DomainError on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

/// Monic greatest common divisor over the rationals (zero if both are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// Monic least common multiple over the rationals.
RationalPolynomial lcm(const RationalPolynomial& a, const RationalPolynomial& b);

/// a / b when b divides a exactly in Z[x]; throws DomainError otherwise.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// The polynomial x.
inline IntPolynomial x_poly() { return IntPolynomial{0, 1}; }

} // namespace tentspec
