#include "tentspec/polynomial.hpp"

namespace tentspec {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

RationalPolynomial make_monic(const RationalPolynomial& p) {
    if (p.is_zero()) return p;
    const Rational lead = p.leading();
    std::vector<Rational> c = p.coefficients();
    for (Rational& v : c) v /= lead;
    return RationalPolynomial(std::move(c));
}

} // namespace

IntPolynomial primitive_part(const RationalPolynomial& p) {
    if (p.is_zero()) return {};
    BigInt den = 1;
    for (const Rational& v : p.coefficients()) {
        const BigInt d = boost::multiprecision::denominator(v);
        den = den / boost::multiprecision::gcd(den, d) * d;
    }
    std::vector<BigInt> c;
    c.reserve(p.coefficients().size());
    for (const Rational& v : p.coefficients()) {
        c.push_back(boost::multiprecision::numerator(v) * (den / boost::multiprecision::denominator(v)));
    }
    return primitive_part(IntPolynomial(std::move(c)));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    BigInt content = 0;
    for (const BigInt& v : p.coefficients()) content = boost::multiprecision::gcd(content, abs_big(v));
    if (p.leading() < 0) content = -content;
    std::vector<BigInt> c = p.coefficients();
    for (BigInt& v : c) v /= content;
    return IntPolynomial(std::move(c));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
    std::vector<Rational> rem = a.coefficients();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto db = static_cast<std::size_t>(b.degree());
    const Rational& lead = b.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational q = rem[k + db] / lead;
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coefficients()[j];
    }
    rem.resize(db);
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        RationalPolynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

RationalPolynomial lcm(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return make_monic(divmod(a * b, gcd(a, b)).first);
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    if (!r.is_zero()) throw DomainError("polynomial does not divide exactly");
    std::vector<BigInt> c;
    for (const Rational& v : q.coefficients()) {
        if (boost::multiprecision::denominator(v) != 1) {
            throw DomainError("quotient has non-integer coefficients");
        }
        c.push_back(boost::multiprecision::numerator(v));
    }
    return IntPolynomial(std::move(c));
}

} // namespace tentspec
