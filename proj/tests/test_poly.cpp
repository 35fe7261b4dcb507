#include <doctest.h>

#include "tentspec/errors.hpp"
#include "tentspec/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

using namespace tentspec;
using cd = std::complex<double>;

namespace {

// mpmath at 40 digits.
struct Frozen {
    unsigned n;
    double value;
};
const Frozen kKappa[] = {{1, 0.36602540378443864676},   {2, 0.17965204298588821037},
                         {3, 0.09516397335743353501},   {4, 0.051187040947589872867},
                         {5, 0.027311151400341224049},  {6, 0.014345161880166711999},
                         {10, 0.00096716755252299884479}, {20, 9.5365612704128688853e-7}};
const Frozen kR[] = {{5, 0.03791192792968893262},
                     {6, 0.017355693548862158941},
                     {10, 0.00098624626155622711731},
                     {20, 9.5369250682939443321e-7}};

bool contains(const std::vector<cd>& roots, cd z, double tol) {
    return std::any_of(roots.begin(), roots.end(), [&](cd r) { return std::abs(r - z) <= tol; });
}

double max_abs_coefficient(const IntPolynomial& p) {
    double m = 0.0;
    for (const BigInt& c : p.coefficients()) m = std::max(m, std::abs(c.convert_to<double>()));
    return m;
}

double largest_real_root(const ComplexRootSet& s) {
    double best = -std::numeric_limits<double>::infinity();
    for (cd z : s.roots)
        if (z.imag() == 0.0) best = std::max(best, z.real());
    return best;
}

} // namespace

TEST_CASE("polynomial family at n = 1") {
    CHECK(f_poly(1) == IntPolynomial{-2, -2, 1});
    CHECK(g_poly(1) == IntPolynomial{2, -2, 1});
    CHECK(min_poly(1) == IntPolynomial{0, -4, 0, 4, -4, 1});
    CHECK(char_poly(1) == IntPolynomial{0, 0, -4, 0, 4, -4, 1});
}

TEST_CASE("polynomial family structure") {
    for (unsigned n = 1; n <= 30; ++n) {
        const IntPolynomial f = f_poly(n), g = g_poly(n);
        CHECK(f.degree() == static_cast<int>(n) + 1);
        CHECK(g - f == IntPolynomial{4});
        CHECK(f.leading() == 1);
        // Sum of the roots of f_n is 2.
        CHECK(f.coefficient(n) == -2);
        IntPolynomial expect = IntPolynomial::monomial(1, 2 * n + 3) - IntPolynomial::monomial(4, 2 * n + 2) +
                               IntPolynomial::monomial(4, 2 * n + 1) - IntPolynomial::monomial(4, 1);
        CHECK(min_poly(n) == expect);
        CHECK(char_poly(n) == x_poly() * min_poly(n));
    }
    CHECK_THROWS_AS(f_poly(0), DomainError);
}

TEST_CASE("kappa against frozen values") {
    CHECK(std::abs(solve_kappa(1).kappa - (std::sqrt(3.0) - 1.0) / 2.0) <= 1e-15);
    for (const Frozen& f : kKappa) {
        const KappaSolution s = solve_kappa(f.n);
        CHECK(s.n == f.n);
        CHECK(std::abs(s.kappa - f.value) <= 2e-15 * f.value);
        CHECK(s.residual < 1e-13);
    }
    CHECK_THROWS_AS(solve_kappa(0), DomainError);
}

TEST_CASE("kappa invariants") {
    double prev = 0.5;
    for (unsigned n = 1; n <= 40; ++n) {
        const KappaSolution s = solve_kappa(n);
        CHECK(s.kappa > 0.0);
        CHECK(s.kappa < prev);
        CHECK(s.residual < 1e-13);
        prev = s.kappa;
        // 2^-n > kappa_n > 2^-n (1 + 2^-n)^-n; the lower gap is ~n^2 4^-n
        // relative, below binary64 resolution past n = 25.
        const double p = std::ldexp(1.0, -static_cast<int>(n));
        CHECK(s.kappa < p);
        if (n <= 25) CHECK(s.kappa > p / std::pow(1.0 + p, n));
    }
    CHECK(std::abs(solve_kappa(20).kappa * std::ldexp(1.0, 20) - 1.0) < 1e-4);
}

TEST_CASE("r_n") {
    for (const Frozen& f : kR) CHECK(std::abs(solve_r(f.n) - f.value) <= 1e-14 * f.value);
    for (unsigned n = 5; n <= 30; ++n) {
        const double r = solve_r(n);
        const double p = std::ldexp(1.0, -static_cast<int>(n));
        CHECK(r > p);
        CHECK(r < p + 2.0 * n * p * p);
        const double gv = std::abs(g_poly(n).evaluate(2.0L - 2.0L * r));
        CHECK(gv < 1e-10 * max_abs_coefficient(g_poly(n)));
    }
    const double ratio = solve_r(20) / solve_kappa(20).kappa;
    CHECK(ratio > 0.999);
    CHECK(ratio < 1.001);
    CHECK_THROWS_AS(solve_r(4), DomainError);
    CHECK_THROWS_AS(solve_r(1), DomainError);
}

TEST_CASE("closed-form roots at n = 1") {
    const ComplexRootSet f = aberth_roots(f_poly(1));
    const ComplexRootSet g = aberth_roots(g_poly(1));
    REQUIRE(f.roots.size() == 2);
    REQUIRE(g.roots.size() == 2);
    const double s3 = std::sqrt(3.0);
    CHECK(contains(f.roots, {1.0 + s3, 0.0}, 1e-12));
    CHECK(contains(f.roots, {1.0 - s3, 0.0}, 1e-12));
    CHECK(contains(g.roots, {1.0, 1.0}, 1e-12));
    CHECK(contains(g.roots, {1.0, -1.0}, 1e-12));
}

TEST_CASE("Perron root of f_n") {
    for (unsigned n = 1; n <= 30; ++n) {
        const double k = solve_kappa(n).kappa;
        CHECK(std::abs(largest_real_root(aberth_roots(f_poly(n))) - (2.0 + 2.0 * k)) <= 1e-10);
        CHECK(std::abs(f_poly(n).evaluate(2.0L + 2.0L * k)) < 1e-9);
    }
}

TEST_CASE("root set properties") {
    for (unsigned n = 1; n <= 30; ++n) {
        const IntPolynomial fp = f_poly(n), gp = g_poly(n);
        const ComplexRootSet f = aberth_roots(fp), g = aberth_roots(gp);
        CHECK(f.roots.size() == n + 1);
        CHECK(g.roots.size() == n + 1);
        CHECK(f.degree == static_cast<int>(n) + 1);
        CHECK(f.max_residual() < 1e-9 * max_abs_coefficient(fp));
        CHECK(g.max_residual() < 1e-9 * max_abs_coefficient(gp));
        CHECK(min_pairwise_distance(f) > 1e-6);
        CHECK(min_pairwise_distance(g) > 1e-6);
        if (n <= 21) CHECK(min_cross_distance(f, g) > 1e-6);
        if (n >= 5) {
            // The real roots 2 + 2 kappa_n and 2 - 2 r_n are 2^{2-n} apart; every
            // other pair stays well separated.
            const double gap = 2.0 * (solve_kappa(n).kappa + solve_r(n));
            CHECK(std::abs(min_cross_distance(f, g) - gap) <= 1e-6 * gap);
            double others = std::numeric_limits<double>::infinity();
            for (cd a : f.roots)
                for (cd b : g.roots)
                    if (std::abs(a - 2.0) > 0.5 || std::abs(b - 2.0) > 0.5) others = std::min(others, std::abs(a - b));
            CHECK(others > 1e-6);
        }
        for (const ComplexRootSet* s : {&f, &g}) {
            cd sum = 0.0;
            for (cd z : s->roots) {
                sum += z;
                CHECK(contains(s->roots, std::conj(z), 1e-10));
            }
            CHECK(std::abs(sum - cd(2.0, 0.0)) <= 1e-8);
        }
    }
}

TEST_CASE("known factors are split off") {
    AberthOptions opt;
    opt.known_factors = {x_poly(), f_poly(4)};
    const ComplexRootSet all = aberth_roots(min_poly(4), opt);
    CHECK(all.roots.size() == 11);
    CHECK(std::count(all.roots.begin(), all.roots.end(), cd(0.0, 0.0)) == 1);
    const ComplexRootSet g = aberth_roots(g_poly(4));
    for (cd z : g.roots) CHECK(contains(all.roots, z, 1e-12));
}

TEST_CASE("root finder errors") {
    CHECK_THROWS_AS(aberth_roots(IntPolynomial{5}), DomainError);
    CHECK_THROWS_AS(aberth_roots(IntPolynomial{}), DomainError);
    try {
        aberth_roots(f_poly(10), 1e-13, 1);
        FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
        CHECK(e.best_iterate().size() == 11);
    }
    CHECK_THROWS_AS(aberth_roots(f_poly(3), 0.0, 50), DomainError);
}

TEST_CASE("annulus counts") {
    const auto classify = [](unsigned n) {
        return annulus_classify(n, aberth_roots(f_poly(n)), aberth_roots(g_poly(n)));
    };
    const AnnulusReport r6 = classify(6);
    CHECK(r6.f.outside_outer == 1);
    CHECK(r6.f.in_annulus == 6);
    CHECK(r6.f.inside_inner == 0);
    CHECK(r6.g.outside_outer == 1);
    CHECK(r6.g.in_annulus == 6);
    CHECK(r6.perron_root == doctest::Approx(2.0 + 2.0 * solve_kappa(6).kappa).epsilon(1e-14));
    REQUIRE(r6.subdominant_real_root.has_value());
    CHECK(*r6.subdominant_real_root == doctest::Approx(2.0 - 2.0 * solve_r(6)).epsilon(1e-12));

    for (unsigned n = 6; n <= 40; n += 1) {
        const AnnulusReport r = classify(n);
        CHECK(r.f.total() == static_cast<int>(n) + 1);
        CHECK(r.f.in_annulus == static_cast<int>(n));
        CHECK(r.g.in_annulus == static_cast<int>(n));
        CHECK(r.f.inside_inner == 0);
        CHECK(r.g.inside_inner == 0);
    }
    CHECK_FALSE(classify(4).subdominant_real_root.has_value());
}
