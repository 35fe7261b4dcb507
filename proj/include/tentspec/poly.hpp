#pragma once

/**
 * @file poly.hpp
 * @brief The polynomial family f_n, g_n, the parameters kappa_n and r_n, and
 *        simultaneous root finding.
 *
 *   f_n(x) = x^n (x - 2) - 2,   g_n(x) = x^n (x - 2) + 2,
 *   m_n(x) = x f_n(x) g_n(x),   chi_n(x) = x m_n(x).
 *
 * kappa_n is the root in (0, 1/2) of (2 + 2k)^n k = 1; 2 + 2 kappa_n is the
 * Perron root of f_n. For n >= 5, g_n has a real root 2 - 2 r_n just below 2.
 */

#include "tentspec/polynomial.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace tentspec {

IntPolynomial f_poly(unsigned n);
IntPolynomial g_poly(unsigned n);
/// x f_n g_n.
IntPolynomial min_poly(unsigned n);
/// x^2 f_n g_n.
IntPolynomial char_poly(unsigned n);

struct KappaSolution {
    unsigned n = 0;
    double kappa = 0.0;
    /// |(2 + 2 kappa)^n kappa - 1| evaluated in extended precision.
    double residual = 0.0;
};

/// Safeguarded Newton on (2+2k)^n k - 1 over the bracket (0, 1/2).
KappaSolution solve_kappa(unsigned n);

/// r_n with g_n(2 - 2 r_n) = 0, by bisection on [2^-n, 2^-n + 2n 4^-n].
/// Only defined for n >= 5.
double solve_r(unsigned n);

struct ComplexRootSet {
    std::vector<std::complex<double>> roots;
    /// |p(z)| at the extended-precision iterate each root was rounded from.
    std::vector<double> residuals;
    int degree = 0;

    double max_residual() const;
};

struct AberthOptions {
    double tol = 1e-13;
    int max_iters = 200;
    /// Exact factors of p whose roots are found separately and never handed
    /// to the simultaneous iteration together with the rest.
    std::vector<IntPolynomial> known_factors;
};

/// All complex roots of p. Throws NoConvergence (carrying the best iterate)
/// when the sweep does not settle within max_iters.
ComplexRootSet aberth_roots(const IntPolynomial& p, const AberthOptions& options = {});
ComplexRootSet aberth_roots(const IntPolynomial& p, double tol, int max_iters);

struct RegionCounts {
    int inside_inner = 0;
    int in_annulus = 0;
    int outside_outer = 0;

    int total() const noexcept { return inside_inner + in_annulus + outside_outer; }
};

struct AnnulusReport {
    unsigned n = 0;
    RegionCounts f;
    RegionCounts g;
    double perron_root = 0.0;
    /// The real root 2 - 2 r_n of g_n, reported for n >= 5.
    std::optional<double> subdominant_real_root;
};

/// Counts roots of f_n and g_n against the circles of radius 1 -+ 1/n.
AnnulusReport annulus_classify(unsigned n, const ComplexRootSet& roots_f, const ComplexRootSet& roots_g);

/// Smallest distance between two roots of one set (infinity for < 2 roots).
double min_pairwise_distance(const ComplexRootSet& roots);

/// Smallest distance between a root of a and a root of b.
double min_cross_distance(const ComplexRootSet& a, const ComplexRootSet& b);

} // namespace tentspec
