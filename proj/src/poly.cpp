#include "tentspec/poly.hpp"

#include "tentspec/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tentspec {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;
using WideComplex = boost::multiprecision::cpp_complex_50;
using cd = std::complex<double>;

IntPolynomial tent_poly(unsigned n, int constant) {
    if (n < 1) throw DomainError("polynomial family index must be >= 1");
    std::vector<BigInt> c(n + 2);
    c[0] = constant;
    c[n] = -2;
    c[n + 1] = 1;
    return IntPolynomial(std::move(c));
}

std::vector<double> to_double(const IntPolynomial& p) {
    std::vector<double> c;
    c.reserve(p.coefficients().size());
    for (const BigInt& v : p.coefficients()) c.push_back(v.convert_to<double>());
    return c;
}

// p(z) and p'(z) by Horner.
std::pair<cd, cd> horner(const std::vector<double>& c, cd z) {
    cd p = 0.0;
    cd dp = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

std::pair<WideComplex, WideComplex> horner(const IntPolynomial& poly, const WideComplex& z) {
    WideComplex p = 0;
    WideComplex dp = 0;
    const auto& c = poly.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + WideComplex(Wide(*it));
    }
    return {p, dp};
}

std::vector<cd> aberth_sweep(const std::vector<double>& c, double tol, int max_iters) {
    const int deg = static_cast<int>(c.size()) - 1;
    const double lead = c.back();
    if (deg == 1) return {cd(-c[0] / lead, 0.0)};

    double bound = 0.0;
    for (int k = 0; k < deg; ++k) {
        bound = std::max(bound, std::pow(std::abs(c[static_cast<std::size_t>(k)] / lead), 1.0 / (deg - k)));
    }
    const double radius = 0.8 * (1.0 + bound);
    std::vector<cd> z(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / deg + 0.4 / deg;
        z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
    }

    std::vector<cd> step(z.size());
    for (int iter = 0; iter < max_iters; ++iter) {
        double worst = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            const auto [p, dp] = horner(c, z[k]);
            if (p == 0.0) {
                step[k] = 0.0;
                continue;
            }
            const cd ratio = p / dp;
            cd repulsion = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            }
            step[k] = ratio / (1.0 - ratio * repulsion);
            worst = std::max(worst, std::abs(step[k]) / (1.0 + std::abs(z[k])));
        }
        for (std::size_t k = 0; k < z.size(); ++k) z[k] -= step[k];
        if (worst < tol) return z;
    }
    throw NoConvergence("Aberth iteration did not converge", z);
}

// Newton refinement in 50-digit arithmetic. Near-real roots of a real
// polynomial are snapped onto the axis first.
WideComplex polish(const IntPolynomial& p, cd z0) {
    if (std::abs(z0.imag()) < 1e-12 * (1.0 + std::abs(z0))) z0.imag(0.0);
    WideComplex z(Wide(z0.real()), Wide(z0.imag()));
    for (int i = 0; i < 8; ++i) {
        const auto [v, dv] = horner(p, z);
        if (v == WideComplex(0) || dv == WideComplex(0)) break;
        const WideComplex dz = v / dv;
        z -= dz;
        if (abs(dz) < Wide("1e-45") * (1 + abs(z))) break;
    }
    const cd out(z.real().convert_to<double>(), z.imag().convert_to<double>());
    if (std::abs(out - z0) > 1e-6 * (1.0 + std::abs(z0))) {
        throw NoConvergence("Newton polishing left the Aberth basin", {z0});
    }
    return z;
}

void append_roots(const IntPolynomial& factor, const IntPolynomial& whole, double tol, int max_iters,
                  ComplexRootSet& out) {
    if (factor.degree() < 1) return;
    for (const cd& z : aberth_sweep(to_double(factor), tol, max_iters)) {
        const WideComplex w = polish(factor, z);
        out.roots.emplace_back(w.real().convert_to<double>(), w.imag().convert_to<double>());
        out.residuals.push_back(abs(horner(whole, w).first).convert_to<double>());
    }
}

} // namespace

IntPolynomial f_poly(unsigned n) { return tent_poly(n, -2); }
IntPolynomial g_poly(unsigned n) { return tent_poly(n, 2); }
IntPolynomial min_poly(unsigned n) { return x_poly() * f_poly(n) * g_poly(n); }
IntPolynomial char_poly(unsigned n) { return x_poly() * min_poly(n); }

KappaSolution solve_kappa(unsigned n) {
    if (n < 1) throw DomainError("solve_kappa requires n >= 1");
    using LD = long double;
    const auto phi = [n](LD k) { return std::pow(2.0L + 2.0L * k, static_cast<LD>(n)) * k - 1.0L; };
    const auto dphi = [n](LD k) {
        return std::pow(2.0L + 2.0L * k, static_cast<LD>(n) - 1.0L) * (2.0L * n * k + 2.0L + 2.0L * k);
    };
    LD lo = 0.0L;
    LD hi = 0.5L;
    LD k = std::ldexp(1.0L, -static_cast<int>(n));
    for (int iter = 0; iter < 400; ++iter) {
        const LD v = phi(k);
        if (v == 0.0L) break;
        (v < 0.0L ? lo : hi) = k;
        LD next = k - v / dphi(k);
        if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
        const bool done = std::abs(next - k) <= 4.0L * std::numeric_limits<LD>::epsilon() * next;
        k = next;
        if (done) break;
    }
    KappaSolution s;
    s.n = n;
    s.kappa = static_cast<double>(k);
    s.residual = static_cast<double>(std::abs(phi(static_cast<LD>(s.kappa))));
    return s;
}

double solve_r(unsigned n) {
    if (n < 5) throw DomainError("the real root 2 - 2 r_n of g_n is only bracketed for n >= 5");
    using LD = long double;
    // g_n(2 - 2r) = -2 (2^n r (1 - r)^n - 1).
    const auto psi = [n](LD r) {
        return std::ldexp(1.0L, static_cast<int>(n)) * r * std::pow(1.0L - r, static_cast<LD>(n)) - 1.0L;
    };
    LD lo = std::ldexp(1.0L, -static_cast<int>(n));
    LD hi = lo + 2.0L * n * std::ldexp(1.0L, -2 * static_cast<int>(n));
    if (!(psi(lo) < 0.0L && psi(hi) > 0.0L)) {
        throw DomainError("g_n has no sign change on the r_n bracket");
    }
    for (int iter = 0; iter < 200 && hi - lo > 2.0L * std::numeric_limits<LD>::epsilon() * lo; ++iter) {
        const LD mid = 0.5L * (lo + hi);
        (psi(mid) < 0.0L ? lo : hi) = mid;
    }
    return static_cast<double>(0.5L * (lo + hi));
}

double ComplexRootSet::max_residual() const {
    return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

ComplexRootSet aberth_roots(const IntPolynomial& p, const AberthOptions& options) {
    if (p.degree() < 1) throw DomainError("aberth_roots requires degree >= 1");
    if (!(options.tol > 0.0) || options.max_iters < 1) throw DomainError("aberth_roots: tol > 0 and max_iters >= 1");
    ComplexRootSet out;
    out.degree = p.degree();
    IntPolynomial rest = p;
    for (const IntPolynomial& f : options.known_factors) {
        rest = exact_quotient(rest, f);
        append_roots(f, p, options.tol, options.max_iters, out);
    }
    append_roots(rest, p, options.tol, options.max_iters, out);
    return out;
}

ComplexRootSet aberth_roots(const IntPolynomial& p, double tol, int max_iters) {
    AberthOptions o;
    o.tol = tol;
    o.max_iters = max_iters;
    return aberth_roots(p, o);
}

AnnulusReport annulus_classify(unsigned n, const ComplexRootSet& roots_f, const ComplexRootSet& roots_g) {
    if (n < 1) throw DomainError("annulus_classify requires n >= 1");
    const double inner = 1.0 - 1.0 / n;
    const double outer = 1.0 + 1.0 / n;
    const auto count = [&](const ComplexRootSet& s) {
        RegionCounts rc;
        for (const cd& z : s.roots) {
            const double m = std::abs(z);
            if (m < inner) ++rc.inside_inner;
            else if (m > outer) ++rc.outside_outer;
            else ++rc.in_annulus;
        }
        return rc;
    };
    AnnulusReport rep;
    rep.n = n;
    rep.f = count(roots_f);
    rep.g = count(roots_g);

    const auto by_modulus = [](const cd& a, const cd& b) { return std::abs(a) < std::abs(b); };
    if (roots_f.roots.empty()) throw DomainError("annulus_classify: empty root set for f_n");
    rep.perron_root = std::max_element(roots_f.roots.begin(), roots_f.roots.end(), by_modulus)->real();

    if (n >= 5 && !roots_g.roots.empty()) {
        const cd top = *std::max_element(roots_g.roots.begin(), roots_g.roots.end(), by_modulus);
        if (std::abs(top.imag()) <= 1e-9 * std::abs(top) && top.real() > 1.0) {
            rep.subdominant_real_root = top.real();
        }
    }
    return rep;
}

double min_pairwise_distance(const ComplexRootSet& roots) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.roots.size(); ++j)
            best = std::min(best, std::abs(roots.roots[i] - roots.roots[j]));
    return best;
}

double min_cross_distance(const ComplexRootSet& a, const ComplexRootSet& b) {
    double best = std::numeric_limits<double>::infinity();
    for (const cd& x : a.roots)
        for (const cd& y : b.roots) best = std::min(best, std::abs(x - y));
    return best;
}

} // namespace tentspec
