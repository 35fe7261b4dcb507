#include "tentspec/spectral.hpp"

#include "tentspec/errors.hpp"
#include "tentspec/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace tentspec {

namespace {

using cd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

constexpr std::uint64_t kSeed = 0x7e57c0deULL;

VectorXcd random_unit(Eigen::Index m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    VectorXcd v(m);
    for (Eigen::Index i = 0; i < m; ++i) v(i) = cd(u(rng), u(rng));
    return v / v.norm();
}

struct Eigenpair {
    cd value;
    VectorXcd vec;
};

// Rayleigh quotient iteration from a random shift inside the spectral bound.
std::optional<Eigenpair> rayleigh(const MatrixXcd& b, double scale, std::mt19937_64& rng) {
    const Eigen::Index m = b.rows();
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    VectorXcd v = random_unit(m, rng);
    cd mu(u(rng) * scale, u(rng) * scale);
    const MatrixXcd id = MatrixXcd::Identity(m, m);
    for (int it = 0; it < 100; ++it) {
        VectorXcd w = (b - mu * id).partialPivLu().solve(v);
        if (!w.allFinite() || w.norm() == 0.0) {
            mu += cd(1e-9, 1e-9) * scale;
            continue;
        }
        v = w / w.norm();
        mu = v.dot(b * v);
        if ((b * v - mu * v).norm() <= 1e-13 * scale) return Eigenpair{mu, v};
    }
    return std::nullopt;
}

// Inverse iteration at a fixed shift on the original matrix.
Eigenpair refine(const MatrixXcd& a, cd mu, std::mt19937_64& rng) {
    const Eigen::Index m = a.rows();
    const cd shift = mu + cd(1e-11, 1e-11) * (1.0 + std::abs(mu));
    const auto lu = (a - shift * MatrixXcd::Identity(m, m)).partialPivLu();
    VectorXcd v = random_unit(m, rng);
    for (int it = 0; it < 4; ++it) {
        VectorXcd w = lu.solve(v);
        if (!w.allFinite() || w.norm() == 0.0) break;
        v = w / w.norm();
    }
    const cd rq = v.dot(a * v);
    return {std::abs(rq - mu) < 1e-6 * (1.0 + std::abs(mu)) ? rq : mu, v};
}

// A cluster of k computed values must come with a k-dimensional null space;
// fewer means a Jordan block, which the iteration cannot resolve.
void reject_defective(const MatrixXcd& a, const std::vector<cd>& values, double scale) {
    const Eigen::Index m = a.rows();
    std::vector<bool> seen(values.size(), false);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cluster{i};
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (!seen[j] && std::abs(values[j] - values[i]) <= 1e-4 * (1.0 + std::abs(values[i]))) cluster.push_back(j);
        }
        for (std::size_t j : cluster) seen[j] = true;
        if (cluster.size() < 2) continue;
        cd centre = 0.0;
        for (std::size_t j : cluster) centre += values[j];
        centre /= static_cast<double>(cluster.size());
        const Eigen::JacobiSVD<MatrixXcd> svd(a - centre * MatrixXcd::Identity(m, m));
        const auto& sv = svd.singularValues();
        std::size_t null = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k) null += sv(k) <= 1e-8 * scale ? 1 : 0;
        if (null < cluster.size()) {
            throw NoConvergence("oracle: defective eigenvalue cluster near " + std::to_string(centre.real()) + "+" +
                                    std::to_string(centre.imag()) + "i",
                                values);
        }
    }
}

double inf_norm(const VectorXcd& v) { return v.cwiseAbs().maxCoeff(); }

} // namespace

const char* to_string(Symmetry s) noexcept {
    switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::antisymmetric: return "antisymmetric";
    case Symmetry::kernel: return "kernel";
    }
    return "?";
}

MatrixXcd to_complex(const ExactMatrix& m) {
    MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).convert_to<double>();
    return out;
}

OracleSpectrum oracle_eigenvalues(const MatrixXcd& a) {
    if (a.rows() != a.cols() || a.rows() == 0) throw DimensionMismatch("oracle_eigenvalues: matrix must be square");
    std::mt19937_64 rng(kSeed);
    const double scale = std::max(1.0, a.norm());

    std::vector<cd> raw;
    MatrixXcd b = a;
    while (b.rows() > 1) {
        std::optional<Eigenpair> pair;
        for (int attempt = 0; attempt < 30 && !pair; ++attempt) pair = rayleigh(b, scale, rng);
        if (!pair) throw NoConvergence("oracle: Rayleigh iteration failed to settle", raw);
        raw.push_back(pair->value);

        // Wielandt: B - x row_i(B) / x_i has a zero row i.
        Eigen::Index i = 0;
        pair->vec.cwiseAbs().maxCoeff(&i);
        const MatrixXcd deflated = b - pair->vec * (b.row(i) / pair->vec(i));
        const Eigen::Index m = b.rows() - 1;
        MatrixXcd next(m, m);
        for (Eigen::Index r = 0, rr = 0; r < b.rows(); ++r) {
            if (r == i) continue;
            for (Eigen::Index c = 0, cc = 0; c < b.cols(); ++c) {
                if (c == i) continue;
                next(rr, cc++) = deflated(r, c);
            }
            ++rr;
        }
        b = std::move(next);
    }
    raw.push_back(b(0, 0));

    OracleSpectrum out;
    for (const cd& mu : raw) {
        const Eigenpair p = refine(a, mu, rng);
        out.values.push_back(p.value);
        out.residuals.push_back((a * p.vec - p.value * p.vec).norm() / p.vec.norm());
    }
    reject_defective(a, out.values, scale);
    return out;
}

OracleSpectrum oracle_eigenvalues(const ExactMatrix& a) { return oracle_eigenvalues(to_complex(a)); }

double multiset_distance(std::vector<cd> a, std::vector<cd> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    // Repeatedly pair off the globally closest remaining pair.
    while (!a.empty()) {
        std::size_t bi = 0;
        std::size_t bj = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                if (const double d = std::abs(a[i] - b[j]); d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
        worst = std::max(worst, best);
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(bi));
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return worst;
}

ClassifiedEigenpair eigvec_for_root(const ExactMatrix& a, const ExactMatrix& j, cd lambda) {
    if (!a.is_square() || !j.is_square() || a.rows() != j.rows()) {
        throw DimensionMismatch("eigvec_for_root: A and J must be square of equal size");
    }
    ClassifiedEigenpair out;
    out.eigenvalue = lambda;
    const MatrixXcd ac = to_complex(a);
    const MatrixXcd jc = to_complex(j);
    const Eigen::Index m = ac.rows();

    if (std::abs(lambda) < 1e-9) {
        const auto basis = kernel_basis(a);
        if (basis.empty()) throw IllConditioned("lambda = 0 requested but the matrix is invertible");
        out.vector.resize(m);
        for (Eigen::Index i = 0; i < m; ++i) out.vector(i) = basis.front()[static_cast<std::size_t>(i)].convert_to<double>();
        out.vector /= inf_norm(out.vector);
        out.symmetry = Symmetry::kernel;
        out.residual = inf_norm(ac * out.vector);
        out.symmetry_ratio = std::numeric_limits<double>::infinity();
        return out;
    }

    std::mt19937_64 rng(kSeed);
    const MatrixXcd id = MatrixXcd::Identity(m, m);
    for (int attempt = 0; attempt < 3; ++attempt) {
        const cd shift = lambda + cd(1e-10, 1e-10) * (1.0 + std::abs(lambda)) * static_cast<double>(attempt + 1);
        const auto lu = (ac - shift * id).partialPivLu();
        VectorXcd v = random_unit(m, rng);
        for (int it = 0; it < 5; ++it) {
            VectorXcd w = lu.solve(v);
            if (!w.allFinite()) break;
            v = w / inf_norm(w);
        }
        // Rotate so the largest entry is real and positive.
        Eigen::Index top = 0;
        v.cwiseAbs().maxCoeff(&top);
        v *= std::conj(v(top)) / std::abs(v(top));
        v /= inf_norm(v);
        const double res = inf_norm(ac * v - lambda * v);
        if (!(res <= 1e-6)) continue;

        const double plus = inf_norm(jc * v - v);
        const double minus = inf_norm(jc * v + v);
        out.vector = v;
        out.residual = res;
        out.symmetry_ratio = std::max(plus, minus) / std::max(std::min(plus, minus), 1e-300);
        if (plus <= 1e-6 * minus) out.symmetry = Symmetry::symmetric;
        else if (minus <= 1e-6 * plus) out.symmetry = Symmetry::antisymmetric;
        else throw IllConditioned("eigenvector mixes the symmetric and antisymmetric parts");
        return out;
    }
    throw IllConditioned("inverse iteration residual stayed above 1e-6");
}

SpectralReport spectral_report(unsigned n) {
    if (n < 1) throw DomainError("spectral_report requires n >= 1");
    SpectralReport rep;
    rep.n = n;
    rep.kappa_n = solve_kappa(n).kappa;
    if (n >= 5) rep.r_n = solve_r(n);
    const double scale = 2.0 + 2.0 * rep.kappa_n;

    const ComplexRootSet rf = aberth_roots(f_poly(n));
    const ComplexRootSet rg = aberth_roots(g_poly(n));
    rep.annulus = annulus_classify(n, rf, rg);

    std::size_t perron = 0;
    for (std::size_t i = 1; i < rf.roots.size(); ++i) {
        if (std::abs(rf.roots[i]) > std::abs(rf.roots[perron])) perron = i;
    }
    double second_f = 0.0;
    for (std::size_t i = 0; i < rf.roots.size(); ++i) {
        if (i != perron) second_f = std::max(second_f, std::abs(rf.roots[i]));
    }
    double second_g = 0.0;
    for (const cd& z : rg.roots) second_g = std::max(second_g, std::abs(z));

    rep.spectral_radius_A = std::abs(rf.roots[perron]);
    rep.spectral_radius_M = rep.spectral_radius_A / scale;
    rep.second_modulus_M = std::max(second_f, second_g) / scale;
    rep.second_modulus_folded = second_f / scale;
    rep.second_modulus_bound_factor = (1.0 + 1.0 / n) / scale;
    rep.mixing_time_full = 1.0 / std::abs(std::log(rep.second_modulus_M));
    if (n >= 6) rep.mixing_time_folded_bound = 1.0 / std::abs(std::log(rep.second_modulus_bound_factor));
    return rep;
}

} // namespace tentspec
