#include "tentspec/transfer.hpp"

#include "tentspec/errors.hpp"
#include "tentspec/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tentspec {

namespace {

double inf_norm(const Eigen::VectorXd& v) { return v.cwiseAbs().maxCoeff(); }

void require_same(const MarkovPartition& a, const MarkovPartition& b) {
    if (a.breakpoints() != b.breakpoints()) throw DimensionMismatch("densities live on different partitions");
}

} // namespace

double DensityVector::integral() const {
    const std::vector<double> len = interval_lengths(partition);
    if (len.size() != coefficients.size()) throw DimensionMismatch("density length does not match its partition");
    return std::inner_product(len.begin(), len.end(), coefficients.begin(), 0.0);
}

MarkovOperator::MarkovOperator(ExactMatrix adjacency, double scale, MarkovPartition partition)
    : adjacency_(std::move(adjacency)), scale_(scale), partition_(std::move(partition)) {
    if (!adjacency_.is_square() || adjacency_.rows() != partition_.size()) {
        throw DimensionMismatch("adjacency size does not match the partition");
    }
    if (!(scale_ > 0.0)) throw DomainError("operator scale must be positive");
    column_support_.resize(adjacency_.cols());
    for (std::size_t j = 0; j < adjacency_.cols(); ++j)
        for (std::size_t i = 0; i < adjacency_.rows(); ++i)
            if (adjacency_(i, j) != 0) column_support_[j].push_back(i);
}

std::vector<double> MarkovOperator::apply(const std::vector<double>& c) const {
    if (c.size() != size()) throw DimensionMismatch("coefficient vector has the wrong length");
    std::vector<double> out(size(), 0.0);
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i : column_support_[j]) out[i] += c[j];
    for (double& v : out) v /= scale_;
    return out;
}

Eigen::MatrixXd MarkovOperator::scaled() const {
    const auto m = static_cast<Eigen::Index>(size());
    Eigen::MatrixXd out(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            out(i, j) = adjacency_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).convert_to<double>() / scale_;
    return out;
}

MarkovOperator markov_operator(unsigned n, MapKind kind) {
    MarkovSystem sys = build_system(n, kind);
    return MarkovOperator(std::move(sys.adjacency), 2.0 + 2.0 * sys.kappa, std::move(sys.partition));
}

std::vector<double> perron_vector(const ExactMatrix& adjacency, double scale) {
    if (!adjacency.is_square()) throw DimensionMismatch("perron_vector: matrix must be square");
    const auto m = static_cast<Eigen::Index>(adjacency.rows());
    Eigen::MatrixXd a(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            a(i, j) = adjacency(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).convert_to<double>() / scale;

    const auto lu = (a - (1.0 + 1e-9) * Eigen::MatrixXd::Identity(m, m)).partialPivLu();
    Eigen::VectorXd v = Eigen::VectorXd::Ones(m);
    for (int it = 0; it < 6; ++it) {
        v = lu.solve(v);
        v /= inf_norm(v);
    }
    if (v.sum() < 0.0) v = -v;
    if (inf_norm(a * v - v) > 1e-8) throw IllConditioned("Perron vector residual above 1e-8");
    v /= v.sum();
    return {v.data(), v.data() + m};
}

DensityVector invariant_density(const MarkovOperator& op) {
    std::vector<double> c = perron_vector(op.adjacency(), op.scale());
    DensityVector d{op.partition(), std::move(c)};
    const double total = d.integral();
    for (double& v : d.coefficients) v /= total;
    return d;
}

DensityVector invariant_density(unsigned n, MapKind kind) { return invariant_density(markov_operator(n, kind)); }

std::vector<DensityVector> evolve_density(const MarkovOperator& op, const DensityVector& f0, unsigned k) {
    require_same(op.partition(), f0.partition);
    std::vector<DensityVector> out{f0};
    out.reserve(k + 1);
    for (unsigned step = 0; step < k; ++step) {
        out.push_back({op.partition(), op.apply(out.back().coefficients)});
    }
    return out;
}

double l1_distance(const DensityVector& a, const DensityVector& b) {
    require_same(a.partition, b.partition);
    const std::vector<double> len = interval_lengths(a.partition);
    double s = 0.0;
    for (std::size_t i = 0; i < len.size(); ++i) s += len[i] * std::abs(a.coefficients[i] - b.coefficients[i]);
    return s;
}

DensityVector indicator_density(const MarkovPartition& part, double lo, double hi) {
    const auto& bp = part.breakpoints();
    const auto has = [&](double x) {
        return std::any_of(bp.begin(), bp.end(), [x](double b) { return std::abs(b - x) <= 1e-12; });
    };
    if (!(lo < hi) || !has(lo) || !has(hi)) {
        throw DomainError("indicator support must be a union of partition intervals");
    }
    DensityVector d{part, std::vector<double>(part.size(), 0.0)};
    for (std::size_t i = 0; i < part.size(); ++i) {
        if (bp[i] >= lo - 1e-12 && bp[i + 1] <= hi + 1e-12) d.coefficients[i] = 1.0 / (hi - lo);
    }
    return d;
}

std::vector<double> deviation_norms(const MarkovOperator& op, const DensityVector& f0, unsigned steps) {
    require_same(op.partition(), f0.partition);
    const DensityVector star = invariant_density(op);
    const std::vector<double> len = interval_lengths(op.partition());
    const auto mass = [&](const std::vector<double>& v) {
        return std::inner_product(len.begin(), len.end(), v.begin(), 0.0);
    };
    const auto norm = [&](const std::vector<double>& v) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += len[i] * std::abs(v[i]);
        return s;
    };

    std::vector<double> d(f0.coefficients.size());
    const double m0 = f0.integral();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = f0.coefficients[i] - m0 * star.coefficients[i];
    std::vector<double> out{norm(d)};
    for (unsigned k = 0; k < steps; ++k) {
        d = op.apply(d);
        const double leak = mass(d);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= leak * star.coefficients[i];
        out.push_back(norm(d));
    }
    return out;
}

std::vector<double> uniform_grid(const Interval& ambient, std::size_t cells) {
    if (cells < 1) throw DomainError("uniform_grid needs at least one cell");
    std::vector<double> g(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) {
        g[i] = ambient.lo + ambient.length() * static_cast<double>(i) / static_cast<double>(cells);
    }
    g.back() = ambient.hi;
    return g;
}

UlamMatrix ulam_matrix(const PiecewiseLinearMap& map, const std::vector<double>& grid) {
    if (grid.size() < 2) throw DomainError("ulam_matrix needs at least one cell");
    if (std::abs(grid.front() - map.ambient().lo) > 1e-12 || std::abs(grid.back() - map.ambient().hi) > 1e-12) {
        throw DomainError("grid does not cover the ambient interval");
    }
    const std::size_t m = grid.size() - 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (!(grid[i + 1] - grid[i] >= 1e-12)) throw DegenerateCell("grid cell " + std::to_string(i) + " is degenerate");
    }

    UlamMatrix u{grid, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m))};
    for (std::size_t j = 0; j < m; ++j) {
        const double cell_len = grid[j + 1] - grid[j];
        for (const Branch& b : map.branches()) {
            const double lo = std::max(grid[j], b.domain.lo);
            const double hi = std::min(grid[j + 1], b.domain.hi);
            if (!(hi > lo)) continue;
            const double y0 = std::min(b(lo), b(hi));
            const double y1 = std::max(b(lo), b(hi));
            const double inv_slope = 1.0 / std::abs(b.slope);
            // Target cells overlapping [y0, y1].
            auto it = std::upper_bound(grid.begin(), grid.end(), y0);
            std::size_t i = (it == grid.begin()) ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
            for (; i < m && grid[i] < y1; ++i) {
                const double overlap = std::min(y1, grid[i + 1]) - std::max(y0, grid[i]);
                if (overlap > 0.0) {
                    u.p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += overlap * inv_slope / cell_len;
                }
            }
        }
    }
    return u;
}

std::vector<std::complex<double>> ulam_spectrum(const UlamMatrix& u) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(u.p, false);
    if (es.info() != Eigen::Success) throw NoConvergence("Ulam eigenvalue solver failed");
    std::vector<std::complex<double>> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::stable_sort(ev.begin(), ev.end(), [](auto a, auto b) { return std::abs(a) > std::abs(b); });
    return ev;
}

double fit_decay_rate(const std::vector<double>& norms, std::size_t burn_in) {
    if (norms.size() < burn_in + 10) throw DomainError("fit_decay_rate needs at least burn_in + 10 norms");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double count = 0.0;
    for (std::size_t k = burn_in; k < norms.size(); ++k) {
        if (!(norms[k] > 0.0)) throw NonPositiveNorm("norm at step " + std::to_string(k) + " is not positive");
        const double x = static_cast<double>(k);
        const double y = std::log(norms[k]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        count += 1.0;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    return std::exp(slope);
}

} // namespace tentspec
