#include <doctest.h>

#include "tentspec/errors.hpp"
#include "tentspec/exact.hpp"
#include "tentspec/markov.hpp"
#include "tentspec/poly.hpp"
#include "tentspec/spectral.hpp"
#include "tentspec/transfer.hpp"

#include <cmath>
#include <numeric>

using namespace tentspec;
using cd = std::complex<double>;

namespace {

// Observed |lambda_2| of the 256-cell uniform Ulam matrix at n = 3 is 0.6588
// against 0.7079 for M_3; 512 cells give 0.6744.
constexpr double kUlamTolerance256 = 0.06;

double lambda2(unsigned n) { return spectral_report(n).second_modulus_M; }

DensityVector left_half(const MarkovOperator& op) { return indicator_density(op.partition(), -1.0, 0.0); }

double normalized_direction_error(std::vector<double> a, std::vector<double> b) {
    const double sa = std::accumulate(a.begin(), a.end(), 0.0), sb = std::accumulate(b.begin(), b.end(), 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] / sa - b[i] / sb));
    return worst;
}

} // namespace

TEST_CASE("operator action at n = 1") {
    const MarkovOperator op = markov_operator(1, MapKind::full);
    const double s = 2.0 + 2.0 * solve_kappa(1).kappa;
    CHECK(op.scale() == s);
    const std::vector<double> y = op.apply({0, 0, 1, 0, 0, 0});
    const std::vector<double> expect{1 / s, 1 / s, 1 / s, 0, 0, 0};
    for (std::size_t i = 0; i < 6; ++i) CHECK(y[i] == expect[i]);
    CHECK_THROWS_AS(op.apply({1.0, 2.0}), DimensionMismatch);
}

TEST_CASE("integral conservation") {
    for (unsigned n = 1; n <= 12; ++n) {
        for (MapKind kind : {MapKind::full, MapKind::folded}) {
            const MarkovOperator op = markov_operator(n, kind);
            const auto len = interval_lengths(op.partition());
            const Eigen::MatrixXd m = op.scaled();
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                double col = 0.0;
                for (Eigen::Index i = 0; i < m.rows(); ++i) col += len[static_cast<std::size_t>(i)] * m(i, j);
                CHECK(std::abs(col - len[static_cast<std::size_t>(j)]) <= 1e-10);
            }
        }
    }
}

TEST_CASE("scaled operator has spectral radius one") {
    for (unsigned n = 1; n <= 5; ++n) {
        const OracleSpectrum o = oracle_eigenvalues(Eigen::MatrixXcd(markov_operator(n, MapKind::full).scaled().cast<cd>()));
        double r = 0.0;
        for (cd z : o.values) r = std::max(r, std::abs(z));
        CHECK(std::abs(r - 1.0) <= 1e-10);
    }
}

TEST_CASE("invariant densities") {
    for (unsigned n = 1; n <= 10; ++n) {
        const DensityVector f = invariant_density(n, MapKind::full);
        const auto& c = f.coefficients;
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(std::abs(c[i] - c[c.size() - 1 - i]) <= 1e-9);
            CHECK(c[i] >= -1e-12);
        }
        CHECK(std::abs(f.integral() - 1.0) <= 1e-12);

        const double s = 2.0 + 2.0 * solve_kappa(n).kappa;
        const ExactMatrix cn = symmetric_restriction(build_system(n, MapKind::full).adjacency, n);
        const std::vector<double> w = perron_vector(cn, s);
        const ExactMatrix iota = inclusion_iota(n);
        std::vector<double> iw(iota.rows(), 0.0);
        for (std::size_t i = 0; i < iota.rows(); ++i)
            for (std::size_t j = 0; j < iota.cols(); ++j) iw[i] += iota(i, j).convert_to<double>() * w[j];
        const std::vector<double> b = perron_vector(build_system(n, MapKind::folded).adjacency, s);
        CHECK(normalized_direction_error(iw, b) <= 1e-9);
    }
}

TEST_CASE("Perron vector errors") {
    CHECK_THROWS_AS(perron_vector(build_system(2, MapKind::full).adjacency, 2.0), IllConditioned);
    CHECK_THROWS_AS(perron_vector(ExactMatrix(2, 3), 1.0), DimensionMismatch);
}

TEST_CASE("evolution") {
    const MarkovOperator op = markov_operator(3, MapKind::full);
    const DensityVector fs = invariant_density(op);
    for (const DensityVector& f : evolve_density(op, fs, 50)) CHECK(l1_distance(f, fs) <= 1e-9);

    const auto traj = evolve_density(op, left_half(op), 200);
    CHECK(traj.size() == 201);
    for (const DensityVector& f : traj) {
        CHECK(std::abs(f.integral() - 1.0) <= 1e-10);
        for (double c : f.coefficients) CHECK(c >= -1e-12);
    }
    CHECK(l1_distance(traj.back(), fs) < l1_distance(traj.front(), fs));
}

TEST_CASE("decay rate at n = 3") {
    const MarkovOperator op = markov_operator(3, MapKind::full);
    const double rate = fit_decay_rate(deviation_norms(op, left_half(op), 200));
    CHECK(std::abs(rate - lambda2(3)) <= 0.05 * lambda2(3));
}

TEST_CASE("folded mixing is fast") {
    for (unsigned n = 6; n <= 10; ++n) {
        const MarkovOperator full = markov_operator(n, MapKind::full);
        const MarkovOperator folded = markov_operator(n, MapKind::folded);
        const double rf = fit_decay_rate(deviation_norms(full, left_half(full), 200));
        const DensityVector start = indicator_density(folded.partition(), 0.0, 0.5);
        const double rt = fit_decay_rate(deviation_norms(folded, start, 200));
        CHECK(rt <= 0.62);
        CHECK(rf >= 0.9);
    }
}

TEST_CASE("indicator densities") {
    const MarkovPartition p = markov_operator(2, MapKind::full).partition();
    const DensityVector d = indicator_density(p, -1.0, 0.0);
    CHECK(std::abs(d.integral() - 1.0) <= 1e-15);
    CHECK_THROWS_AS(indicator_density(p, -1.0, 0.1), DomainError);
    CHECK_THROWS_AS(indicator_density(p, 0.5, 0.5), DomainError);
}

TEST_CASE("decay fitting") {
    std::vector<double> g(60);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::pow(0.9, static_cast<double>(k));
    CHECK(std::abs(fit_decay_rate(g) - 0.9) <= 1e-12);
    CHECK(std::abs(fit_decay_rate(std::vector<double>(40, 3.0)) - 1.0) <= 1e-15);
    g[30] = 0.0;
    CHECK_THROWS_AS(fit_decay_rate(g), NonPositiveNorm);
    CHECK_THROWS_AS(fit_decay_rate(std::vector<double>(21, 1.0)), DomainError);
}

TEST_CASE("Ulam matrices are row-stochastic") {
    const double k = solve_kappa(3).kappa;
    for (std::size_t cells : {7u, 64u, 100u}) {
        for (const PiecewiseLinearMap& map : {make_paired_tent(k), make_folded_tent(k), make_paired_tent(0.25)}) {
            const UlamMatrix u = ulam_matrix(map, uniform_grid(map.ambient(), cells));
            for (Eigen::Index i = 0; i < u.p.rows(); ++i) CHECK(std::abs(u.p.row(i).sum() - 1.0) <= 1e-12);
            CHECK(u.p.minCoeff() >= 0.0);
        }
    }
}

TEST_CASE("Ulam on the Markov grid reproduces M_n") {
    for (unsigned n = 1; n <= 6; ++n) {
        for (MapKind kind : {MapKind::full, MapKind::folded}) {
            const MarkovOperator op = markov_operator(n, kind);
            const UlamMatrix u = ulam_matrix(make_map(kind, solve_kappa(n).kappa), op.partition().breakpoints());
            const OracleSpectrum a = oracle_eigenvalues(Eigen::MatrixXcd(op.scaled().cast<cd>()));
            const OracleSpectrum b = oracle_eigenvalues(Eigen::MatrixXcd(u.p.cast<cd>()));
            CHECK(multiset_distance(a.values, b.values) <= 1e-8);
        }
    }
}

TEST_CASE("uniform Ulam approximation at n = 3") {
    const PiecewiseLinearMap map = make_paired_tent(solve_kappa(3).kappa);
    const auto s256 = ulam_spectrum(ulam_matrix(map, uniform_grid(map.ambient(), 256)));
    CHECK(std::abs(s256[0] - 1.0) <= 1e-10);
    const double err256 = std::abs(std::abs(s256[1]) - lambda2(3));
    CHECK(err256 <= kUlamTolerance256);
    const auto s512 = ulam_spectrum(ulam_matrix(map, uniform_grid(map.ambient(), 512)));
    CHECK(std::abs(std::abs(s512[1]) - lambda2(3)) < err256);
}

TEST_CASE("Ulam grid validation") {
    const PiecewiseLinearMap map = make_paired_tent(0.3);
    CHECK_THROWS_AS(ulam_matrix(map, {-1.0, 0.0, 1e-13, 1.0}), DegenerateCell);
    CHECK_THROWS_AS(ulam_matrix(map, {-1.0, 0.5}), DomainError);
    CHECK_THROWS_AS(uniform_grid(map.ambient(), 0), DomainError);
    CHECK(uniform_grid(map.ambient(), 4) == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
}
