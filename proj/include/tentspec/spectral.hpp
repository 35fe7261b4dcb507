#pragma once

/**
 * @file spectral.hpp
 * @brief Per-n spectral reports for the tent family, eigenvector symmetry
 *        classification and an independent dense eigenvalue oracle.
 *
 * M_n = A_n / (2 + 2 kappa_n). Eigenvalues of M_n are taken from the roots of
 * f_n and g_n; the oracle only serves as a cross-check at small sizes.
 */

#include "tentspec/matrix.hpp"
#include "tentspec/poly.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

namespace tentspec {

struct SpectralReport {
    unsigned n = 0;
    double kappa_n = 0.0;
    std::optional<double> r_n;
    double spectral_radius_A = 0.0;
    double spectral_radius_M = 0.0;
    /// Largest modulus among the non-Perron roots of f_n g_n, over 2 + 2 kappa_n.
    double second_modulus_M = 0.0;
    /// Same for the folded operator B_n / (2 + 2 kappa_n): roots of f_n only.
    double second_modulus_folded = 0.0;
    /// (1 + 1/n) / (2 + 2 kappa_n).
    double second_modulus_bound_factor = 0.0;
    double mixing_time_full = 0.0;
    /// 1 / |log((1 + 1/n) / (2 + 2 kappa_n))|, only for n >= 6.
    std::optional<double> mixing_time_folded_bound;
    AnnulusReport annulus;
};

SpectralReport spectral_report(unsigned n);

enum class Symmetry { symmetric, antisymmetric, kernel };

const char* to_string(Symmetry s) noexcept;

struct ClassifiedEigenpair {
    std::complex<double> eigenvalue;
    Eigen::VectorXcd vector;
    Symmetry symmetry = Symmetry::kernel;
    /// ||A v - lambda v||_inf with ||v||_inf = 1.
    double residual = 0.0;
    /// max(||Jv - v||, ||Jv + v||) / min(...); infinite for exact kernel vectors.
    double symmetry_ratio = 0.0;
};

/// Inverse iteration at lambda, then classification against J. An eigenvalue
/// at 0 is answered from the exact kernel instead.
ClassifiedEigenpair eigvec_for_root(const ExactMatrix& a, const ExactMatrix& j, std::complex<double> lambda);

struct OracleSpectrum {
    std::vector<std::complex<double>> values;
    /// ||A v - mu v|| / ||v|| for the refined pair behind each value.
    std::vector<double> residuals;
};

/// Shifted inverse iteration with Rayleigh-quotient updates and Wielandt
/// deflation, all in binary64. Independent of the polynomial pipeline.
/// Throws NoConvergence when an eigenvalue cluster has a smaller null space
/// than its multiplicity (defective input).
OracleSpectrum oracle_eigenvalues(const Eigen::MatrixXcd& a);
OracleSpectrum oracle_eigenvalues(const ExactMatrix& a);

/// Largest distance in a nearest-neighbour one-to-one matching of two
/// equally sized multisets (infinite if the sizes differ).
double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b);

Eigen::MatrixXcd to_complex(const ExactMatrix& m);

} // namespace tentspec
