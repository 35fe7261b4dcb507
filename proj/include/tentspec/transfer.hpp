#pragma once

/**
 * @file transfer.hpp
 * @brief The transfer operator on piecewise-constant densities: the Markov
 *        basis operator M_n, invariant densities, evolution, Ulam matrices
 *        and decay-rate fitting.
 *
 * A density is stored by its value on each partition interval. The operator
 * sends coefficients c to A c / (2 + 2 kappa_n).
 */

#include "tentspec/markov.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace tentspec {

struct DensityVector {
    MarkovPartition partition;
    std::vector<double> coefficients;

    /// Length-weighted sum of the coefficients.
    double integral() const;
};

class MarkovOperator {
public:
    MarkovOperator(ExactMatrix adjacency, double scale, MarkovPartition partition);

    const ExactMatrix& adjacency() const noexcept { return adjacency_; }
    double scale() const noexcept { return scale_; }
    const MarkovPartition& partition() const noexcept { return partition_; }
    std::size_t size() const noexcept { return partition_.size(); }

    /// A c / scale, summing the 0/1 pattern before the single division.
    std::vector<double> apply(const std::vector<double>& c) const;
    /// A / scale as a dense real matrix.
    Eigen::MatrixXd scaled() const;

private:
    ExactMatrix adjacency_;
    double scale_;
    MarkovPartition partition_;
    std::vector<std::vector<std::size_t>> column_support_;
};

/// (A_n or B_n, 2 + 2 kappa_n) on the analytic partition.
MarkovOperator markov_operator(unsigned n, MapKind kind);

/// Perron vector of adjacency / scale by inverse iteration, nonnegative and
/// normalized to unit coordinate sum. Throws IllConditioned if the residual
/// exceeds 1e-8.
std::vector<double> perron_vector(const ExactMatrix& adjacency, double scale);

/// Eigenvalue-1 density of the operator with integral 1.
DensityVector invariant_density(const MarkovOperator& op);
DensityVector invariant_density(unsigned n, MapKind kind);

/// f_0, f_1, ..., f_k.
std::vector<DensityVector> evolve_density(const MarkovOperator& op, const DensityVector& f0, unsigned k);

/// Length-weighted L1 distance between two densities on the same partition.
double l1_distance(const DensityVector& a, const DensityVector& b);

/// Normalized indicator of [lo, hi], which must be a union of partition intervals.
DensityVector indicator_density(const MarkovPartition& part, double lo, double hi);

/// ||f_k - f*||_1 for k = 0..steps. The deviation f_0 - f* is evolved on its
/// own and its component along f* removed after every step, so the norms keep
/// decaying far below the rounding level of f_k itself.
std::vector<double> deviation_norms(const MarkovOperator& op, const DensityVector& f0, unsigned steps);

struct UlamMatrix {
    std::vector<double> grid;
    /// Row j, column i: |C_j n T^-1(C_i)| / |C_j|.
    Eigen::MatrixXd p;
};

/// Entries from exact preimage interval intersections on each affine branch.
/// Throws DegenerateCell for cells shorter than 1e-12.
UlamMatrix ulam_matrix(const PiecewiseLinearMap& map, const std::vector<double>& grid);

std::vector<double> uniform_grid(const Interval& ambient, std::size_t cells);

/// All eigenvalues of the Ulam matrix, sorted by decreasing modulus.
std::vector<std::complex<double>> ulam_spectrum(const UlamMatrix& u);

/// exp of the least-squares slope of log(norms[k]) over k >= burn_in.
double fit_decay_rate(const std::vector<double>& norms, std::size_t burn_in = 20);

} // namespace tentspec
