#pragma once

/**
 * @file markov.hpp
 * @brief Markov partitions by endpoint-orbit stabilization, the closed-form
 *        partitions of the tent family, and 0/1 adjacency matrices.
 *
 * Adjacency convention: rows are target intervals, columns are source
 * intervals, a(i, j) = 1 iff R_i is covered by T(R_j).
 */

#include "tentspec/matrix.hpp"
#include "tentspec/plmap.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tentspec {

enum class MapKind { full, folded };

class MarkovPartition {
public:
    explicit MarkovPartition(std::vector<double> breakpoints);

    const std::vector<double>& breakpoints() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size() - 1; }
    Interval interval(std::size_t i) const { return {points_.at(i), points_.at(i + 1)}; }
    std::vector<Interval> intervals() const;
    /// Index of the interval whose open interior contains x, or -1.
    int locate(double x) const noexcept;

private:
    std::vector<double> points_;
};

struct MarkovDetectionTrace {
    std::vector<std::vector<double>> steps;
    std::optional<int> stabilized_at;
};

class NotStabilized : public std::runtime_error {
public:
    NotStabilized(const std::string& what, MarkovDetectionTrace trace)
        : std::runtime_error(what), trace_(std::move(trace)) {}

    const MarkovDetectionTrace& trace() const noexcept { return trace_; }

private:
    MarkovDetectionTrace trace_;
};

struct MarkovDetection {
    MarkovPartition partition;
    MarkovDetectionTrace trace;
};

/// Iterates E_{i+1} = E_i u {T(s-), T(s+) : s in E_i} from the monotonicity
/// endpoints until the set stops growing. Throws NotStabilized.
MarkovDetection detect_markov_partition(const PiecewiseLinearMap& map, int max_steps = 64, double tol = 1e-10);

/// Closed-form breakpoints: 2n+4 intervals for the full map, n+3 folded.
MarkovPartition analytic_partition(unsigned n, MapKind kind, double kappa_n);

/// Throws MarkovViolation when a branch image endpoint is farther than
/// 100 tol from every breakpoint.
ExactMatrix adjacency_matrix(const PiecewiseLinearMap& map, const MarkovPartition& part, double tol = 1e-10);

std::vector<double> interval_lengths(const MarkovPartition& part);

/// Replaces each detected breakpoint by the reference breakpoint within
/// radius of it. Throws DomainError when the two lists do not pair up.
MarkovPartition snap_breakpoints(const MarkovPartition& detected, const MarkovPartition& reference, double radius);

PiecewiseLinearMap make_map(MapKind kind, double kappa);

struct MarkovSystem {
    unsigned n;
    MapKind kind;
    double kappa;
    PiecewiseLinearMap map;
    MarkovPartition partition;
    ExactMatrix adjacency;
};

/// kappa_n, the map, its analytic partition and adjacency matrix.
MarkovSystem build_system(unsigned n, MapKind kind);

} // namespace tentspec
