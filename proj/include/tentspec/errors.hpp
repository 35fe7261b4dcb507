#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by the tentspec modules.
 */

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace tentspec {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An interval image endpoint falls strictly inside a partition interval.
class MarkovViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The matrix does not act on the symmetric subspace with integer coordinates.
class NonIntegralRestriction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inverse iteration could not isolate an eigenvector.
class IllConditioned : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateCell : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonPositiveNorm : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver stopped at its iteration cap. Carries the best iterate.
class NoConvergence : public std::runtime_error {
public:
    NoConvergence(const std::string& what, std::vector<std::complex<double>> best = {})
        : std::runtime_error(what), best_(std::move(best)) {}

    const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }

private:
    std::vector<std::complex<double>> best_;
};

} // namespace tentspec
