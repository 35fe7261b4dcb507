#pragma once

/**
 * @file plmap.hpp
 * @brief Piecewise-linear interval self-maps: the paired tent map, its folded
 *        factor and the flip x -> -x.
 *
 * Branch domains are open intervals. Values at shared endpoints are only
 * reachable through one-sided limits, except for isolated definitions stored
 * as fixed values (the paired tent map sends 0 to 0).
 */

#include <utility>
#include <vector>

namespace tentspec {

struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_);

    double length() const noexcept { return hi - lo; }
    bool contains_closed(double x) const noexcept { return x >= lo && x <= hi; }
    bool contains_open(double x) const noexcept { return x > lo && x < hi; }
};

/// Affine piece x -> slope * x + intercept on an open domain.
struct Branch {
    Interval domain;
    double slope;
    double intercept;

    double operator()(double x) const noexcept { return slope * x + intercept; }
    /// Closure of the image of the domain.
    Interval image() const;
};

enum class Side { left, right, point };

struct Preimage {
    double x;
    double abs_slope;
};

class PiecewiseLinearMap {
public:
    PiecewiseLinearMap(Interval ambient, std::vector<Branch> branches,
                       std::vector<std::pair<double, double>> fixed_values = {});

    const Interval& ambient() const noexcept { return ambient_; }
    const std::vector<Branch>& branches() const noexcept { return branches_; }
    const std::vector<std::pair<double, double>>& fixed_values() const noexcept { return fixed_; }

    /// Value at x; at a branch endpoint the one-sided limits must agree
    /// (within 1e-12) unless x carries a fixed value.
    double eval(double x) const;
    double operator()(double x) const { return eval(x); }

    /// One-sided limit T(x^-) or T(x^+), or the point value for side == point.
    double eval_one_sided(double x, Side side) const;

    /// One entry per branch whose closed image contains y (within 1e-12).
    std::vector<Preimage> preimages(double y) const;

    /// Endpoints of the monotonicity intervals, sorted, ambient ends included.
    std::vector<double> monotonicity_endpoints() const;

    /// Index of the branch whose open domain contains x, or -1.
    int branch_index(double x) const noexcept;

private:
    Interval ambient_;
    std::vector<Branch> branches_;
    std::vector<std::pair<double, double>> fixed_;
};

/// T_kappa on [-1,1], four branches of slope magnitude 2(1+kappa), T(0) = 0.
PiecewiseLinearMap make_paired_tent(double kappa);

/// |T_kappa| on [0,1], four monotone branches split at the zeros
/// 1/2 -+ kappa / (2(1+kappa)).
PiecewiseLinearMap make_folded_tent(double kappa);

/// The flip x -> -x on [-1,1].
PiecewiseLinearMap make_flip();

} // namespace tentspec
