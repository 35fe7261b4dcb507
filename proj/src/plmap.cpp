#include "tentspec/plmap.hpp"

#include "tentspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tentspec {

namespace {

constexpr double kImageTol = 1e-12;

void check_kappa(double kappa) {
    if (!(kappa > 0.0 && kappa <= 0.5)) {
        throw DomainError("kappa must lie in (0, 1/2], got " + std::to_string(kappa));
    }
}

} // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo < hi)) {
        throw DomainError("interval requires lo < hi");
    }
}

Interval Branch::image() const {
    const double a = (*this)(domain.lo);
    const double b = (*this)(domain.hi);
    return Interval(std::min(a, b), std::max(a, b));
}

PiecewiseLinearMap::PiecewiseLinearMap(Interval ambient, std::vector<Branch> branches,
                                       std::vector<std::pair<double, double>> fixed_values)
    : ambient_(ambient), branches_(std::move(branches)), fixed_(std::move(fixed_values)) {
    if (branches_.empty()) {
        throw DomainError("a piecewise-linear map needs at least one branch");
    }
    std::sort(branches_.begin(), branches_.end(),
              [](const Branch& a, const Branch& b) { return a.domain.lo < b.domain.lo; });
    if (branches_.front().domain.lo != ambient_.lo || branches_.back().domain.hi != ambient_.hi) {
        throw DomainError("branch closures must cover the ambient interval");
    }
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        const Branch& b = branches_[i];
        if (b.slope == 0.0 || !std::isfinite(b.slope) || !std::isfinite(b.intercept)) {
            throw DomainError("branch slope must be finite and nonzero");
        }
        if (i + 1 < branches_.size() && b.domain.hi != branches_[i + 1].domain.lo) {
            throw DomainError("branch domains must tile the ambient interval");
        }
        const Interval img = b.image();
        if (img.lo < ambient_.lo - kImageTol || img.hi > ambient_.hi + kImageTol) {
            throw DomainError("branch image leaves the ambient interval");
        }
    }
    for (const auto& [x, v] : fixed_) {
        if (!ambient_.contains_closed(x) || !ambient_.contains_closed(v)) {
            throw DomainError("fixed value outside the ambient interval");
        }
    }
}

int PiecewiseLinearMap::branch_index(double x) const noexcept {
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (branches_[i].domain.contains_open(x)) return static_cast<int>(i);
    }
    return -1;
}

double PiecewiseLinearMap::eval_one_sided(double x, Side side) const {
    if (!ambient_.contains_closed(x)) {
        throw DomainError("point outside the ambient interval");
    }
    switch (side) {
    case Side::left:
        if (x == ambient_.lo) throw DomainError("no left limit at the left ambient endpoint");
        for (const Branch& b : branches_) {
            if (x > b.domain.lo && x <= b.domain.hi) return b(x);
        }
        break;
    case Side::right:
        if (x == ambient_.hi) throw DomainError("no right limit at the right ambient endpoint");
        for (const Branch& b : branches_) {
            if (x >= b.domain.lo && x < b.domain.hi) return b(x);
        }
        break;
    case Side::point:
        for (const auto& [p, v] : fixed_) {
            if (p == x) return v;
        }
        if (const int i = branch_index(x); i >= 0) return branches_[static_cast<std::size_t>(i)](x);
        throw DomainError("point value undefined at a branch endpoint; use a one-sided limit");
    }
    throw DomainError("no branch reaches the requested point");
}

double PiecewiseLinearMap::eval(double x) const {
    if (!ambient_.contains_closed(x)) {
        throw DomainError("point outside the ambient interval");
    }
    for (const auto& [p, v] : fixed_) {
        if (p == x) return v;
    }
    if (const int i = branch_index(x); i >= 0) return branches_[static_cast<std::size_t>(i)](x);

    // x is a branch endpoint: the map is continuous there or undefined.
    const bool has_left = x > ambient_.lo;
    const bool has_right = x < ambient_.hi;
    const double l = has_left ? eval_one_sided(x, Side::left) : 0.0;
    const double r = has_right ? eval_one_sided(x, Side::right) : 0.0;
    if (has_left && has_right) {
        if (std::abs(l - r) > kImageTol) {
            throw DomainError("map is discontinuous at this point and has no stored value");
        }
        return l;
    }
    return has_left ? l : r;
}

std::vector<Preimage> PiecewiseLinearMap::preimages(double y) const {
    std::vector<Preimage> out;
    for (const Branch& b : branches_) {
        const Interval img = b.image();
        if (y < img.lo - kImageTol || y > img.hi + kImageTol) continue;
        const double x = std::clamp((y - b.intercept) / b.slope, b.domain.lo, b.domain.hi);
        out.push_back({x, std::abs(b.slope)});
    }
    return out;
}

std::vector<double> PiecewiseLinearMap::monotonicity_endpoints() const {
    std::vector<double> pts;
    pts.reserve(branches_.size() + 1);
    for (const Branch& b : branches_) pts.push_back(b.domain.lo);
    pts.push_back(branches_.back().domain.hi);
    return pts;
}

PiecewiseLinearMap make_paired_tent(double kappa) {
    check_kappa(kappa);
    const double s = 2.0 * (1.0 + kappa);
    std::vector<Branch> br{
        {Interval(-1.0, -0.5), s, s - 1.0},
        {Interval(-0.5, 0.0), -s, -1.0},
        {Interval(0.0, 0.5), -s, 1.0},
        {Interval(0.5, 1.0), s, 1.0 - s},
    };
    return PiecewiseLinearMap(Interval(-1.0, 1.0), std::move(br), {{0.0, 0.0}});
}

PiecewiseLinearMap make_folded_tent(double kappa) {
    check_kappa(kappa);
    const double s = 2.0 * (1.0 + kappa);
    const double offset = kappa / (2.0 * (1.0 + kappa));
    const double z_lo = 0.5 - offset;
    const double z_hi = 0.5 + offset;
    std::vector<Branch> br{
        {Interval(0.0, z_lo), -s, 1.0},
        {Interval(z_lo, 0.5), s, -1.0},
        {Interval(0.5, z_hi), -s, s - 1.0},
        {Interval(z_hi, 1.0), s, 1.0 - s},
    };
    return PiecewiseLinearMap(Interval(0.0, 1.0), std::move(br), {{0.0, 0.0}});
}

PiecewiseLinearMap make_flip() {
    return PiecewiseLinearMap(Interval(-1.0, 1.0), {{Interval(-1.0, 1.0), -1.0, 0.0}});
}

} // namespace tentspec
