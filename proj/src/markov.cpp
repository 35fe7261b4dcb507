#include "tentspec/markov.hpp"

#include "tentspec/errors.hpp"
#include "tentspec/poly.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <string>

namespace tentspec {

namespace {

// Inserts x unless a point within tol is already present. Returns true on insert.
bool insert_dedup(std::vector<double>& sorted, double x, double tol) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), x - tol);
    if (it != sorted.end() && *it <= x + tol) return false;
    sorted.insert(it, x);
    return true;
}

} // namespace

MarkovPartition::MarkovPartition(std::vector<double> breakpoints) : points_(std::move(breakpoints)) {
    if (points_.size() < 2) throw DomainError("a partition needs at least two breakpoints");
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        if (!(points_[i] < points_[i + 1])) throw DomainError("breakpoints must be strictly increasing");
    }
}

std::vector<Interval> MarkovPartition::intervals() const {
    std::vector<Interval> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(interval(i));
    return out;
}

int MarkovPartition::locate(double x) const noexcept {
    const auto it = std::upper_bound(points_.begin(), points_.end(), x);
    if (it == points_.begin() || it == points_.end()) return -1;
    const auto i = static_cast<std::size_t>(it - points_.begin()) - 1;
    return (x > points_[i]) ? static_cast<int>(i) : -1;
}

MarkovDetection detect_markov_partition(const PiecewiseLinearMap& map, int max_steps, double tol) {
    if (max_steps < 1) throw DomainError("max_steps must be >= 1");
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
    const Interval amb = map.ambient();
    const std::size_t cap = 10 * static_cast<std::size_t>(max_steps);

    MarkovDetectionTrace trace;
    std::vector<double> e;
    for (double x : map.monotonicity_endpoints()) insert_dedup(e, x, tol);
    trace.steps.push_back(e);

    for (int step = 1; step <= max_steps; ++step) {
        std::vector<double> next = e;
        bool grew = false;
        for (double s : e) {
            if (s > amb.lo) grew |= insert_dedup(next, map.eval_one_sided(s, Side::left), tol);
            if (s < amb.hi) grew |= insert_dedup(next, map.eval_one_sided(s, Side::right), tol);
        }
        trace.steps.push_back(next);
        if (!grew) {
            trace.stabilized_at = step - 1;
            // Clamp the ends onto the ambient interval.
            next.front() = amb.lo;
            next.back() = amb.hi;
            return {MarkovPartition(std::move(next)), std::move(trace)};
        }
        if (next.size() > cap) {
            throw NotStabilized("endpoint set exceeded " + std::to_string(cap) + " points", std::move(trace));
        }
        e = std::move(next);
    }
    throw NotStabilized("endpoint orbit did not stabilize within " + std::to_string(max_steps) + " steps",
                        std::move(trace));
}

MarkovPartition analytic_partition(unsigned n, MapKind kind, double kappa_n) {
    if (n < 1) throw DomainError("analytic_partition requires n >= 1");
    if (!(kappa_n > 0.0 && kappa_n < 0.5) ||
        std::abs(std::pow(2.0 + 2.0 * kappa_n, static_cast<double>(n)) * kappa_n - 1.0) > 1e-12) {
        throw DomainError("kappa does not solve (2 + 2k)^n k = 1 for n = " + std::to_string(n));
    }
    const PiecewiseLinearMap t = make_paired_tent(kappa_n);
    // orbit[i] = T^i(kappa), i = 0..n-1.
    std::vector<double> orbit{kappa_n};
    for (unsigned i = 1; i < n; ++i) orbit.push_back(t.eval(orbit.back()));

    std::vector<double> pts;
    if (kind == MapKind::full) {
        pts.push_back(-1.0);
        for (unsigned i = 1; i < n; ++i) pts.push_back(-orbit[i]);
        pts.insert(pts.end(), {-0.5, -kappa_n, 0.0, kappa_n, 0.5});
        for (unsigned i = n - 1; i >= 1; --i) pts.push_back(orbit[i]);
        pts.push_back(1.0);
    } else if (n == 1) {
        pts = {0.0, kappa_n, 0.5, 1.0 - kappa_n, 1.0};
    } else {
        const double offset = kappa_n / (2.0 * (1.0 + kappa_n));
        pts = {0.0, kappa_n, 0.5 - offset, 0.5, 0.5 + offset};
        for (unsigned i = n - 2; i >= 1; --i) pts.push_back(orbit[i]);
        pts.push_back(1.0);
    }
    return MarkovPartition(std::move(pts));
}

ExactMatrix adjacency_matrix(const PiecewiseLinearMap& map, const MarkovPartition& part, double tol) {
    const auto& bp = part.breakpoints();
    if (std::abs(bp.front() - map.ambient().lo) > tol || std::abs(bp.back() - map.ambient().hi) > tol) {
        throw DimensionMismatch("partition does not span the map's ambient interval");
    }
    const auto near_breakpoint = [&](double y) {
        const auto it = std::lower_bound(bp.begin(), bp.end(), y);
        double d = std::numeric_limits<double>::infinity();
        if (it != bp.end()) d = std::min(d, *it - y);
        if (it != bp.begin()) d = std::min(d, y - *std::prev(it));
        return d <= 100.0 * tol;
    };

    const std::size_t r = part.size();
    ExactMatrix a(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        const Interval src = part.interval(j);
        // Split the source at monotonicity endpoints it contains.
        std::vector<double> cuts{src.lo};
        for (double m : map.monotonicity_endpoints()) {
            if (m > src.lo + tol && m < src.hi - tol) cuts.push_back(m);
        }
        cuts.push_back(src.hi);
        for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
            const double lo_val = map.eval_one_sided(cuts[p], Side::right);
            const double hi_val = map.eval_one_sided(cuts[p + 1], Side::left);
            const double img_lo = std::min(lo_val, hi_val);
            const double img_hi = std::max(lo_val, hi_val);
            if (!near_breakpoint(img_lo) || !near_breakpoint(img_hi)) {
                throw MarkovViolation("image of interval " + std::to_string(j + 1) +
                                      " ends strictly inside a partition interval");
            }
            for (std::size_t i = 0; i < r; ++i) {
                const Interval tgt = part.interval(i);
                if (tgt.lo >= img_lo - 100.0 * tol && tgt.hi <= img_hi + 100.0 * tol) a(i, j) = 1;
            }
        }
    }
    return a;
}

std::vector<double> interval_lengths(const MarkovPartition& part) {
    std::vector<double> out;
    out.reserve(part.size());
    for (const Interval& iv : part.intervals()) out.push_back(iv.length());
    return out;
}

MarkovPartition snap_breakpoints(const MarkovPartition& detected, const MarkovPartition& reference, double radius) {
    const auto& d = detected.breakpoints();
    const auto& r = reference.breakpoints();
    if (d.size() != r.size()) {
        throw DomainError("detected and reference partitions have different sizes");
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (std::abs(d[i] - r[i]) > radius) {
            throw DomainError("breakpoint " + std::to_string(i) + " is not within the snapping radius");
        }
    }
    return reference;
}

PiecewiseLinearMap make_map(MapKind kind, double kappa) {
    return kind == MapKind::full ? make_paired_tent(kappa) : make_folded_tent(kappa);
}

MarkovSystem build_system(unsigned n, MapKind kind) {
    const double kappa = solve_kappa(n).kappa;
    PiecewiseLinearMap map = make_map(kind, kappa);
    MarkovPartition part = analytic_partition(n, kind, kappa);
    ExactMatrix adj = adjacency_matrix(map, part);
    return {n, kind, kappa, std::move(map), std::move(part), std::move(adj)};
}

} // namespace tentspec
