#include "tentspec/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tentspec {

namespace {

constexpr double kSize = 600.0;
constexpr double kMark = 5.0;

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Frame {
    double half_width;

    double x(double re) const { return kSize / 2 + re / half_width * (kSize / 2); }
    double y(double im) const { return kSize / 2 - im / half_width * (kSize / 2); }
    double r(double radius) const { return radius / half_width * (kSize / 2); }
};

void circle(std::ostream& os, const Frame& f, double radius, const char* cls, const char* dash) {
    os << "  <circle class=\"" << cls << "\" cx=\"" << fixed(f.x(0)) << "\" cy=\"" << fixed(f.y(0)) << "\" r=\""
       << fixed(f.r(radius)) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"";
    if (dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << "/>\n";
}

} // namespace

std::string render_root_plot(const ComplexRootSet& roots_f, const ComplexRootSet& roots_g, unsigned n) {
    double reach = 2.0;
    for (const auto& z : roots_f.roots) reach = std::max(reach, std::abs(z));
    for (const auto& z : roots_g.roots) reach = std::max(reach, std::abs(z));
    const Frame f{1.1 * reach};

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(kSize) << "\" height=\""
       << fixed(kSize) << "\" viewBox=\"0 0 " << fixed(kSize) << ' ' << fixed(kSize) << "\">\n"
       << "  <title>roots of f_" << n << " and g_" << n << "</title>\n"
       << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    circle(os, f, 1.0, "unit-circle", nullptr);
    circle(os, f, 2.0, "radius-two", "6,4");
    if (n > 1) circle(os, f, 1.0 - 1.0 / n, "inner-annulus", "1,3");
    circle(os, f, 1.0 + 1.0 / n, "outer-annulus", "1,3");

    // Asterisk at the origin.
    const double ox = f.x(0), oy = f.y(0);
    os << "  <path class=\"origin\" d=\"";
    for (int k = 0; k < 3; ++k) {
        const double a = std::numbers::pi * k / 3.0;
        const double dx = kMark * std::cos(a), dy = kMark * std::sin(a);
        os << 'M' << fixed(ox - dx) << ',' << fixed(oy - dy) << 'L' << fixed(ox + dx) << ',' << fixed(oy + dy);
    }
    os << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    for (const auto& z : roots_f.roots) {
        const double cx = f.x(z.real()), cy = f.y(z.imag());
        os << "  <path class=\"f-root\" d=\"M" << fixed(cx - kMark) << ',' << fixed(cy - kMark) << 'L'
           << fixed(cx + kMark) << ',' << fixed(cy + kMark) << 'M' << fixed(cx - kMark) << ',' << fixed(cy + kMark)
           << 'L' << fixed(cx + kMark) << ',' << fixed(cy - kMark) << "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
    }
    for (const auto& z : roots_g.roots) {
        os << "  <circle class=\"g-root\" cx=\"" << fixed(f.x(z.real())) << "\" cy=\"" << fixed(f.y(z.imag()))
           << "\" r=\"" << fixed(kMark) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_root_plot(const ComplexRootSet& roots_f, const ComplexRootSet& roots_g, unsigned n, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << render_root_plot(roots_f, roots_g, n);
    if (!out) throw std::runtime_error("failed writing " + path);
}

} // namespace tentspec
