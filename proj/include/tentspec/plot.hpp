#pragma once

/**
 * @file plot.hpp
 * @brief SVG scatter of the roots of f_n and g_n.
 *
 * Crosses mark roots of f_n (class "f-root"), circles roots of g_n (class
 * "g-root"), an asterisk the origin. The unit circle is solid, the circle of
 * radius 2 dashed, the circles of radius 1 -+ 1/n dotted.
 */

#include "tentspec/poly.hpp"

#include <string>

namespace tentspec {

std::string render_root_plot(const ComplexRootSet& roots_f, const ComplexRootSet& roots_g, unsigned n);

/// Writes render_root_plot to path. Throws std::runtime_error on IO failure.
void write_root_plot(const ComplexRootSet& roots_f, const ComplexRootSet& roots_g, unsigned n, const std::string& path);

} // namespace tentspec
