#pragma once

/**
 * @file io.hpp
 * @brief JSON and CSV serialization.
 *
 * JSON documents carry "schema": "tentspec/1". Big integers are written as
 * decimal strings, breakpoints as 17-significant-digit strings.
 */

#include "tentspec/markov.hpp"
#include "tentspec/poly.hpp"
#include "tentspec/spectral.hpp"
#include "tentspec/transfer.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace tentspec {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "tentspec/1";

/// %.17g
std::string format_real(double x);
double parse_real(const std::string& s);

const char* to_string(MapKind kind) noexcept;

Json to_json(const KappaSolution& k);
KappaSolution kappa_from_json(const Json& j);

Json to_json(const MarkovPartition& part, unsigned n, MapKind kind);
MarkovPartition partition_from_json(const Json& j);

Json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json to_json(const SpectralReport& r);
SpectralReport report_from_json(const Json& j);

/// re,im,residual
void write_roots_csv(std::ostream& os, const ComplexRootSet& roots, const std::string& label);

/// One row per report, in the given order.
void write_sweep_csv(std::ostream& os, const std::vector<SpectralReport>& reports);

/// step, c_1..c_r, L1_distance_to_invariant
void write_trajectory_csv(std::ostream& os, const std::vector<DensityVector>& trajectory, const DensityVector& invariant);

} // namespace tentspec
