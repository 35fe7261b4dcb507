#include "tentspec/io.hpp"

#include "tentspec/errors.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace tentspec {

namespace {

void check_schema(const Json& j) {
    if (!j.contains("schema") || j.at("schema") != kSchema) {
        throw DomainError("unsupported or missing schema tag");
    }
}

Json optional_real(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> read_optional(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

Json counts_json(const RegionCounts& c) {
    return {{"inside_inner", c.inside_inner}, {"in_annulus", c.in_annulus}, {"outside_outer", c.outside_outer}};
}

RegionCounts counts_from(const Json& j) {
    RegionCounts c;
    c.inside_inner = j.at("inside_inner").get<int>();
    c.in_annulus = j.at("in_annulus").get<int>();
    c.outside_outer = j.at("outside_outer").get<int>();
    return c;
}

} // namespace

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_real(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw DomainError("malformed real: " + s);
    return v;
}

const char* to_string(MapKind kind) noexcept { return kind == MapKind::full ? "full" : "folded"; }

Json to_json(const KappaSolution& k) {
    return {{"schema", kSchema}, {"n", k.n}, {"kappa", k.kappa}, {"residual", k.residual}};
}

KappaSolution kappa_from_json(const Json& j) {
    check_schema(j);
    return {j.at("n").get<unsigned>(), j.at("kappa").get<double>(), j.at("residual").get<double>()};
}

Json to_json(const MarkovPartition& part, unsigned n, MapKind kind) {
    Json bp = Json::array();
    for (double x : part.breakpoints()) bp.push_back(format_real(x));
    return {{"schema", kSchema}, {"n", n}, {"kind", to_string(kind)}, {"intervals", part.size()}, {"breakpoints", bp}};
}

MarkovPartition partition_from_json(const Json& j) {
    check_schema(j);
    std::vector<double> bp;
    for (const auto& s : j.at("breakpoints")) bp.push_back(parse_real(s.get<std::string>()));
    return MarkovPartition(std::move(bp));
}

Json to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        rows.push_back(std::move(row));
    }
    return {{"schema", kSchema}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const Json& j) {
    check_schema(j);
    ExactMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const Json& e = j.at("entries");
    if (e.size() != m.rows()) throw DimensionMismatch("entry rows do not match the declared shape");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (e[i].size() != m.cols()) throw DimensionMismatch("entry columns do not match the declared shape");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = BigInt(e[i][k].get<std::string>());
    }
    return m;
}

Json to_json(const IntPolynomial& p) {
    Json c = Json::array();
    for (const BigInt& v : p.coefficients()) c.push_back(v.str());
    return {{"schema", kSchema}, {"coefficients_ascending", c}, {"text", p.to_string()}};
}

IntPolynomial polynomial_from_json(const Json& j) {
    check_schema(j);
    std::vector<BigInt> c;
    for (const auto& s : j.at("coefficients_ascending")) c.emplace_back(s.get<std::string>());
    return IntPolynomial(std::move(c));
}

Json to_json(const SpectralReport& r) {
    return {
        {"schema", kSchema},
        {"n", r.n},
        {"kappa_n", r.kappa_n},
        {"r_n", optional_real(r.r_n)},
        {"spectral_radius_A", r.spectral_radius_A},
        {"spectral_radius_M", r.spectral_radius_M},
        {"second_modulus_M", r.second_modulus_M},
        {"second_modulus_folded", r.second_modulus_folded},
        {"second_modulus_bound_factor", r.second_modulus_bound_factor},
        {"mixing_time_full", r.mixing_time_full},
        {"mixing_time_folded_bound", optional_real(r.mixing_time_folded_bound)},
        {"annulus",
         {{"n", r.annulus.n},
          {"f", counts_json(r.annulus.f)},
          {"g", counts_json(r.annulus.g)},
          {"perron_root", r.annulus.perron_root},
          {"subdominant_real_root", optional_real(r.annulus.subdominant_real_root)}}},
    };
}

SpectralReport report_from_json(const Json& j) {
    check_schema(j);
    SpectralReport r;
    r.n = j.at("n").get<unsigned>();
    r.kappa_n = j.at("kappa_n").get<double>();
    r.r_n = read_optional(j, "r_n");
    r.spectral_radius_A = j.at("spectral_radius_A").get<double>();
    r.spectral_radius_M = j.at("spectral_radius_M").get<double>();
    r.second_modulus_M = j.at("second_modulus_M").get<double>();
    r.second_modulus_folded = j.at("second_modulus_folded").get<double>();
    r.second_modulus_bound_factor = j.at("second_modulus_bound_factor").get<double>();
    r.mixing_time_full = j.at("mixing_time_full").get<double>();
    r.mixing_time_folded_bound = read_optional(j, "mixing_time_folded_bound");
    const Json& a = j.at("annulus");
    r.annulus.n = a.at("n").get<unsigned>();
    r.annulus.f = counts_from(a.at("f"));
    r.annulus.g = counts_from(a.at("g"));
    r.annulus.perron_root = a.at("perron_root").get<double>();
    r.annulus.subdominant_real_root = read_optional(a, "subdominant_real_root");
    return r;
}

void write_roots_csv(std::ostream& os, const ComplexRootSet& roots, const std::string& label) {
    os << "polynomial,re,im,residual\n";
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        os << label << ',' << format_real(roots.roots[i].real()) << ',' << format_real(roots.roots[i].imag()) << ','
           << format_real(roots.residuals[i]) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<SpectralReport>& reports) {
    os << "n,kappa_n,r_n,lambda2,one_minus_2kappa,mixing_time,mixing_over_2_pow_n_minus_1,lambda2_folded,folded_bound\n";
    for (const SpectralReport& r : reports) {
        os << r.n << ',' << format_real(r.kappa_n) << ',' << (r.r_n ? format_real(*r.r_n) : "") << ','
           << format_real(r.second_modulus_M) << ',' << format_real(1.0 - 2.0 * r.kappa_n) << ','
           << format_real(r.mixing_time_full) << ','
           << format_real(r.mixing_time_full / std::ldexp(1.0, static_cast<int>(r.n) - 1)) << ','
           << format_real(r.second_modulus_folded) << ',' << format_real(r.second_modulus_bound_factor) << '\n';
    }
}

void write_trajectory_csv(std::ostream& os, const std::vector<DensityVector>& trajectory, const DensityVector& invariant) {
    os << "step";
    for (std::size_t i = 0; i < invariant.coefficients.size(); ++i) os << ",c_" << (i + 1);
    os << ",L1_distance_to_invariant\n";
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
        os << k;
        for (double c : trajectory[k].coefficients) os << ',' << format_real(c);
        os << ',' << format_real(l1_distance(trajectory[k], invariant)) << '\n';
    }
}

} // namespace tentspec
