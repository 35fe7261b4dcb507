#include "tentspec/cli.hpp"

#include "tentspec/errors.hpp"
#include "tentspec/exact.hpp"
#include "tentspec/io.hpp"
#include "tentspec/markov.hpp"
#include "tentspec/plot.hpp"
#include "tentspec/poly.hpp"
#include "tentspec/spectral.hpp"
#include "tentspec/transfer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

namespace tentspec {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Opens path for writing; "-" means the given stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

std::vector<SpectralReport> sweep_reports(unsigned from, unsigned to) {
    const std::size_t count = to - from + 1;
    std::vector<SpectralReport> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = spectral_report(from + static_cast<unsigned>(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace

std::vector<CheckResult> run_verification(unsigned n_max) {
    std::vector<CheckResult> out;
    const auto check = [&](const char* name, unsigned n, bool pass) { out.push_back({name, n, pass}); };
    for (unsigned n = 1; n <= n_max; ++n) {
        const MarkovSystem full = build_system(n, MapKind::full);
        const MarkovSystem folded = build_system(n, MapKind::folded);
        const ExactMatrix& a = full.adjacency;
        const ExactMatrix& b = folded.adjacency;
        const ExactMatrix j = flip_matrix(a.rows());
        const ExactMatrix id = ExactMatrix::identity(a.rows());

        check("pair_identity", n, verify_pair_identity(a, j, n));
        check("flip_commutes", n, a * j == j * a);
        check("flip_squared_identity", n, j * j == id);
        check("flip_conjugation", n, j * a * j == a);
        check("min_poly_A", n, krylov_min_poly(a) == min_poly(n));
        check("min_poly_J", n, krylov_min_poly(j) == IntPolynomial{-1, 0, 1});
        check("min_poly_B", n, krylov_min_poly(b) == x_poly() * f_poly(n));
        const auto ka = kernel_basis(a);
        check("kernel_A", n, ka.size() == 2 && same_span(ka, full_kernel_reference(n)));
        const auto kb = kernel_basis(b);
        check("kernel_B", n, kb.size() == 2 && same_span(kb, folded_kernel_reference(n)));
        const ExactMatrix c = symmetric_restriction(a, n);
        const ExactMatrix iota = inclusion_iota(n);
        check("intertwine", n, verify_intertwine(b, c, iota));
        check("iota_rank", n, rank(iota) == n + 2);
        RationalVector d34(n + 3);
        d34[2] = 1;
        d34[3] = -1;
        check("d3_minus_d4_outside_image", n, !in_span(column_vectors(iota), d34));
        check("min_poly_C", n, krylov_min_poly(c) == x_poly() * f_poly(n));
        check("markov_detection_full", n, adjacency_matrix(full.map, detect_markov_partition(full.map).partition) == a);
        check("markov_detection_folded", n,
              adjacency_matrix(folded.map, detect_markov_partition(folded.map).partition) == b);
    }
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Markov partitions, exact spectral identities and mixing rates of the paired tent family"};
    app.name("tentspec");
    app.require_subcommand(1);

    unsigned n = 1;
    bool folded = false;
    unsigned n_max = 10;
    unsigned from = 1, to = 10;
    unsigned steps = 200;
    std::string csv_path = "-";
    std::string svg_path;
    std::string roots_csv;

    const auto n_option = [&](CLI::App* sub) {
        sub->add_option("--n", n, "family index n >= 1")->required()->check(CLI::Range(1u, 100000u));
    };

    CLI::App* kappa = app.add_subcommand("kappa", "kappa_n as JSON");
    n_option(kappa);
    CLI::App* partition = app.add_subcommand("partition", "analytic Markov partition as JSON");
    n_option(partition);
    partition->add_flag("--folded", folded, "use the folded map on [0,1]");
    CLI::App* adjacency = app.add_subcommand("adjacency", "0/1 adjacency matrix as JSON");
    n_option(adjacency);
    adjacency->add_flag("--folded", folded, "use the folded map on [0,1]");
    CLI::App* verify = app.add_subcommand("verify", "run the exact identities and print a pass/fail table");
    verify->add_option("--n-max", n_max, "largest n to check")->required()->check(CLI::Range(1u, 60u));
    CLI::App* spectrum = app.add_subcommand("spectrum", "spectral report as JSON");
    n_option(spectrum);
    CLI::App* sweep = app.add_subcommand("sweep", "spectral reports for a range of n as CSV");
    sweep->add_option("--from", from, "first n")->required()->check(CLI::Range(1u, 100000u));
    sweep->add_option("--to", to, "last n")->required()->check(CLI::Range(1u, 100000u));
    sweep->add_option("--csv", csv_path, "output path, - for stdout")->required();
    CLI::App* roots = app.add_subcommand("roots", "roots of f_n and g_n as SVG");
    n_option(roots);
    roots->add_option("--svg", svg_path, "SVG output path")->required();
    roots->add_option("--csv", roots_csv, "optional CSV of roots and residuals");
    CLI::App* simulate = app.add_subcommand("simulate", "evolve the normalized indicator of the left half");
    n_option(simulate);
    simulate->add_option("--steps", steps, "number of steps")->check(CLI::Range(0u, 1000000u));
    simulate->add_option("--csv", csv_path, "output path, - for stdout")->required();
    simulate->add_flag("--folded", folded, "use the folded map on [0,1]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const MapKind kind = folded ? MapKind::folded : MapKind::full;
    try {
        if (kappa->parsed()) {
            out << to_json(solve_kappa(n)).dump(2) << '\n';
        } else if (partition->parsed()) {
            const MarkovSystem s = build_system(n, kind);
            out << to_json(s.partition, n, kind).dump(2) << '\n';
        } else if (adjacency->parsed()) {
            const MarkovSystem s = build_system(n, kind);
            Json j = to_json(s.adjacency);
            j["n"] = n;
            j["kind"] = to_string(kind);
            out << j.dump(2) << '\n';
        } else if (verify->parsed()) {
            const auto results = run_verification(n_max);
            std::size_t passed = 0;
            out << std::left << std::setw(28) << "check" << std::setw(5) << "n" << "result\n";
            for (const CheckResult& r : results) {
                out << std::left << std::setw(28) << r.name << std::setw(5) << r.n << (r.pass ? "PASS" : "FAIL") << '\n';
                passed += r.pass ? 1 : 0;
            }
            out << "summary: " << passed << '/' << results.size() << " PASS\n";
            return passed == results.size() ? 0 : 1;
        } else if (spectrum->parsed()) {
            out << to_json(spectral_report(n)).dump(2) << '\n';
        } else if (sweep->parsed()) {
            if (from > to) throw UsageError("--from must not exceed --to");
            const auto reports = sweep_reports(from, to);
            Sink sink(csv_path, out);
            write_sweep_csv(sink.stream(), reports);
        } else if (roots->parsed()) {
            const ComplexRootSet rf = aberth_roots(f_poly(n));
            const ComplexRootSet rg = aberth_roots(g_poly(n));
            write_root_plot(rf, rg, n, svg_path);
            if (!roots_csv.empty()) {
                Sink sink(roots_csv, out);
                write_roots_csv(sink.stream(), rf, "f");
                for (std::size_t i = 0; i < rg.roots.size(); ++i) {
                    sink.stream() << "g," << format_real(rg.roots[i].real()) << ',' << format_real(rg.roots[i].imag())
                                  << ',' << format_real(rg.residuals[i]) << '\n';
                }
            }
        } else if (simulate->parsed()) {
            const MarkovOperator op = markov_operator(n, kind);
            const DensityVector f0 = folded ? indicator_density(op.partition(), 0.0, 0.5)
                                            : indicator_density(op.partition(), -1.0, 0.0);
            const auto trajectory = evolve_density(op, f0, steps);
            Sink sink(csv_path, out);
            write_trajectory_csv(sink.stream(), trajectory, invariant_density(op));
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace tentspec
