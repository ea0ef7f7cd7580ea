// Command-line front end: scheme tables, stability limits, single runs and
// regeneration of the standing-wave error tables.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavestencil/wavestencil.hpp"

namespace ws = wavestencil;

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUnknownScheme = 2,
    kRadiusUnsupported = 3,
    kDegenerateNorm = 4,
    kNeverStable = 5,
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", v);
    return buf;
}

std::string fixed(double v, int digits) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

struct Manifest {
    std::string command;
    std::string output = "stdout";
    std::optional<double> wall_time_s;

    std::vector<std::string> lines() const {
        std::vector<std::string> out{
            "tool: wavestencil " WAVESTENCIL_VERSION,
            "command: " + command,
            "determinism: no random numbers; fixed-order serial summation",
            "output: " + output,
        };
        if (wall_time_s) out.push_back("wall_time_s: " + fixed(*wall_time_s, 3));
        return out;
    }

    void write(std::ostream& os, bool markdown = false) const {
        if (markdown) {
            os << "<!--\n";
            for (const auto& l : lines()) os << l << '\n';
            os << "-->\n";
        } else {
            for (const auto& l : lines()) os << "# " << l << '\n';
        }
    }
};

/// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw ws::Error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int cmd_generate(const std::string& name, const std::string& out_path, const Manifest& manifest) {
    const ws::SchemeSpec spec = ws::named_scheme(name);
    Sink sink(out_path);
    manifest.write(sink.stream());
    ws::write_scheme_table(sink.stream(), spec);
    return kOk;
}

int cmd_stability(const std::string& name, double tol, const Manifest& manifest) {
    const ws::SchemeSpec spec = ws::named_scheme(name);
    const double lmax = ws::lambda_max(spec, tol);
    const ws::StabilityCheck at_limit = ws::check_stability(spec, lmax);
    manifest.write(std::cout);
    std::cout << "scheme: " << spec.name << '\n';
    std::cout << "lambda_max: " << fixed(lmax, 6) << '\n';
    std::cout << "symbol_min: " << fixed(at_limit.extrema.min.value, 9) << " at theta = ("
              << fixed(at_limit.extrema.min.theta1, 6) << ", " << fixed(at_limit.extrema.min.theta2, 6) << ")\n";
    std::cout << "marginal_double_root: " << (at_limit.marginal ? "yes" : "no") << '\n';
    return kOk;
}

struct SimulateOptions {
    std::string scheme = "P5";
    std::size_t n = 10;
    std::size_t n_t = 10;
    double lambda = 0.707;
    std::string bc = "dirichlet";
    std::size_t dump_every = 0;
    std::string dump_prefix = "snapshot";
    bool zero_ic = false;
    std::string out;
};

int cmd_simulate(const SimulateOptions& opt, Manifest manifest) {
    ws::SimConfig cfg =
        ws::SimConfig::standing_wave(ws::named_scheme(opt.scheme), opt.n, opt.n_t, opt.lambda, ws::parse_boundary(opt.bc));
    cfg.check_stability = true;
    if (opt.zero_ic) {
        cfg.initial_u = [](double, double) { return 0.0; };
        cfg.initial_v = [](double, double) { return 0.0; };
        cfg.reference = [](double, double, double) { return 0.0; };
    }

    ws::StepObserver observer;
    if (opt.dump_every > 0) {
        observer = [&opt](std::size_t k, const ws::Grid2D& u) {
            if (k % opt.dump_every != 0 && k != opt.n_t) return;
            char suffix[32];
            std::snprintf(suffix, sizeof suffix, "_k%06zu.csv", k);
            const std::string path = opt.dump_prefix + suffix;
            std::ofstream f(path);
            if (!f) throw ws::Error("cannot open '" + path + "' for writing");
            ws::write_csv(f, u);
        };
    }

    const ws::SimReport report = ws::run(cfg, observer);
    if (report.beyond_stability_limit)
        std::cerr << "warning: lambda = " << opt.lambda << " exceeds lambda_max = " << fixed(*report.lambda_max, 6)
                  << " for " << report.scheme << "; the run may blow up\n";

    manifest.wall_time_s = report.wall_time_s;
    if (!opt.out.empty()) manifest.output = opt.out;
    Sink sink(opt.out);
    std::ostream& os = sink.stream();
    manifest.write(os);
    os << "scheme: " << report.scheme << '\n';
    os << "n: " << report.n << '\n';
    os << "n_t: " << report.n_t << '\n';
    os << "lambda: " << report.lambda << '\n';
    os << "tau: " << sci(report.tau) << '\n';
    os << "bc: " << ws::to_string(report.bc) << '\n';
    if (report.lambda_max) os << "lambda_max: " << fixed(*report.lambda_max, 6) << '\n';
    os << "E: " << sci(report.error) << '\n';
    return kOk;
}

void write_bench(std::ostream& os, const ws::BenchResult& result, bool markdown) {
    const auto& t = *result.table;
    const std::string& p = t.poisson_scheme;
    const std::string& c = t.conventional_scheme;
    const std::vector<std::string> header{"n",        "n_t",      "lambda", "E_" + p,  "ref_" + p,
                                          "dev_" + p, "E_" + c,   "ref_" + c, "dev_" + c};
    auto row_cells = [](const ws::BenchRowResult& r) {
        return std::vector<std::string>{std::to_string(r.spec.n),
                                        std::to_string(r.spec.n_t),
                                        fixed(r.spec.lambda, 3),
                                        sci(r.poisson),
                                        sci(r.spec.ref_poisson),
                                        sci(r.poisson_deviation()),
                                        sci(r.conventional),
                                        sci(r.spec.ref_conventional),
                                        sci(r.conventional_deviation())};
    };
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (markdown)
                os << "| " << cells[i] << ' ';
            else
                os << (i ? "," : "") << cells[i];
        }
        os << (markdown ? "|\n" : "\n");
    };
    if (markdown) os << "\nTable " << t.number << " (" << ws::to_string(t.bc) << " boundaries)\n\n";
    emit(header);
    if (markdown) emit(std::vector<std::string>(header.size(), "---"));
    for (const auto& r : result.rows) emit(row_cells(r));
}

int cmd_bench(int table, const std::string& format, const std::string& out_path, Manifest manifest) {
    const bool markdown = format == "md";
    const auto start = std::chrono::steady_clock::now();
    const ws::BenchResult result = ws::run_bench(table);
    manifest.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out_path.empty()) manifest.output = out_path;
    Sink sink(out_path);
    manifest.write(sink.stream(), markdown);
    write_bench(sink.stream(), result, markdown);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit wave-equation stencil schemes: generation, stability and benchmarks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", WAVESTENCIL_VERSION);

    Manifest manifest;
    for (int i = 1; i < argc; ++i) manifest.command += (i > 1 ? " " : "") + std::string(argv[i]);

    std::string scheme_name;
    std::string out_path;

    auto* generate = app.add_subcommand("generate", "Print exact coefficient tables of a named scheme");
    generate->add_option("scheme", scheme_name, "P5, C5, P9, C9, P13 or C13")->required();
    generate->add_option("--out", out_path, "Write to PATH instead of stdout");

    double tol = 1e-7;
    auto* stability = app.add_subcommand("stability", "Largest stable Courant number of a named scheme");
    stability->add_option("scheme", scheme_name, "P5, C5, P9, C9, P13 or C13")->required();
    stability->add_option("--tol", tol, "Bisection tolerance")->check(CLI::PositiveNumber);

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "Run the standing-wave benchmark for one configuration");
    simulate->add_option("--scheme", sim.scheme, "Scheme name")->required();
    simulate->add_option("--n", sim.n, "Grid subdivisions per axis")->check(CLI::Range(2, 100000));
    simulate->add_option("--nt", sim.n_t, "Number of time steps")->check(CLI::PositiveNumber);
    simulate->add_option("--lambda", sim.lambda, "Courant number")->check(CLI::PositiveNumber);
    simulate->add_option("--bc", sim.bc, "Boundary condition")->check(CLI::IsMember({"dirichlet", "periodic"}));
    simulate->add_option("--dump-every", sim.dump_every, "Write a CSV snapshot every K steps (0 = never)");
    simulate->add_option("--dump-prefix", sim.dump_prefix, "Snapshot path prefix");
    simulate->add_flag("--zero-ic", sim.zero_ic, "Zero initial data and reference (exercises the degenerate norm)");
    simulate->add_option("--out", sim.out, "Write the report to PATH instead of stdout");

    int table = 1;
    std::string format = "csv";
    auto* bench = app.add_subcommand("bench", "Recompute a published error table");
    bench->add_option("table", table, "Table number")->required()->check(CLI::IsMember({1, 2, 3}));
    bench->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "md"}));
    bench->add_option("--out", out_path, "Write to PATH instead of stdout");

    CLI11_PARSE(app, argc, argv);

    if (!out_path.empty()) manifest.output = out_path;
    try {
        if (*generate) return cmd_generate(scheme_name, out_path, manifest);
        if (*stability) return cmd_stability(scheme_name, tol, manifest);
        if (*simulate) return cmd_simulate(sim, manifest);
        if (*bench) return cmd_bench(table, format, out_path, manifest);
    } catch (const ws::UnknownScheme& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUnknownScheme;
    } catch (const ws::RadiusUnsupported& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRadiusUnsupported;
    } catch (const ws::DegenerateNorm& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDegenerateNorm;
    } catch (const ws::NeverStable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNeverStable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
