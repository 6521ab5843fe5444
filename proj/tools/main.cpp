#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbeam/fem/solver.hpp"
#include "mbeam/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

struct CliOptions {
    double L = 6.0;
    double h = 0.4;
    double b = 1.0;
    double rho = 1800.0;
    double E = 3e9;
    int n_elems = 30;
    std::vector<double> N{-500000.0};
    std::string method = "both";
    std::string format = "csv";
    std::string out;
    std::string range;
};

mbeam::SweepRange parse_range(const std::string& text) {
    mbeam::SweepRange range;
    int consumed = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%n", &range.start, &range.stop,
                    &range.count, &consumed) != 3 ||
        consumed != static_cast<int>(text.size()))
        throw mbeam::usage_error("range must have the form start:stop:count, got '" +
                                 text + "'");
    return range;
}

mbeam::Method parse_method(const std::string& name) {
    if (name == "analytical") return mbeam::Method::analytical;
    if (name == "fem") return mbeam::Method::fem;
    if (name == "both") return mbeam::Method::both;
    throw mbeam::usage_error("method must be analytical, fem, or both, got '" + name +
                             "'");
}

mbeam::Format parse_format(const std::string& name) {
    if (name == "csv") return mbeam::Format::csv;
    if (name == "json") return mbeam::Format::json;
    throw mbeam::usage_error("format must be csv or json, got '" + name + "'");
}

void add_common_options(CLI::App* sub, CliOptions& opts) {
    sub->set_help_flag("--help", "print this help message and exit");
    sub->add_option("--L", opts.L, "span length (m)")->capture_default_str();
    sub->add_option("--h", opts.h, "section height (m)")->capture_default_str();
    sub->add_option("--b", opts.b, "section width (m)")->capture_default_str();
    sub->add_option("--rho", opts.rho, "density (kg/m^3)")->capture_default_str();
    sub->add_option("--E", opts.E, "Young's modulus (Pa)")->capture_default_str();
    sub->add_option("--n-elems", opts.n_elems, "finite elements along the span")
        ->capture_default_str();
    sub->add_option("--N", opts.N,
                    "axial forces (N, compression negative), comma separated")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--method", opts.method, "analytical | fem | both")
        ->capture_default_str();
    sub->add_option("--format", opts.format, "csv | json")->capture_default_str();
    sub->add_option("--out", opts.out, "output path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fundamental frequencies of cracked no-tension beam-columns"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    CliOptions opts;
    auto* case1 =
        app.add_subcommand("case1", "sweep the eccentricity of the axial force");
    add_common_options(case1, opts);
    case1->add_option("--e-range", opts.range, "eccentricity sweep start:stop:count (m)")
        ->required();

    auto* case2 = app.add_subcommand("case2", "sweep a uniform transverse load");
    add_common_options(case2, opts);
    case2
        ->add_option("--p-range", opts.range,
                     "transverse load sweep start:stop:count (N/m)")
        ->required();

    auto* case3 =
        app.add_subcommand("case3", "sweep an imposed sinusoidal deflection amplitude");
    add_common_options(case3, opts);
    case3->add_option("--A-range", opts.range, "amplitude sweep start:stop:count (m)")
        ->required();

    auto* elastic =
        app.add_subcommand("elastic", "uncracked reference frequency, no sweep");
    add_common_options(elastic, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        mbeam::RunConfig cfg{
            mbeam::BeamSpec(opts.L, opts.h, opts.b, opts.E, opts.rho),
            app.get_subcommands().front()->get_name(),
            opts.range.empty() ? mbeam::SweepRange{} : parse_range(opts.range),
            opts.N,
            opts.n_elems,
            parse_method(opts.method),
            parse_format(opts.format),
            opts.out};
        const auto records = mbeam::run_case(cfg);
        mbeam::emit_to_path(records, cfg.format, cfg.out_path);
        return 0;
    } catch (const mbeam::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const mbeam::fem::convergence_error& e) {
        std::cerr << "error: " << e.what() << " (residual " << e.residual() << ")\n";
        return kExitConvergence;
    } catch (const mbeam::usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
