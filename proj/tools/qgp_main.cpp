// qgp: dissipative-qubit geometric phase toolkit.
//
// Subcommands:
//   compute   single parameter point, JSON record to stdout
//   sweep     figure preset or config-file sweep, CSV/JSON artifact
//   spectral  tabulated spectral density through the Volterra solver
//
// All frequencies at this boundary are ratios to the transition frequency
// omega0, which is normalized to 1 internally.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-domain error,
// 4 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qgp/errors.hpp"
#include "qgp/sweep.hpp"

namespace {

struct ComputeOptions {
    double w = 0.0;
    double lambda = 0.0;
    double theta0 = 0.0;
    std::string evaluators = "exact,kinematic,perturbative,markovian,unitary";
    int samples = qgp::QuadratureSettings{}.samples_per_period;
    double tolerance = qgp::QuadratureSettings{}.refinement_tolerance;
};

struct SweepOptions {
    std::string preset;
    std::string config_path;
    std::string out;
    std::string format;
    int samples = 0;  // 0: keep the spec/preset resolution
};

struct SpectralOptions {
    std::string tabulated_path;
    double theta0 = 0.0;
    int steps = qgp::VolterraSettings{}.steps;
    std::string out;
};

int run_compute(const ComputeOptions& opt) {
    qgp::SystemParams params{.omega0 = 1.0, .W = opt.w, .lambda = opt.lambda, .theta0 = opt.theta0};
    params.validate();
    qgp::QuadratureSettings settings{opt.samples, opt.tolerance};
    settings.validate();
    const auto evaluators = qgp::parse_evaluators(opt.evaluators);

    const qgp::PhaseRecord rec = qgp::evaluate_point(params, evaluators, settings);
    std::cout << qgp::to_json_string(rec);
    if (!rec.error.empty()) {
        std::cerr << "qgp: evaluation failed: " << rec.error << "\n";
        return 3;
    }
    return 0;
}

int run_sweep_cmd(const SweepOptions& opt) {
    qgp::SweepSpec spec;
    if (!opt.preset.empty()) {
        spec = qgp::figure_preset(opt.preset);
    } else {
        std::ifstream in(opt.config_path);
        if (!in) throw qgp::IoError("cannot open config file: " + opt.config_path);
        std::ostringstream text;
        text << in.rdbuf();
        spec = qgp::parse_config(text.str());
    }
    if (!opt.out.empty()) spec.output_path = opt.out;
    if (!opt.format.empty()) {
        if (opt.format == "csv")
            spec.format = qgp::OutputFormat::csv;
        else if (opt.format == "json")
            spec.format = qgp::OutputFormat::json;
        else
            throw qgp::ConfigError("--format must be csv or json");
    }
    if (opt.samples > 0) {
        spec.resolution.samples_per_period = opt.samples;
        spec.resolution.validate();
    }
    if (spec.output_path.empty())
        throw qgp::ConfigError("no output path: set 'output =' in the config or pass --out");

    const auto records = qgp::run_sweep(spec);
    qgp::emit(records, spec.format, spec.output_path);

    std::size_t failed = 0;
    for (const auto& r : records)
        if (!r.error.empty()) ++failed;
    std::cerr << "qgp: wrote " << records.size() << " records to " << spec.output_path;
    if (failed > 0) {
        std::cerr << " (" << failed << " failed points)";
        std::cerr << "\n";
        for (const auto& r : records)
            if (!r.error.empty())
                std::cerr << "  failed: W=" << (r.w ? *r.w : 0.0)
                          << " lambda=" << (r.lambda ? *r.lambda : 0.0) << " theta0=" << r.theta0
                          << ": " << r.error << "\n";
    } else {
        std::cerr << "\n";
    }
    return 0;
}

int run_spectral(const SpectralOptions& opt) {
    const qgp::Tabulated sd = qgp::load_tabulated(opt.tabulated_path);
    if (opt.steps % 2 != 0)
        throw qgp::ConfigError("--steps must be even (the phase quadrature needs an odd sample count)");
    qgp::VolterraSettings settings{opt.steps};
    settings.validate();

    const qgp::PhaseRecord rec = qgp::evaluate_tabulated(sd, opt.theta0, settings);
    const std::string json = qgp::to_json_string(rec);
    if (opt.out.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out) throw qgp::IoError("cannot open output file: " + opt.out);
        out << json;
        if (!out) throw qgp::IoError("failed writing output file: " + opt.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric phase of a dissipative qubit in a Lorentzian environment"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "Evaluate one parameter point");
    compute->add_option("--w", copt.w, "Coupling W as a ratio to omega0");
    compute->add_option("--lambda", copt.lambda, "Spectral width as a ratio to omega0 (0: ideal cavity)");
    compute->add_option("--theta0", copt.theta0, "Initial polar angle in radians, [0, pi]")->required();
    compute->add_option("--evaluators", copt.evaluators, "Comma list: exact,kinematic,perturbative,markovian,unitary");
    compute->add_option("--samples", copt.samples, "Quadrature intervals per period (even, >= 16)");
    compute->add_option("--tolerance", copt.tolerance, "Relative doubled-grid refinement tolerance");

    SweepOptions sopt;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
    auto* preset_opt = sweep->add_option("--preset", sopt.preset, "fig1a | fig1b | fig2 | fig3");
    auto* config_opt = sweep->add_option("--config", sopt.config_path, "Sweep config file");
    preset_opt->excludes(config_opt);
    config_opt->excludes(preset_opt);
    sweep->add_option("--out", sopt.out, "Output path (overrides preset/config)");
    sweep->add_option("--format", sopt.format, "csv | json");
    sweep->add_option("--samples", sopt.samples, "Quadrature intervals per period override");

    SpectralOptions xopt;
    CLI::App* spectral = app.add_subcommand("spectral", "Tabulated density via the Volterra solver");
    spectral->add_option("--tabulated", xopt.tabulated_path, "Two-column J(omega) text file")->required();
    spectral->add_option("--theta0", xopt.theta0, "Initial polar angle in radians, [0, pi]")->required();
    spectral->add_option("--steps", xopt.steps, "Volterra steps over one period (>= 64)");
    spectral->add_option("--out", xopt.out, "Write the JSON record here instead of stdout");

    try {
        app.parse(argc, argv);
        if (*compute) return run_compute(copt);
        if (*sweep) {
            if (sopt.preset.empty() && sopt.config_path.empty())
                throw qgp::ConfigError("sweep needs --preset or --config");
            return run_sweep_cmd(sopt);
        }
        if (*spectral) return run_spectral(xopt);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qgp::ConfigError& e) {
        std::cerr << "qgp: configuration error: " << e.what() << "\n";
        return 2;
    } catch (const qgp::InvalidInput& e) {
        std::cerr << "qgp: configuration error: " << e.what() << "\n";
        return 2;
    } catch (const qgp::IoError& e) {
        std::cerr << "qgp: I/O error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "qgp: numerical error: " << e.what() << "\n";
        return 3;
    }
}
