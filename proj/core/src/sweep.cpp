#include "qgp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <thread>

#include "json.hpp"
#include "qgp/errors.hpp"

namespace qgp {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

double parse_double(const std::string& token, int line) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("malformed number '" + token + "'", line);
    return value;
}

int parse_int(const std::string& token, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ConfigError("malformed integer '" + token + "'", line);
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

bool sweepable_name(const std::string& name) {
    return name == "W" || name == "w" || name == "lambda" || name == "theta0";
}

std::string canonical_name(const std::string& name) { return name == "w" ? "W" : name; }

SweepAxis parse_axis(const std::string& value, int line) {
    std::vector<std::string> tok;
    for (const auto& piece : split(value, ' '))
        if (!piece.empty()) tok.push_back(piece);
    if (tok.size() != 4) throw ConfigError("axis expects 'name start stop count'", line);
    if (!sweepable_name(tok[0]))
        throw ConfigError("'" + tok[0] + "' is not sweepable (use W, lambda or theta0)", line);
    SweepAxis axis;
    axis.name = canonical_name(tok[0]);
    axis.start = parse_double(tok[1], line);
    axis.stop = parse_double(tok[2], line);
    axis.count = parse_int(tok[3], line);
    if (axis.count < 2) throw ConfigError("axis count must be >= 2", line);
    return axis;
}

const char* evaluator_name(Evaluator e) {
    switch (e) {
        case Evaluator::exact: return "exact";
        case Evaluator::kinematic: return "kinematic";
        case Evaluator::perturbative: return "perturbative";
        case Evaluator::markovian: return "markovian";
        case Evaluator::unitary: return "unitary";
    }
    return "?";
}

// 17 significant digits: enough for any double to re-parse to the same bits.
std::string format_cell(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

std::string format_cell(const std::optional<double>& v) {
    return v ? format_cell(*v) : std::string{};
}

nlohmann::ordered_json record_to_json(const PhaseRecord& r) {
    nlohmann::ordered_json obj;
    auto put = [&obj](const char* key, const std::optional<double>& v) {
        if (v)
            obj[key] = *v;
        else
            obj[key] = nullptr;
    };
    put("w_over_omega0", r.w);
    put("lambda_over_omega0", r.lambda);
    obj["theta0"] = r.theta0;
    put("phi_exact", r.phi_exact);
    put("phi_unitary", r.phi_unitary);
    put("phi_perturbative", r.phi_perturbative);
    put("phi_kinematic", r.phi_kinematic);
    put("phi_markovian", r.phi_markovian);
    put("correction", r.correction);
    put("quad_error", r.quad_error);
    return obj;
}

std::size_t worker_count(std::size_t jobs) {
    std::size_t n = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("QGP_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && parsed > 0) n = static_cast<std::size_t>(parsed);
    }
    return std::clamp<std::size_t>(n, 1, std::max<std::size_t>(jobs, 1));
}

}  // namespace

std::vector<double> SweepAxis::grid() const {
    if (!values.empty()) return values;
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        g[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
    return g;
}

void SweepSpec::validate() const {
    if (axes.empty() || axes.size() > 2) throw InvalidInput("a sweep needs 1 or 2 axes");
    for (const auto& axis : axes) {
        if (!sweepable_name(axis.name))
            throw InvalidInput("axis '" + axis.name + "' is not sweepable");
        if (axis.grid().size() < 2) throw InvalidInput("each axis needs at least 2 points");
    }
    if (axes.size() == 2 && canonical_name(axes[0].name) == canonical_name(axes[1].name))
        throw InvalidInput("swept axis names must be distinct");
    if (evaluators.empty()) throw InvalidInput("at least one evaluator is required");
    resolution.validate();
}

std::vector<Evaluator> parse_evaluators(const std::string& list) {
    std::vector<Evaluator> out;
    for (const auto& name : split(list, ',')) {
        if (name.empty()) continue;
        Evaluator e;
        if (name == "exact")
            e = Evaluator::exact;
        else if (name == "kinematic")
            e = Evaluator::kinematic;
        else if (name == "perturbative")
            e = Evaluator::perturbative;
        else if (name == "markovian")
            e = Evaluator::markovian;
        else if (name == "unitary")
            e = Evaluator::unitary;
        else
            throw ConfigError("unknown evaluator '" + name + "'");
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    if (out.empty()) throw ConfigError("empty evaluator list");
    return out;
}

SweepSpec parse_config(const std::string& text) {
    SweepSpec spec;
    spec.base.omega0 = 1.0;
    bool have_evaluators = false;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

        // ';' separates multiple entries on one line
        for (const auto& entry : split(line, ';')) {
            if (entry.empty()) continue;
            const auto eq = entry.find('=');
            if (eq == std::string::npos)
                throw ConfigError("expected 'key = value' in '" + entry + "'", lineno);
            const std::string key = trim(entry.substr(0, eq));
            const std::string value = trim(entry.substr(eq + 1));
            if (value.empty()) throw ConfigError("missing value for '" + key + "'", lineno);

            if (key == "axis" || key == "axis2") {
                SweepAxis axis = parse_axis(value, lineno);
                for (const auto& existing : spec.axes)
                    if (existing.name == axis.name)
                        throw ConfigError("duplicate axis over '" + axis.name + "'", lineno);
                if (spec.axes.size() >= 2)
                    throw ConfigError("at most two axes are supported", lineno);
                spec.axes.push_back(std::move(axis));
            } else if (key == "w" || key == "W") {
                spec.base.W = parse_double(value, lineno);
                if (spec.base.W < 0.0) throw ConfigError("w must be >= 0", lineno);
            } else if (key == "lambda") {
                spec.base.lambda = parse_double(value, lineno);
                if (spec.base.lambda < 0.0) throw ConfigError("lambda must be >= 0", lineno);
            } else if (key == "theta0") {
                spec.base.theta0 = parse_double(value, lineno);
                if (!(spec.base.theta0 >= 0.0 && spec.base.theta0 <= kPi))
                    throw ConfigError("theta0 must lie in [0, pi]", lineno);
            } else if (key == "evaluators") {
                try {
                    spec.evaluators = parse_evaluators(value);
                } catch (const ConfigError& e) {
                    throw ConfigError(e.what(), lineno);
                }
                have_evaluators = true;
            } else if (key == "samples") {
                spec.resolution.samples_per_period = parse_int(value, lineno);
                try {
                    spec.resolution.validate();
                } catch (const InvalidInput& e) {
                    throw ConfigError(e.what(), lineno);
                }
            } else if (key == "tolerance") {
                spec.resolution.refinement_tolerance = parse_double(value, lineno);
                if (!(spec.resolution.refinement_tolerance > 0.0))
                    throw ConfigError("tolerance must be positive", lineno);
            } else if (key == "output") {
                spec.output_path = value;
            } else if (key == "format") {
                if (value == "csv")
                    spec.format = OutputFormat::csv;
                else if (value == "json")
                    spec.format = OutputFormat::json;
                else
                    throw ConfigError("format must be csv or json", lineno);
            } else {
                throw ConfigError("unknown key '" + key + "'", lineno);
            }
        }
    }

    if (spec.axes.empty()) throw ConfigError("a sweep needs an 'axis' entry");
    if (!have_evaluators) spec.evaluators = {Evaluator::exact, Evaluator::unitary, Evaluator::perturbative};
    spec.validate();
    return spec;
}

SweepSpec figure_preset(const std::string& name) {
    SweepSpec spec;
    spec.base.omega0 = 1.0;
    const std::vector<double> lambda_set{0.0, 0.05, 1.0, 5.0};

    if (name == "fig1a" || name == "fig1b") {
        spec.base.lambda = name == "fig1a" ? 5.0 : 0.05;
        spec.axes.push_back({.name = "W", .start = 0.0, .stop = 1.0, .count = 41});
        spec.axes.push_back({.name = "theta0", .start = 0.0, .stop = kPi, .count = 41});
        spec.evaluators = {Evaluator::exact, Evaluator::unitary};
    } else if (name == "fig2") {
        spec.base.theta0 = kPi / 3.0;
        spec.axes.push_back({.name = "W", .start = 0.0, .stop = 1.0, .count = 51});
        spec.axes.push_back({.name = "lambda", .values = lambda_set});
        spec.evaluators = {Evaluator::exact, Evaluator::perturbative};
    } else if (name == "fig3") {
        spec.base.W = 0.2;
        spec.axes.push_back({.name = "theta0", .start = 0.0, .stop = kPi, .count = 61});
        spec.axes.push_back({.name = "lambda", .values = lambda_set});
        spec.evaluators = {Evaluator::exact, Evaluator::unitary};
    } else {
        throw ConfigError("unknown preset '" + name + "' (expected fig1a, fig1b, fig2 or fig3)");
    }
    spec.output_path = name + ".csv";
    spec.validate();
    return spec;
}

PhaseRecord evaluate_point(const SystemParams& params, std::span<const Evaluator> evaluators,
                           const QuadratureSettings& settings) {
    PhaseRecord rec;
    rec.w = params.W / params.omega0;
    rec.lambda = params.lambda / params.omega0;
    rec.theta0 = params.theta0;

    auto note_failure = [&rec](Evaluator e, const std::exception& ex) {
        if (!rec.error.empty()) rec.error += "; ";
        rec.error += std::string(evaluator_name(e)) + ": " + ex.what();
    };

    for (const Evaluator e : evaluators) {
        try {
            switch (e) {
                case Evaluator::unitary:
                    rec.phi_unitary = gp_unitary(params.theta0);
                    break;
                case Evaluator::exact: {
                    const GpEstimate g = gp_exact(params, settings);
                    rec.phi_exact = g.value;
                    rec.quad_error = g.error_estimate;
                    break;
                }
                case Evaluator::perturbative:
                    rec.phi_perturbative = gp_perturbative(params);
                    break;
                case Evaluator::markovian:
                    // missing by design for the ideal cavity, not an error
                    if (params.lambda > 0.0) rec.phi_markovian = gp_markovian_limit(params);
                    break;
                case Evaluator::kinematic: {
                    const double period = 2.0 * kPi / params.omega0;
                    const int n = settings.samples_per_period;
                    std::vector<QubitDensityMatrix> rho(static_cast<std::size_t>(n) + 1);
                    for (int i = 0; i <= n; ++i)
                        rho[static_cast<std::size_t>(i)] =
                            density_matrix(params.theta0, amplitude_analytic(params, period * i / n));
                    rec.phi_kinematic = gp_kinematic(rho);
                    break;
                }
            }
        } catch (const std::exception& ex) {
            note_failure(e, ex);
        }
    }
    if (rec.phi_exact && rec.phi_unitary) rec.correction = *rec.phi_unitary - *rec.phi_exact;
    return rec;
}

std::vector<PhaseRecord> run_sweep(const SweepSpec& spec) {
    spec.validate();

    const std::vector<double> outer = spec.axes[0].grid();
    const std::vector<double> inner =
        spec.axes.size() == 2 ? spec.axes[1].grid() : std::vector<double>{0.0};
    const std::size_t jobs = outer.size() * inner.size();

    auto params_at = [&spec, &outer, &inner](std::size_t flat) {
        SystemParams p = spec.base;
        p.omega0 = 1.0;
        auto assign = [&p](const std::string& name, double value) {
            if (name == "W")
                p.W = value;
            else if (name == "lambda")
                p.lambda = value;
            else
                p.theta0 = value;
        };
        assign(spec.axes[0].name, outer[flat / inner.size()]);
        if (spec.axes.size() == 2) assign(spec.axes[1].name, inner[flat % inner.size()]);
        return p;
    };

    std::vector<PhaseRecord> records(jobs);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) {
            try {
                records[i] = evaluate_point(params_at(i), spec.evaluators, spec.resolution);
            } catch (const std::exception& ex) {
                PhaseRecord rec;
                const SystemParams p = params_at(i);
                rec.w = p.W;
                rec.lambda = p.lambda;
                rec.theta0 = p.theta0;
                rec.error = ex.what();
                records[i] = std::move(rec);
            }
        }
    };

    const std::size_t pool = worker_count(jobs);
    if (pool <= 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (std::size_t i = 0; i < pool; ++i) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    return records;
}

PhaseRecord evaluate_tabulated(const Tabulated& sd, double theta0,
                               const VolterraSettings& settings) {
    validate(SpectralDensity{sd});
    const double period = 2.0 * kPi;  // omega0 = 1 in ratio units
    const CorrelationKernel kernel = correlation_kernel(SpectralDensity{sd});
    const AmplitudeTrajectory traj = solve_volterra(kernel, 1.0, period, settings);

    PhaseRecord rec;
    rec.theta0 = theta0;
    rec.phi_unitary = gp_unitary(theta0);
    const GpEstimate exact = gp_exact(theta0, traj, 1.0);
    rec.phi_exact = exact.value;
    rec.quad_error = exact.error_estimate;
    rec.correction = *rec.phi_unitary - *rec.phi_exact;

    std::vector<QubitDensityMatrix> rho(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) rho[i] = density_matrix(theta0, traj.c[i]);
    rec.phi_kinematic = gp_kinematic(rho);
    return rec;
}

std::string to_csv(std::span<const PhaseRecord> records) {
    std::string out =
        "w_over_omega0,lambda_over_omega0,theta0,phi_exact,phi_unitary,phi_perturbative,"
        "phi_kinematic,phi_markovian,correction,quad_error\n";
    for (const auto& r : records) {
        out += format_cell(r.w);
        out += ',';
        out += format_cell(r.lambda);
        out += ',';
        out += format_cell(r.theta0);
        out += ',';
        out += format_cell(r.phi_exact);
        out += ',';
        out += format_cell(r.phi_unitary);
        out += ',';
        out += format_cell(r.phi_perturbative);
        out += ',';
        out += format_cell(r.phi_kinematic);
        out += ',';
        out += format_cell(r.phi_markovian);
        out += ',';
        out += format_cell(r.correction);
        out += ',';
        out += format_cell(r.quad_error);
        out += '\n';
    }
    return out;
}

std::string to_json_string(std::span<const PhaseRecord> records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    return arr.dump(2) + "\n";
}

std::string to_json_string(const PhaseRecord& record) {
    return record_to_json(record).dump(2) + "\n";
}

void emit(std::span<const PhaseRecord> records, OutputFormat format,
          const std::filesystem::path& path) {
    if (records.empty()) throw InvalidInput("nothing to emit: no records");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path.string());
    out << (format == OutputFormat::csv ? to_csv(records) : to_json_string(records));
    out.flush();
    if (!out) throw IoError("failed writing output file: " + path.string());
}

}  // namespace qgp
