#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgp/geometric_phase.hpp"

namespace qgp {

enum class Evaluator { exact, kinematic, perturbative, markovian, unitary };
enum class OutputFormat { csv, json };

// One swept parameter: a uniform range, or an explicit value list when
// `values` is nonempty (used by the figure presets for their lambda sets).
struct SweepAxis {
    std::string name;  // W | lambda | theta0
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    std::vector<double> values;

    std::vector<double> grid() const;
};

struct SweepSpec {
    SystemParams base;            // omega0 normalized to 1; W, lambda as ratios
    std::vector<SweepAxis> axes;  // 1 or 2, distinct names
    std::vector<Evaluator> evaluators;
    QuadratureSettings resolution;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;

    void validate() const;
};

// Flattened result row. Entries that were not requested, or that do not
// exist for the parameter point (Markovian limit at lambda = 0), stay empty.
// A nonempty `error` flags a grid point whose evaluation failed.
struct PhaseRecord {
    std::optional<double> w;       // ratio to omega0
    std::optional<double> lambda;  // ratio to omega0
    double theta0 = 0.0;           // radians
    std::optional<double> phi_exact, phi_unitary, phi_perturbative, phi_kinematic, phi_markovian;
    std::optional<double> correction, quad_error;
    std::string error;
};

// Line-oriented `key = value` text with '#' comments; ';' also separates
// entries within a line. Keys: axis, axis2 (each "name start stop count"),
// w, lambda, theta0, evaluators, samples, tolerance, output, format.
// Frequencies are ratios to omega0. Errors carry the offending line number.
SweepSpec parse_config(const std::string& text);

// fig1a: (W x theta0) surface at lambda = 5;  fig1b: same at lambda = 0.05;
// fig2: W axis at theta0 = pi/3 for lambda in {0, 0.05, 1, 5};
// fig3: theta0 axis at W = 0.2 for the same lambda set.
// Ranges not fixed by the figures default to W in [0, 1], theta0 in [0, pi].
SweepSpec figure_preset(const std::string& name);

// Evaluates the grid row-major over the axes. Points are independent and run
// on a small worker pool (environment variable QGP_THREADS overrides its
// size); assembly order is deterministic regardless of scheduling. A failing
// grid point is flagged in its record and the sweep continues.
std::vector<PhaseRecord> run_sweep(const SweepSpec& spec);

// Single-point evaluation with per-evaluator failure isolation.
PhaseRecord evaluate_point(const SystemParams& params, std::span<const Evaluator> evaluators,
                           const QuadratureSettings& settings);

// Tabulated-density pipeline: correlation kernel -> Volterra trajectory over
// one quasicycle -> exact + kinematic phases. omega0 is normalized to 1, so
// the tabulated frequencies must be ratios to omega0.
PhaseRecord evaluate_tabulated(const Tabulated& sd, double theta0,
                               const VolterraSettings& settings = {});

// CSV: fixed header, 17-significant-digit cells, '.' decimal separator,
// newline-terminated rows; empty cells mark missing values. JSON: array of
// flat objects with the same keys, null for missing values. Both are
// byte-stable for identical records.
std::string to_csv(std::span<const PhaseRecord> records);
std::string to_json_string(std::span<const PhaseRecord> records);
std::string to_json_string(const PhaseRecord& record);

// Writes the chosen serialization; records must be nonempty.
void emit(std::span<const PhaseRecord> records, OutputFormat format,
          const std::filesystem::path& path);

// "exact,kinematic,..." -> evaluator list; duplicates are dropped.
std::vector<Evaluator> parse_evaluators(const std::string& list);

}  // namespace qgp
