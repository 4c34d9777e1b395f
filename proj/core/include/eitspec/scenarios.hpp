// scenarios.hpp: named, data-driven experiments and their CSV outputs.
//
// A scenario config is a JSON document:
//
//   {
//     "name": "fig4-two-lines",
//     "description": "...",                      // optional
//     "catalog": "fig4_two_lines",               // bundled name or CSV path
//     "controls": [{"line": "A/line", "omega_c_cm1": 300, "rabi_cm1": 2.5,
//                   "omega_es_cm1": 300}],
//     "grid": {"center_cm1": 100, "halfwidth_cm1": 10, "step_cm1": 0.02},
//                                                // or "auto" (the default)
//     "probe_amp": 1.0,                          // optional, default 1
//     "gamma_ref_cm1": 0.01,                     // optional
//     "threshold": 10,                           // optional
//     "metrics": {"target_cm1": 100, "b_line": "B/line",
//                 "at_line": "A/line"}           // optional, all keys optional
//   }
//
// Relative catalog paths are resolved against the config file's directory.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eitspec/catalog.hpp"
#include "eitspec/lineshape.hpp"
#include "eitspec/planner.hpp"

namespace eitspec {

struct GridSpec {
    bool automatic{true};
    Wavenumber center{};
    Wavenumber halfwidth{};
    Wavenumber step{};
};

struct MetricSpec {
    std::optional<Wavenumber> target;
    std::optional<std::string> b_line;
    std::optional<std::string> at_line;
};

struct ScenarioConfig {
    std::string name;
    std::string description;
    std::string catalog;
    std::filesystem::path base_dir;
    std::vector<LineControl> controls;
    GridSpec grid;
    double probe_amp{1.0};
    std::optional<Wavenumber> gamma_ref;
    PlannerOptions planner;
    MetricSpec metrics;
};

struct ScenarioMetrics {
    Wavenumber target{};
    double residual{0.0};                 // total absorption at the grid point nearest target
    std::optional<double> b_peak_shift;   // total-spectrum maximum near the B line minus its center
    std::optional<double> at_separation;  // distance between the two highest maxima of at_line
};

struct ScenarioResult {
    LineCatalog catalog;
    SpectrumGrid spectrum;
    ApplicabilityReport report;
    ScenarioMetrics metrics;
};

struct ScenarioInfo {
    std::string name;
    std::string description;
};

// Throws ParseError on malformed JSON or schema violations.
ScenarioConfig parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir = {});
ScenarioConfig load_scenario_file(const std::filesystem::path& path);

// Bundled scenarios, sorted by name.
std::vector<ScenarioInfo> list_scenarios();

// Throws UnknownScenarioError listing the available names.
ScenarioConfig bundled_scenario(std::string_view name);
std::string_view bundled_scenario_text(std::string_view name);

// Replaces the Rabi frequency of every control.
ScenarioConfig with_rabi(ScenarioConfig cfg, Wavenumber rabi);

ScenarioResult run_scenario(const ScenarioConfig& cfg);

// Header energy_cm1,total,<label>... then one row per grid point.
std::string serialize_spectrum(const SpectrumGrid& spectrum);

// Writes spectrum.csv and report.csv into dir (created if needed).
void write_outputs(const ScenarioResult& result, const std::filesystem::path& dir);

// Index of the grid point closest to e (ties resolve to the lower index).
std::size_t nearest_index(std::span<const Wavenumber> energies, Wavenumber e);

// Indices k with v[k-1] < v[k] >= v[k+1].
std::vector<std::size_t> local_maxima(std::span<const double> values);

}  // namespace eitspec
