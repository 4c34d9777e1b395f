#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eitspec/catalog.hpp"
#include "eitspec/csv.hpp"
#include "eitspec/errors.hpp"
#include "eitspec/lineshape.hpp"
#include "eitspec/planner.hpp"
#include "eitspec/scenarios.hpp"
#include "eitspec/units.hpp"

#ifndef EITSPEC_VERSION
#define EITSPEC_VERSION "0.0.0"
#endif

namespace eitspec::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<double> parse_triple(const std::string& arg, const char* what) {
    const auto fields = csv::split_row(arg);
    std::vector<double> out;
    for (const auto& f : fields) {
        const auto v = csv::parse_real(f);
        if (!v || !std::isfinite(*v)) throw UsageError(std::string(what) + ": not a number: '" + f + "'");
        out.push_back(*v);
    }
    if (out.size() != 3) throw UsageError(std::string(what) + ": expected three comma-separated numbers");
    return out;
}

std::string format_sig(double v, int digits) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::string(buf, static_cast<std::size_t>(n));
}

void emit(const std::string& body, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << body;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ParseError("cannot write " + path);
    f << body;
}

// Header: line,omega_c_cm1,rabi_cm1,omega_es_cm1
std::vector<LineControl> read_controls(const std::string& path) {
    const auto text = read_text_file(path);
    std::vector<LineControl> controls;
    bool header = false;
    const auto rows = csv::split_lines(text);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto t = csv::trim(rows[i]);
        if (t.empty() || t.front() == '#') continue;
        const auto f = csv::split_row(rows[i]);
        const std::string where = path + ": row " + std::to_string(i + 1);
        if (!header) {
            if (csv::trim(rows[i]) != "line,omega_c_cm1,rabi_cm1,omega_es_cm1") {
                throw ParseError(where + ": header must be 'line,omega_c_cm1,rabi_cm1,omega_es_cm1'");
            }
            header = true;
            continue;
        }
        if (f.size() != 4) throw ParseError(where + ": expected 4 columns");
        double v[3];
        static const char* names[3] = {"omega_c_cm1", "rabi_cm1", "omega_es_cm1"};
        for (int c = 0; c < 3; ++c) {
            const auto x = csv::parse_real(f[c + 1]);
            if (!x || !std::isfinite(*x)) throw ParseError(where + ", column '" + names[c] + "': not a finite number");
            v[c] = *x;
        }
        if (v[1] < 0.0) throw ParseError(where + ", column 'rabi_cm1': must be >= 0");
        controls.push_back({std::string(csv::trim(f[0])), ControlField{Wavenumber{v[0]}, Wavenumber{v[1]}, Wavenumber{v[2]}}});
    }
    if (!header) throw ParseError(path + ": missing header");
    return controls;
}

// Header: label,omega_es_cm1 ("none" = no coupled |s>)
EsMap read_es_map(const std::string& path) {
    const auto text = read_text_file(path);
    EsMap map;
    bool header = false;
    const auto rows = csv::split_lines(text);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto t = csv::trim(rows[i]);
        if (t.empty() || t.front() == '#') continue;
        const std::string where = path + ": row " + std::to_string(i + 1);
        if (!header) {
            if (t != "label,omega_es_cm1") throw ParseError(where + ": header must be 'label,omega_es_cm1'");
            header = true;
            continue;
        }
        const auto f = csv::split_row(rows[i]);
        if (f.size() != 2) throw ParseError(where + ": expected 2 columns");
        const auto label = std::string(csv::trim(f[0]));
        if (csv::trim(f[1]) == "none") {
            map[label] = std::nullopt;
            continue;
        }
        const auto x = csv::parse_real(f[1]);
        if (!x || !std::isfinite(*x)) throw ParseError(where + ", column 'omega_es_cm1': not a finite number");
        map[label] = Wavenumber{*x};
    }
    if (!header) throw ParseError(path + ": missing header");
    return map;
}

void print_metrics(const ScenarioConfig& cfg, const ScenarioResult& r, std::ostream& out) {
    out << "scenario: " << cfg.name << '\n';
    out << "target_cm1: " << csv::format_real(r.metrics.target.cm1) << '\n';
    out << "residual_at_target: " << csv::format_real(r.metrics.residual) << '\n';
    if (r.metrics.b_peak_shift) out << "b_peak_shift_cm1: " << csv::format_real(*r.metrics.b_peak_shift) << '\n';
    if (r.metrics.at_separation) out << "at_peak_separation_cm1: " << csv::format_real(*r.metrics.at_separation) << '\n';
    for (auto v : {Verdict::Eliminated, Verdict::Untouched, Verdict::Shifted, Verdict::ViolatesCriterion}) {
        out << to_string(v) << ": " << r.report.count(v) << '\n';
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"eitspec: EIT-modified absorption spectra of overlapping molecular lines", "eitspec"};
    app.set_version_flag("--version", std::string("eitspec ") + EITSPEC_VERSION);
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Run a bundled scenario or a scenario config file");
    std::string scenario_name, config_path, out_dir = ".";
    std::optional<double> rabi_override;
    auto* opt_scn = run_cmd->add_option("--scenario", scenario_name, "Bundled scenario name (see `list`)");
    auto* opt_cfg = run_cmd->add_option("--config", config_path, "Scenario config file (JSON)");
    opt_scn->excludes(opt_cfg);
    run_cmd->add_option("--out", out_dir, "Output directory for spectrum.csv and report.csv")->capture_default_str();
    run_cmd->add_option("--rabi", rabi_override, "Override every control's Rabi frequency (cm^-1)");

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "Synthesize a spectrum from a line list and controls");
    std::string catalog_path, controls_path, grid_arg, spec_out;
    double probe_amp = 1.0;
    spec_cmd->add_option("--catalog", catalog_path, "Line-list CSV or bundled catalog name")->required();
    spec_cmd->add_option("--controls", controls_path, "Controls CSV: line,omega_c_cm1,rabi_cm1,omega_es_cm1");
    spec_cmd->add_option("--grid", grid_arg, "Energy grid center,halfwidth,step in cm^-1 (default: auto)");
    spec_cmd->add_option("--probe-amp", probe_amp, "Probe amplitude (arbitrary units)")->capture_default_str();
    spec_cmd->add_option("--out", spec_out, "Output CSV file (default: standard output)");

    // plan
    auto* plan_cmd = app.add_subcommand("plan", "Classify every line under a proposed control field");
    std::string plan_catalog, control_arg, es_map_path, plan_out;
    std::optional<double> gamma_ref;
    double threshold = PlannerOptions{}.threshold;
    plan_cmd->add_option("--catalog", plan_catalog, "Line-list CSV or bundled catalog name")->required();
    plan_cmd->add_option("--control", control_arg, "Control omega_c,rabi,omega_es in cm^-1")->required();
    plan_cmd->add_option("--es-map", es_map_path,
                         "Per-line e-s frequencies CSV: label,omega_es_cm1 (value 'none' = uncoupled)");
    plan_cmd->add_option("--gamma", gamma_ref, "Reference line width in cm^-1 (default: each line's own)");
    plan_cmd->add_option("--threshold", threshold, "Minimum |delta'|/Gamma for spectators")->capture_default_str();
    plan_cmd->add_option("--out", plan_out, "Output CSV file (default: standard output)");

    // convert
    auto* conv_cmd = app.add_subcommand("convert", "Convert a wavenumber to GHz or a control intensity");
    double wavenumber = 0.0;
    std::string to;
    std::optional<double> mu;
    int precision = 5;
    conv_cmd->add_option("--wavenumber", wavenumber, "Value in cm^-1 (Rabi frequency for --to intensity)")->required();
    conv_cmd->add_option("--to", to, "Target: ghz or intensity (W/cm^2)")
        ->required()
        ->check(CLI::IsMember({"ghz", "intensity"}));
    conv_cmd->add_option("--mu", mu, "Transition dipole in Debye (required for intensity)");
    conv_cmd->add_option("--precision", precision, "Significant digits printed")
        ->capture_default_str()
        ->check(CLI::Range(1, 17));

    // list
    auto* list_cmd = app.add_subcommand("list", "List bundled scenarios");
    std::string show_name;
    bool list_catalogs = false;
    list_cmd->add_option("--show", show_name, "Print the config of one bundled scenario");
    list_cmd->add_flag("--catalogs", list_catalogs, "List bundled catalogs instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (run_cmd->parsed()) {
            if (scenario_name.empty() == config_path.empty()) {
                throw UsageError("run: exactly one of --scenario or --config is required");
            }
            ScenarioConfig cfg = scenario_name.empty() ? load_scenario_file(config_path) : bundled_scenario(scenario_name);
            if (rabi_override) {
                if (*rabi_override < 0.0 || !std::isfinite(*rabi_override)) throw UsageError("--rabi must be >= 0");
                cfg = with_rabi(std::move(cfg), Wavenumber{*rabi_override});
            }
            const auto result = run_scenario(cfg);
            write_outputs(result, out_dir);
            print_metrics(cfg, result, out);
        } else if (spec_cmd->parsed()) {
            const auto cat = load_catalog(catalog_path);
            const auto controls = controls_path.empty() ? std::vector<LineControl>{} : read_controls(controls_path);
            std::vector<Wavenumber> grid;
            if (grid_arg.empty()) {
                grid = default_grid(cat.lines);
            } else {
                const auto g = parse_triple(grid_arg, "--grid");
                grid = make_grid(Wavenumber{g[0]}, Wavenumber{g[1]}, Wavenumber{g[2]});
            }
            emit(serialize_spectrum(synthesize_spectrum(cat.lines, controls, grid, probe_amp)), spec_out, out);
        } else if (plan_cmd->parsed()) {
            const auto cat = load_catalog(plan_catalog);
            const auto c = parse_triple(control_arg, "--control");
            if (c[1] < 0.0) throw UsageError("--control: Rabi frequency must be >= 0");
            const ControlField control{Wavenumber{c[0]}, Wavenumber{c[1]}, Wavenumber{c[2]}};
            EsMap es;
            for (const auto& l : cat.lines) es[l.label()] = control.omega_es;
            if (!es_map_path.empty()) {
                for (auto& [label, value] : read_es_map(es_map_path)) {
                    if (!cat.find(label)) throw ParseError(es_map_path + ": no line labelled '" + label + "'");
                    es[label] = value;
                }
            }
            if (gamma_ref && !(*gamma_ref > 0.0)) throw UsageError("--gamma must be > 0");
            PlannerOptions opts;
            opts.threshold = threshold;
            const auto report = evaluate_control(
                cat, control, es, gamma_ref ? std::optional<Wavenumber>{Wavenumber{*gamma_ref}} : std::nullopt, opts);
            emit(serialize_report(report), plan_out, out);
        } else if (conv_cmd->parsed()) {
            if (!std::isfinite(wavenumber)) throw UsageError("--wavenumber must be finite");
            if (to == "ghz") {
                out << format_sig(wavenumber_to_frequency_ghz(Wavenumber{wavenumber}), precision) << '\n';
            } else {
                if (!mu) throw UsageError("convert --to intensity requires --mu");
                out << format_sig(rabi_to_intensity(Wavenumber{wavenumber}, *mu), precision) << '\n';
            }
        } else if (list_cmd->parsed()) {
            if (!show_name.empty()) {
                out << bundled_scenario_text(show_name);
            } else if (list_catalogs) {
                for (const auto& n : bundled_catalog_names()) out << n << '\n';
            } else {
                for (const auto& s : list_scenarios()) out << s.name << '\t' << s.description << '\n';
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnknownScenarioError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SingularMatrixError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kOk;
}

}  // namespace eitspec::cli
