#include "eitspec/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "bundled_data.hpp"
#include "eitspec/csv.hpp"
#include "eitspec/errors.hpp"

namespace eitspec {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw ParseError("scenario config: " + where + ": " + what);
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            schema_error(where, "unknown key '" + key + "'");
        }
    }
}

const json& require(const json& obj, const std::string& where, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) schema_error(where, std::string("missing key '") + key + "'");
    return *it;
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) schema_error(where, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) schema_error(where, "expected a finite number");
    return x;
}

std::string text(const json& v, const std::string& where) {
    if (!v.is_string()) schema_error(where, "expected a string");
    return v.get<std::string>();
}

GridSpec parse_grid(const json& g) {
    GridSpec spec;
    if (g.is_string()) {
        if (g.get<std::string>() != "auto") schema_error("grid", "expected \"auto\" or an object");
        return spec;
    }
    if (!g.is_object()) schema_error("grid", "expected \"auto\" or an object");
    check_keys(g, "grid", {"center_cm1", "halfwidth_cm1", "step_cm1"});
    spec.automatic = false;
    spec.center = Wavenumber{number(require(g, "grid", "center_cm1"), "grid.center_cm1")};
    spec.halfwidth = Wavenumber{number(require(g, "grid", "halfwidth_cm1"), "grid.halfwidth_cm1")};
    spec.step = Wavenumber{number(require(g, "grid", "step_cm1"), "grid.step_cm1")};
    if (!(spec.step.cm1 > 0.0)) schema_error("grid.step_cm1", "must be > 0");
    if (!(spec.halfwidth.cm1 > 0.0)) schema_error("grid.halfwidth_cm1", "must be > 0");
    return spec;
}

LineControl parse_control(const json& c, std::size_t i) {
    const std::string where = "controls[" + std::to_string(i) + "]";
    if (!c.is_object()) schema_error(where, "expected an object");
    check_keys(c, where, {"line", "omega_c_cm1", "rabi_cm1", "omega_es_cm1"});
    LineControl lc;
    lc.selector = text(require(c, where, "line"), where + ".line");
    lc.field.omega_c = Wavenumber{number(require(c, where, "omega_c_cm1"), where + ".omega_c_cm1")};
    lc.field.rabi = Wavenumber{number(require(c, where, "rabi_cm1"), where + ".rabi_cm1")};
    lc.field.omega_es = Wavenumber{number(require(c, where, "omega_es_cm1"), where + ".omega_es_cm1")};
    if (lc.field.rabi.cm1 < 0.0) schema_error(where + ".rabi_cm1", "must be >= 0");
    return lc;
}

MetricSpec parse_metrics(const json& m) {
    if (!m.is_object()) schema_error("metrics", "expected an object");
    check_keys(m, "metrics", {"target_cm1", "b_line", "at_line"});
    MetricSpec spec;
    if (m.contains("target_cm1")) spec.target = Wavenumber{number(m["target_cm1"], "metrics.target_cm1")};
    if (m.contains("b_line")) spec.b_line = text(m["b_line"], "metrics.b_line");
    if (m.contains("at_line")) spec.at_line = text(m["at_line"], "metrics.at_line");
    return spec;
}

std::string_view strip_json(std::string_view name) {
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") name.remove_suffix(5);
    return name;
}

ScenarioMetrics compute_metrics(const ScenarioConfig& cfg, const LineCatalog& cat, const SpectrumGrid& s,
                                const std::vector<std::optional<ControlField>>& assigned) {
    ScenarioMetrics m;
    std::optional<std::string> at_line = cfg.metrics.at_line;
    for (std::size_t i = 0; i < assigned.size() && !at_line; ++i) {
        if (assigned[i] && assigned[i]->detuning().cm1 == 0.0) at_line = cat.lines[i].label();
    }

    if (at_line && !cat.find(*at_line)) {
        throw ParseError("metrics.at_line: no line labelled '" + *at_line + "'");
    }
    if (cfg.metrics.target) {
        m.target = *cfg.metrics.target;
    } else if (at_line) {
        m.target = cat.find(*at_line)->omega_ge;
    } else if (!cat.empty()) {
        m.target = cat.lines.front().omega_ge;
    } else {
        m.target = s.energies[s.energies.size() / 2];
    }
    m.residual = s.total[nearest_index(s.energies, m.target)];

    if (cfg.metrics.b_line) {
        const SpectralLine* b = cat.find(*cfg.metrics.b_line);
        if (!b) throw ParseError("metrics.b_line: no line labelled '" + *cfg.metrics.b_line + "'");
        const double lo = b->omega_ge.cm1 - 0.5 * b->gamma.cm1;
        const double hi = b->omega_ge.cm1 + 0.5 * b->gamma.cm1;
        std::optional<std::size_t> best;
        for (std::size_t k = 0; k < s.energies.size(); ++k) {
            const double e = s.energies[k].cm1;
            if (e < lo || e > hi) continue;
            if (!best || s.total[k] > s.total[*best]) best = k;
        }
        if (best) m.b_peak_shift = s.energies[*best].cm1 - b->omega_ge.cm1;
    }

    if (at_line) {
        const auto& values = s.find(*at_line)->values;
        auto peaks = local_maxima(values);
        if (peaks.size() >= 2) {
            std::stable_sort(peaks.begin(), peaks.end(),
                             [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
            m.at_separation = std::abs(s.energies[peaks[0]].cm1 - s.energies[peaks[1]].cm1);
        }
    }
    return m;
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) schema_error("top level", "expected an object");
    check_keys(doc, "top level",
               {"name", "description", "catalog", "controls", "grid", "probe_amp", "gamma_ref_cm1", "threshold",
                "metrics"});

    ScenarioConfig cfg;
    cfg.base_dir = base_dir;
    cfg.name = text(require(doc, "top level", "name"), "name");
    if (doc.contains("description")) cfg.description = text(doc["description"], "description");
    cfg.catalog = text(require(doc, "top level", "catalog"), "catalog");

    const json& controls = require(doc, "top level", "controls");
    if (!controls.is_array()) schema_error("controls", "expected an array");
    for (std::size_t i = 0; i < controls.size(); ++i) cfg.controls.push_back(parse_control(controls[i], i));

    if (doc.contains("grid")) cfg.grid = parse_grid(doc.at("grid"));
    if (doc.contains("probe_amp")) cfg.probe_amp = number(doc.at("probe_amp"), "probe_amp");
    if (cfg.probe_amp < 0.0) schema_error("probe_amp", "must be >= 0");

    if (doc.contains("gamma_ref_cm1")) {
        cfg.gamma_ref = Wavenumber{number(doc["gamma_ref_cm1"], "gamma_ref_cm1")};
        if (!(cfg.gamma_ref->cm1 > 0.0)) schema_error("gamma_ref_cm1", "must be > 0");
    }
    if (doc.contains("threshold")) {
        cfg.planner.threshold = number(doc["threshold"], "threshold");
        if (!(cfg.planner.threshold > 0.0)) schema_error("threshold", "must be > 0");
    }
    if (doc.contains("metrics")) cfg.metrics = parse_metrics(doc["metrics"]);
    return cfg;
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
    return parse_scenario(read_text_file(path), path.parent_path());
}

std::vector<ScenarioInfo> list_scenarios() {
    std::vector<ScenarioInfo> out;
    for (const auto& f : detail::bundled_files()) {
        if (f.kind != "scenarios") continue;
        const auto cfg = parse_scenario(f.content);
        out.push_back({cfg.name, cfg.description});
    }
    std::sort(out.begin(), out.end(), [](const ScenarioInfo& a, const ScenarioInfo& b) { return a.name < b.name; });
    return out;
}

std::string_view bundled_scenario_text(std::string_view name) {
    const auto stem = strip_json(name);
    for (const auto& f : detail::bundled_files()) {
        if (f.kind == "scenarios" && strip_json(f.name) == stem) return f.content;
    }
    std::string known;
    for (const auto& s : list_scenarios()) known += (known.empty() ? "" : ", ") + s.name;
    throw UnknownScenarioError("unknown scenario '" + std::string(name) + "' (available: " + known + ")");
}

ScenarioConfig bundled_scenario(std::string_view name) { return parse_scenario(bundled_scenario_text(name)); }

ScenarioConfig with_rabi(ScenarioConfig cfg, Wavenumber rabi) {
    for (auto& c : cfg.controls) c.field.rabi = rabi;
    return cfg;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
    ScenarioResult r;
    r.catalog = load_catalog(cfg.catalog, cfg.base_dir);

    const auto grid = cfg.grid.automatic ? default_grid(r.catalog.lines)
                                         : make_grid(cfg.grid.center, cfg.grid.halfwidth, cfg.grid.step);
    const auto assigned = assign_controls(r.catalog.lines, cfg.controls);
    r.spectrum = synthesize_spectrum(r.catalog.lines, cfg.controls, grid, cfg.probe_amp);
    r.report = evaluate_lines(r.catalog.lines, assigned, cfg.gamma_ref, cfg.planner);
    r.metrics = compute_metrics(cfg, r.catalog, r.spectrum, assigned);
    return r;
}

std::string serialize_spectrum(const SpectrumGrid& spectrum) {
    std::string out = "energy_cm1,total";
    for (const auto& ls : spectrum.per_line) out += ',' + ls.label;
    out += '\n';
    for (std::size_t k = 0; k < spectrum.energies.size(); ++k) {
        out += csv::format_real(spectrum.energies[k].cm1);
        out += ',';
        out += csv::format_real(spectrum.total[k]);
        for (const auto& ls : spectrum.per_line) {
            out += ',';
            out += csv::format_real(ls.values[k]);
        }
        out += '\n';
    }
    return out;
}

void write_outputs(const ScenarioResult& result, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ParseError("cannot create output directory " + dir.string() + ": " + ec.message());
    const auto write = [](const std::filesystem::path& p, const std::string& body) {
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        if (!out) throw ParseError("cannot write " + p.string());
        out << body;
        if (!out) throw ParseError("write failed: " + p.string());
    };
    write(dir / "spectrum.csv", serialize_spectrum(result.spectrum));
    write(dir / "report.csv", serialize_report(result.report));
}

std::size_t nearest_index(std::span<const Wavenumber> energies, Wavenumber e) {
    if (energies.empty()) throw DomainError("empty energy grid");
    const auto it = std::lower_bound(energies.begin(), energies.end(), e);
    if (it == energies.begin()) return 0;
    if (it == energies.end()) return energies.size() - 1;
    const auto hi = static_cast<std::size_t>(it - energies.begin());
    return (e.cm1 - energies[hi - 1].cm1 <= it->cm1 - e.cm1) ? hi - 1 : hi;
}

std::vector<std::size_t> local_maxima(std::span<const double> values) {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k + 1 < values.size(); ++k) {
        if (values[k - 1] < values[k] && values[k] >= values[k + 1]) out.push_back(k);
    }
    return out;
}

}  // namespace eitspec
