#include "eitspec/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eitspec/csv.hpp"
#include "eitspec/errors.hpp"

namespace eitspec {

std::string_view to_string(LineRole r) {
    switch (r) {
        case LineRole::AResonant: return "A-resonant";
        case LineRole::BSpectator: return "B-spectator";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Eliminated: return "eliminated";
        case Verdict::Shifted: return "shifted";
        case Verdict::Untouched: return "untouched";
        case Verdict::ViolatesCriterion: return "violates-criterion";
    }
    return "?";
}

ATPositions at_shift_estimate(Wavenumber e_prime, Wavenumber delta_prime, Wavenumber rabi_prime) {
    const double d = delta_prime.cm1;
    if (d == 0.0) {
        throw DomainError("AT shift estimate diverges at zero detuning: the line is resonant (an A line)");
    }
    const double om = rabi_prime.cm1;
    // d/2 +- (d/2 + 2 om^2/d), expanded so the near branch does not cancel.
    const double pull = 2.0 * om * om / d;
    return ATPositions{Wavenumber{e_prime.cm1 + (d + pull)}, Wavenumber{e_prime.cm1 - pull}};
}

ATPositions at_shift_exact(Wavenumber e_prime, Wavenumber delta_prime, Wavenumber rabi_prime) {
    const double d = delta_prime.cm1;
    const double om = rabi_prime.cm1;
    const double op = generalized_rabi(delta_prime, rabi_prime).cm1;
    if (d == 0.0) return ATPositions{e_prime + Wavenumber{op}, e_prime - Wavenumber{op}};
    const double sign = d > 0.0 ? 1.0 : -1.0;
    // delta/2 - sign*Omega'' written without cancellation.
    const double near = -sign * om * om / (op + 0.5 * std::abs(d));
    return ATPositions{Wavenumber{e_prime.cm1 + d - near}, Wavenumber{e_prime.cm1 + near}};
}

const LineAssessment* ApplicabilityReport::find(std::string_view label) const {
    auto it = std::find_if(lines.begin(), lines.end(), [&](const LineAssessment& a) { return a.label == label; });
    return it == lines.end() ? nullptr : &*it;
}

std::size_t ApplicabilityReport::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(lines.begin(), lines.end(), [v](const LineAssessment& a) { return a.verdict == v; }));
}

LineAssessment assess_line(const SpectralLine& line, const std::optional<ControlField>& control,
                           std::optional<Wavenumber> gamma_ref, const PlannerOptions& options) {
    const double gamma = gamma_ref ? gamma_ref->cm1 : line.gamma.cm1;
    if (!(gamma > 0.0)) throw DomainError("reference line width must be > 0");

    LineAssessment a;
    a.label = line.label();
    if (!control) {
        a.role = LineRole::BSpectator;
        a.delta_prime = std::numeric_limits<double>::infinity();
        a.ratio = std::numeric_limits<double>::infinity();
        a.verdict = Verdict::Untouched;
        return a;
    }

    const double d = control->detuning().cm1;
    a.delta_prime = d;
    a.rabi = control->rabi.cm1;
    a.ratio = std::abs(d) / gamma;

    if (std::abs(d) <= options.eliminated_band * gamma) {
        const auto rel = at_shift_exact(Wavenumber{0.0}, control->detuning(), control->rabi);
        a.role = LineRole::AResonant;
        a.shift_near = rel.minus.cm1;
        a.shift_far = rel.plus.cm1;
        a.verdict = Verdict::Eliminated;
        return a;
    }

    // Shifts relative to E_e' directly, so large absolute positions cost no digits.
    const auto rel = at_shift_estimate(Wavenumber{0.0}, control->detuning(), control->rabi);
    a.role = LineRole::BSpectator;
    a.shift_near = rel.minus.cm1;
    a.shift_far = rel.plus.cm1;
    if (a.ratio < options.threshold) {
        a.verdict = Verdict::ViolatesCriterion;
    } else if (std::abs(a.shift_near) < options.untouched_shift_fraction * gamma) {
        a.verdict = Verdict::Untouched;
    } else {
        a.verdict = Verdict::Shifted;
    }
    return a;
}

ApplicabilityReport evaluate_lines(std::span<const SpectralLine> lines,
                                   std::span<const std::optional<ControlField>> controls,
                                   std::optional<Wavenumber> gamma_ref, const PlannerOptions& options) {
    if (lines.size() != controls.size()) throw DomainError("one control slot per line is required");
    ApplicabilityReport report;
    report.options = options;
    report.lines.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        report.lines.push_back(assess_line(lines[i], controls[i], gamma_ref, options));
    }
    return report;
}

ApplicabilityReport evaluate_control(const LineCatalog& cat, const ControlField& control, const EsMap& es_map,
                                     std::optional<Wavenumber> gamma_ref, const PlannerOptions& options) {
    std::vector<std::optional<ControlField>> per_line(cat.lines.size());
    for (std::size_t i = 0; i < cat.lines.size(); ++i) {
        const auto it = es_map.find(cat.lines[i].label());
        if (it == es_map.end() || !it->second) continue;
        per_line[i] = ControlField{control.omega_c, control.rabi, *it->second};
    }
    return evaluate_lines(cat.lines, per_line, gamma_ref, options);
}

std::string serialize_report(const ApplicabilityReport& report) {
    std::string out(report_header);
    out += '\n';
    for (const auto& a : report.lines) {
        out += a.label;
        out += ',';
        out += to_string(a.role);
        for (double v : {a.delta_prime, a.rabi, a.shift_near, a.shift_far, a.ratio}) {
            out += ',';
            out += csv::format_real(v);
        }
        out += ',';
        out += to_string(a.verdict);
        out += '\n';
    }
    return out;
}

}  // namespace eitspec
