// planner.hpp: predicts what a control field does to every line of a catalog.
//
// A line whose e-s transition is within one linewidth of the control
// frequency is eliminated (EIT hole plus AT splitting). Every other coupled
// line is a spectator: its dressed level is pushed by the near-branch AT
// shift, estimated as -2 Omega'^2 / delta'. A spectator is left untouched
// when |delta'| / Gamma reaches the applicability threshold and the shift
// stays below a tenth of the linewidth.

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eitspec/catalog.hpp"
#include "eitspec/dressed.hpp"
#include "eitspec/lineshape.hpp"

namespace eitspec {

enum class LineRole { AResonant, BSpectator };
enum class Verdict { Eliminated, Shifted, Untouched, ViolatesCriterion };

std::string_view to_string(LineRole r);
std::string_view to_string(Verdict v);

// Dressed level positions of a spectator transition. `minus` is the near
// branch (the displaced line itself), `plus` the far AT partner.
struct ATPositions {
    Wavenumber plus{};
    Wavenumber minus{};
};

// E_AT(+-) = E_e' + [delta'/2 +- (delta'/2 + 2 Omega'^2 / delta')].
// Valid for |delta'| >> Omega'. Throws DomainError for delta' == 0.
ATPositions at_shift_estimate(Wavenumber e_prime, Wavenumber delta_prime, Wavenumber rabi_prime);

// Exact dressed positions E_e' + delta'/2 -+ sign(delta') Omega'' with
// Omega'' = sqrt(delta'^2/4 + Omega'^2); `minus` is again the branch nearer
// to E_e'. At delta' == 0 the branches are E_e' -+ Omega'.
ATPositions at_shift_exact(Wavenumber e_prime, Wavenumber delta_prime, Wavenumber rabi_prime);

struct PlannerOptions {
    double threshold{10.0};              // minimum |delta'|/Gamma for a spectator
    double eliminated_band{1.0};         // |delta'| <= band * Gamma is an A line
    double untouched_shift_fraction{0.1};  // |near shift| < fraction * Gamma
};

struct LineAssessment {
    std::string label;
    LineRole role{LineRole::BSpectator};
    double delta_prime{0.0};  // cm^-1, +inf when no |s> state is coupled
    double rabi{0.0};         // cm^-1
    double shift_near{0.0};   // near-branch displacement from E_e', cm^-1
    double shift_far{0.0};    // far-branch displacement from E_e', cm^-1
    double ratio{0.0};        // |delta'| / Gamma
    Verdict verdict{Verdict::Untouched};
};

struct ApplicabilityReport {
    std::vector<LineAssessment> lines;  // catalog order
    PlannerOptions options;

    const LineAssessment* find(std::string_view label) const;
    std::size_t count(Verdict v) const;
};

inline constexpr std::string_view report_header =
    "label,role,delta_prime_cm1,rabi_cm1,shift_near_cm1,shift_far_cm1,ratio,verdict";

// Assessment of one line under its own control (nullopt = no coupled |s>).
// gamma_ref replaces the line's own width when given.
LineAssessment assess_line(const SpectralLine& line, const std::optional<ControlField>& control,
                           std::optional<Wavenumber> gamma_ref, const PlannerOptions& options = {});

// Per-line controls, e.g. from assign_controls().
ApplicabilityReport evaluate_lines(std::span<const SpectralLine> lines,
                                   std::span<const std::optional<ControlField>> controls,
                                   std::optional<Wavenumber> gamma_ref, const PlannerOptions& options = {});

// One control laser; es_map gives each line's e-s transition frequency.
// Lines missing from the map (or mapped to nullopt) have no coupled |s>.
using EsMap = std::map<std::string, std::optional<Wavenumber>, std::less<>>;
ApplicabilityReport evaluate_control(const LineCatalog& cat, const ControlField& control, const EsMap& es_map,
                                     std::optional<Wavenumber> gamma_ref, const PlannerOptions& options = {});

std::string serialize_report(const ApplicabilityReport& report);

}  // namespace eitspec
