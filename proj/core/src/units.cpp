#include "eitspec/units.hpp"

#include <string>

#include "eitspec/errors.hpp"

namespace eitspec {

namespace {

void check_dipole(double mu) {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw DomainError("invalid dipole moment " + std::to_string(mu) + " D: must be > 0");
    }
}

// Electric field amplitude (V/m) per cm^-1 of Rabi frequency, for a dipole in Debye.
double field_per_cm1(double mu_debye) {
    const double omega_per_cm1 = 2.0 * constants::pi * constants::speed_of_light * 1e2;
    return constants::hbar * omega_per_cm1 / (mu_debye * constants::debye);
}

// W/cm^2 per (V/m)^2.
constexpr double intensity_per_field2 =
    0.5 * constants::vacuum_permittivity * constants::speed_of_light * 1e-4;

}  // namespace

double wavenumber_to_frequency_ghz(Wavenumber x) { return x.cm1 * constants::ghz_per_cm1; }

Wavenumber frequency_ghz_to_wavenumber(double ghz) { return Wavenumber{ghz / constants::ghz_per_cm1}; }

double rabi_to_intensity(Wavenumber rabi, double dipole_debye) {
    check_dipole(dipole_debye);
    if (rabi.cm1 < 0.0) throw DomainError("Rabi frequency must be nonnegative");
    const double eps = rabi.cm1 * field_per_cm1(dipole_debye);
    return intensity_per_field2 * eps * eps;
}

Wavenumber intensity_to_rabi(double intensity_w_cm2, double dipole_debye) {
    check_dipole(dipole_debye);
    if (intensity_w_cm2 < 0.0) throw DomainError("intensity must be nonnegative");
    const double eps = std::sqrt(intensity_w_cm2 / intensity_per_field2);
    return Wavenumber{eps / field_per_cm1(dipole_debye)};
}

FieldSpec field_from_rabi(Wavenumber rabi, double dipole_debye) {
    return FieldSpec{dipole_debye, rabi, rabi_to_intensity(rabi, dipole_debye)};
}

}  // namespace eitspec
