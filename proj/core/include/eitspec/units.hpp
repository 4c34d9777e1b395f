// units.hpp: spectroscopic units and control-field intensity relations.
//
// Every energy and frequency inside eitspec is a wavenumber in cm^-1. GHz,
// Debye and W/cm^2 appear only at the boundaries handled here.

#pragma once

#include <cmath>
#include <compare>

namespace eitspec {

struct Wavenumber {
    double cm1{0.0};

    constexpr Wavenumber() = default;
    constexpr explicit Wavenumber(double v) : cm1(v) {}

    constexpr Wavenumber operator-() const { return Wavenumber{-cm1}; }
    constexpr Wavenumber& operator+=(Wavenumber o) { cm1 += o.cm1; return *this; }
    constexpr Wavenumber& operator-=(Wavenumber o) { cm1 -= o.cm1; return *this; }

    friend constexpr Wavenumber operator+(Wavenumber a, Wavenumber b) { return Wavenumber{a.cm1 + b.cm1}; }
    friend constexpr Wavenumber operator-(Wavenumber a, Wavenumber b) { return Wavenumber{a.cm1 - b.cm1}; }
    friend constexpr Wavenumber operator*(double s, Wavenumber a) { return Wavenumber{s * a.cm1}; }
    friend constexpr Wavenumber operator*(Wavenumber a, double s) { return Wavenumber{s * a.cm1}; }
    friend constexpr Wavenumber operator/(Wavenumber a, double s) { return Wavenumber{a.cm1 / s}; }
    friend constexpr double operator/(Wavenumber a, Wavenumber b) { return a.cm1 / b.cm1; }
    friend constexpr auto operator<=>(Wavenumber, Wavenumber) = default;
};

namespace literals {
constexpr Wavenumber operator""_cm1(long double v) { return Wavenumber{static_cast<double>(v)}; }
constexpr Wavenumber operator""_cm1(unsigned long long v) { return Wavenumber{static_cast<double>(v)}; }
}  // namespace literals

namespace constants {
// CODATA 2022, SI. c and hbar are exact.
inline constexpr double speed_of_light = 299792458.0;                // m/s
inline constexpr double hbar = 6.62607015e-34 / (2.0 * 3.141592653589793238462643383279502884);  // J s
inline constexpr double vacuum_permittivity = 8.8541878188e-12;     // F/m
inline constexpr double debye = 1e-21 / speed_of_light;      // C m
inline constexpr double pi = 3.141592653589793238462643383279502884;
// 1 cm^-1 expressed in GHz.
inline constexpr double ghz_per_cm1 = speed_of_light * 1e2 / 1e9;
}  // namespace constants

// Field parameters for one control transition.
struct FieldSpec {
    double dipole_debye{0.0};
    Wavenumber rabi{};
    double intensity_w_cm2{0.0};
};

double wavenumber_to_frequency_ghz(Wavenumber x);
Wavenumber frequency_ghz_to_wavenumber(double ghz);

// I = eps0 c eps^2 / 2 with eps = hbar Omega / mu and Omega = 2 pi c x.
// Throws DomainError for mu <= 0 or a negative Rabi frequency.
double rabi_to_intensity(Wavenumber rabi, double dipole_debye);

// Inverse of rabi_to_intensity. Throws DomainError for mu <= 0 or I < 0.
Wavenumber intensity_to_rabi(double intensity_w_cm2, double dipole_debye);

FieldSpec field_from_rabi(Wavenumber rabi, double dipole_debye);

}  // namespace eitspec
