// lineshape.hpp: probe absorption of control-dressed lines.
//
// A controlled line is modelled as two Autler-Townes dressed states coupled
// to a shared unstructured continuum (coupling sqrt(Gamma/pi)). The 2x2
// effective Hamiltonian H(E) is inverted and contracted with the dressed
// |e> amplitudes to give the bound-continuum transition dipole. At zero
// control detuning a closed form is available and used instead.
//
// Profiles are normalised so that an uncontrolled line peaks at its
// strength; probe absorption is first order in the probe field.

#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eitspec/dressed.hpp"
#include "eitspec/units.hpp"

namespace eitspec {

struct SpectralLine {
    Wavenumber omega_ge{};  // bare |g> -> |e> transition
    Wavenumber gamma{};     // FWHM of the uncontrolled line, > 0
    double strength{1.0};   // peak absorption of the uncontrolled line
    std::string species;
    std::string branch;

    std::string label() const { return species + "/" + branch; }
};

struct ComplexMatrix2 {
    using value_type = std::complex<double>;
    value_type m11{}, m12{}, m21{}, m22{};

    value_type det() const { return m11 * m22 - m12 * m21; }
    friend ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }
    friend bool operator==(const ComplexMatrix2&, const ComplexMatrix2&) = default;
};

// Largest entry modulus of a - b.
double max_abs_difference(const ComplexMatrix2& a, const ComplexMatrix2& b);

inline constexpr double singular_det_floor = 1e-300;

// Continuum coupling for an unstructured continuum, sqrt(Gamma/pi).
double continuum_coupling(Wavenumber gamma);

// H(E) with diagonal E - E_e - delta/2 - lambda_j - i Gamma/2 and off-diagonal
// -i Gamma/2.
ComplexMatrix2 effective_hamiltonian(Wavenumber energy, const SpectralLine& line,
                                     const DressedSystem& ds);

// Throws SingularMatrixError when |det| < singular_det_floor.
ComplexMatrix2 invert_2x2(const ComplexMatrix2& m);

// General-detuning dipole V * sum_ij w_i w_j* D_ij with D = H(E)^-1 and
// w_j the dressed |e> amplitudes. Constant prefactors live in the line
// strength. Propagates SingularMatrixError.
std::complex<double> transition_dipole(Wavenumber energy, const SpectralLine& line,
                                       const DressedSystem& ds);

// Zero-detuning closed form (E - E_e) / D,
//   D = (E - E_e - i Gamma/4)^2 + Gamma^2/16 - rabi^2.
// At rabi == 0 the common factor is cancelled: 1 / (E - E_e - i Gamma/2).
std::complex<double> transition_dipole_resonant(Wavenumber energy, const SpectralLine& line,
                                                Wavenumber rabi);

// 2 pi |probe_amp * mu|^2.
double absorption_probability(double probe_amp, std::complex<double> mu);

// Uncontrolled Lorentzian of FWHM gamma, peak 1 at the line center.
double lorentzian(Wavenumber energy, const SpectralLine& line);

// Absorption of one line on the grid. No control (or zero Rabi frequency)
// gives the Lorentzian; zero detuning uses the closed form; anything else
// the general path.
std::vector<double> line_profile(const SpectralLine& line,
                                 const std::optional<ControlField>& control,
                                 std::span<const Wavenumber> grid, double probe_amp = 1.0);

// Energies center + k*step for k = -n..n, n = round(halfwidth/step). The
// center is always a grid point.
std::vector<Wavenumber> make_grid(Wavenumber center, Wavenumber halfwidth, Wavenumber step);

// [min omega_ge - 10 Gamma_max, max omega_ge + 10 Gamma_max], step Gamma_min/50.
std::vector<Wavenumber> default_grid(std::span<const SpectralLine> lines);

struct LineControl {
    std::string selector;  // line label, species/branch
    ControlField field;
};

struct LineSpectrum {
    std::string label;
    std::vector<double> values;
};

struct SpectrumGrid {
    std::vector<Wavenumber> energies;
    std::vector<LineSpectrum> per_line;  // catalog order
    std::vector<double> total;

    const LineSpectrum* find(const std::string& label) const;
};

// Resolves which control (if any) acts on each line. Throws
// ControlSelectionError if two controls select one line or a selector
// matches no line.
std::vector<std::optional<ControlField>> assign_controls(std::span<const SpectralLine> lines,
                                                         std::span<const LineControl> controls);

// Per-line profiles summed incoherently, in catalog order, into total.
SpectrumGrid synthesize_spectrum(std::span<const SpectralLine> lines,
                                 std::span<const LineControl> controls,
                                 std::span<const Wavenumber> grid, double probe_amp = 1.0);

}  // namespace eitspec
