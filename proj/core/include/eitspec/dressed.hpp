// dressed.hpp: Autler-Townes eigensystem of the control-coupled {|e>, |s>} block.

#pragma once

#include <array>
#include <complex>

#include "eitspec/units.hpp"

namespace eitspec {

struct ControlField {
    Wavenumber omega_c{};   // control laser center frequency
    Wavenumber rabi{};      // real, >= 0
    Wavenumber omega_es{};  // bare E_e - E_s

    constexpr Wavenumber detuning() const { return omega_c - omega_es; }
};

struct ATEigenvalues {
    Wavenumber upper{};  // lambda_1 = +Omega'
    Wavenumber lower{};  // lambda_2 = -Omega'
};

// Dressed quantities for one (line, control) pair. Index 0 is branch j=1
// (lambda = +Omega'), index 1 is branch j=2.
struct DressedSystem {
    Wavenumber delta{};
    Wavenumber rabi{};
    Wavenumber omega_prime{};
    std::array<double, 2> lambda{};
    std::array<std::complex<double>, 2> alpha{};  // |s> amplitudes
    std::array<std::complex<double>, 2> beta{};   // |e> amplitudes
};

// Omega' = sqrt(delta^2/4 + rabi^2).
Wavenumber generalized_rabi(Wavenumber delta, Wavenumber rabi);

// lambda_j = (3 - 2j) Omega'. Throws DomainError for rabi < 0.
ATEigenvalues at_eigenvalues(Wavenumber delta, Wavenumber rabi);

// Mixing coefficients of the dressed states:
//   alpha_j = sqrt(rabi^2 / (2 Omega'^2 - s_j delta Omega'))
//   beta_j  = alpha_j (Omega' - s_j delta / 2) / rabi,      s_j = 3 - 2j.
// Both differences are evaluated in a cancellation-free form so that
// |alpha_j|^2 + |beta_j|^2 = 1 holds for extreme delta/rabi ratios.
// Throws DegenerateCouplingError for rabi == 0 and DomainError for rabi < 0.
DressedSystem dressed_coefficients(Wavenumber delta, Wavenumber rabi);

inline DressedSystem dress(const ControlField& control) {
    return dressed_coefficients(control.detuning(), control.rabi);
}

}  // namespace eitspec
