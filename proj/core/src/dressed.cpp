#include "eitspec/dressed.hpp"

#include <cmath>

#include "eitspec/errors.hpp"

namespace eitspec {

namespace {

// Omega' - s*delta/2 for s = +-1, without subtracting nearly equal numbers.
// Uses (Omega' - a)(Omega' + a) = rabi^2 with a = s*delta/2.
double prime_minus(double omega_prime, double rabi, double s_delta_half) {
    if (s_delta_half <= 0.0) return omega_prime - s_delta_half;
    return rabi * rabi / (omega_prime + s_delta_half);
}

}  // namespace

Wavenumber generalized_rabi(Wavenumber delta, Wavenumber rabi) {
    return Wavenumber{std::hypot(0.5 * delta.cm1, rabi.cm1)};
}

ATEigenvalues at_eigenvalues(Wavenumber delta, Wavenumber rabi) {
    if (rabi.cm1 < 0.0) throw DomainError("Rabi frequency must be nonnegative");
    const Wavenumber op = generalized_rabi(delta, rabi);
    return ATEigenvalues{op, -op};
}

DressedSystem dressed_coefficients(Wavenumber delta, Wavenumber rabi) {
    if (rabi.cm1 < 0.0) throw DomainError("Rabi frequency must be nonnegative");
    if (rabi.cm1 == 0.0) {
        throw DegenerateCouplingError(
            "dressed coefficients undefined at zero Rabi frequency; use the uncontrolled line shape");
    }
    const double d = delta.cm1;
    const double om = rabi.cm1;
    const double op = generalized_rabi(delta, rabi).cm1;

    DressedSystem ds;
    ds.delta = delta;
    ds.rabi = rabi;
    ds.omega_prime = Wavenumber{op};
    ds.lambda = {op, -op};
    for (int j = 0; j < 2; ++j) {
        const double s = (j == 0) ? 1.0 : -1.0;
        // 2 Omega'^2 - s delta Omega' = 2 Omega' (Omega' - s delta / 2)
        const double gap = prime_minus(op, om, 0.5 * s * d);
        const double a = om / std::sqrt(2.0 * op * gap);
        ds.alpha[j] = a;
        ds.beta[j] = a * gap / om;
    }
    return ds;
}

}  // namespace eitspec
