#include "eitspec/lineshape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eitspec/errors.hpp"

namespace eitspec {

using cplx = std::complex<double>;

namespace {

constexpr cplx I{0.0, 1.0};

void check_line(const SpectralLine& line) {
    if (!(line.gamma.cm1 > 0.0)) throw DomainError("line " + line.label() + ": gamma must be > 0");
    if (!(line.strength >= 0.0)) throw DomainError("line " + line.label() + ": strength must be >= 0");
}

void check_grid(std::span<const Wavenumber> grid) {
    if (grid.empty()) throw DomainError("energy grid is empty");
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) throw DomainError("energy grid must be strictly increasing");
    }
}

}  // namespace

double max_abs_difference(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12), std::abs(a.m21 - b.m21),
                     std::abs(a.m22 - b.m22)});
}

double continuum_coupling(Wavenumber gamma) { return std::sqrt(gamma.cm1 / constants::pi); }

ComplexMatrix2 effective_hamiltonian(Wavenumber energy, const SpectralLine& line,
                                     const DressedSystem& ds) {
    const double x = energy.cm1 - line.omega_ge.cm1 - 0.5 * ds.delta.cm1;
    const cplx decay = -0.5 * I * line.gamma.cm1;
    return ComplexMatrix2{x - ds.lambda[0] + decay, decay, decay, x - ds.lambda[1] + decay};
}

ComplexMatrix2 invert_2x2(const ComplexMatrix2& m) {
    const cplx det = m.det();
    if (!(std::abs(det) >= singular_det_floor)) {
        throw SingularMatrixError("2x2 matrix is singular (|det| = " + std::to_string(std::abs(det)) + ")");
    }
    return ComplexMatrix2{m.m22 / det, -m.m12 / det, -m.m21 / det, m.m11 / det};
}

cplx transition_dipole(Wavenumber energy, const SpectralLine& line, const DressedSystem& ds) {
    const ComplexMatrix2 d = invert_2x2(effective_hamiltonian(energy, line, ds));
    const auto& w = ds.beta;
    const cplx bracket = std::norm(w[0]) * d.m11 + w[0] * std::conj(w[1]) * d.m12 +
                         w[1] * std::conj(w[0]) * d.m21 + std::norm(w[1]) * d.m22;
    return continuum_coupling(line.gamma) * bracket;
}

cplx transition_dipole_resonant(Wavenumber energy, const SpectralLine& line, Wavenumber rabi) {
    const double x = energy.cm1 - line.omega_ge.cm1;
    const double g = line.gamma.cm1;
    if (rabi.cm1 == 0.0) return 1.0 / cplx{x, -0.5 * g};
    const cplx denom{x * x - rabi.cm1 * rabi.cm1, -0.5 * g * x};
    return x / denom;
}

double absorption_probability(double probe_amp, cplx mu) {
    return 2.0 * constants::pi * std::norm(probe_amp * mu);
}

double lorentzian(Wavenumber energy, const SpectralLine& line) {
    const double x = energy.cm1 - line.omega_ge.cm1;
    const double hw = 0.5 * line.gamma.cm1;
    return hw * hw / (x * x + hw * hw);
}

std::vector<double> line_profile(const SpectralLine& line, const std::optional<ControlField>& control,
                                 std::span<const Wavenumber> grid, double probe_amp) {
    check_line(line);
    check_grid(grid);
    if (probe_amp < 0.0) throw DomainError("probe amplitude must be >= 0");

    std::vector<double> out(grid.size());
    const double scale = line.strength * probe_amp * probe_amp;

    if (!control || control->rabi.cm1 == 0.0) {
        std::transform(grid.begin(), grid.end(), out.begin(),
                       [&](Wavenumber e) { return scale * lorentzian(e, line); });
        return out;
    }
    if (control->rabi.cm1 < 0.0) throw DomainError("Rabi frequency must be nonnegative");

    // Peak dipole of the decoupled line on the same path; the profile is
    // measured relative to it so an uncontrolled line peaks at strength.
    const double g = line.gamma.cm1;
    if (control->detuning().cm1 == 0.0) {
        const double ref = absorption_probability(1.0, cplx{2.0 / g});
        std::transform(grid.begin(), grid.end(), out.begin(), [&](Wavenumber e) {
            return line.strength * absorption_probability(probe_amp, transition_dipole_resonant(e, line, control->rabi)) / ref;
        });
        return out;
    }

    const DressedSystem ds = dress(*control);
    const double ref = absorption_probability(1.0, cplx{2.0 * continuum_coupling(line.gamma) / g});
    std::transform(grid.begin(), grid.end(), out.begin(), [&](Wavenumber e) {
        return line.strength * absorption_probability(probe_amp, transition_dipole(e, line, ds)) / ref;
    });
    return out;
}

std::vector<Wavenumber> make_grid(Wavenumber center, Wavenumber halfwidth, Wavenumber step) {
    if (!(step.cm1 > 0.0)) throw DomainError("grid step must be > 0");
    if (!(halfwidth.cm1 >= 0.0)) throw DomainError("grid halfwidth must be >= 0");
    const double n_real = std::round(halfwidth.cm1 / step.cm1);
    if (n_real > 5e7) throw DomainError("grid too large (more than 1e8 points)");
    const auto n = static_cast<long long>(n_real);
    std::vector<Wavenumber> grid;
    grid.reserve(static_cast<std::size_t>(2 * n + 1));
    for (long long k = -n; k <= n; ++k) {
        grid.emplace_back(center.cm1 + static_cast<double>(k) * step.cm1);
    }
    check_grid(grid);
    return grid;
}

std::vector<Wavenumber> default_grid(std::span<const SpectralLine> lines) {
    if (lines.empty()) throw DomainError("default grid needs at least one line");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double gmax = 0.0;
    double gmin = std::numeric_limits<double>::infinity();
    for (const auto& l : lines) {
        check_line(l);
        lo = std::min(lo, l.omega_ge.cm1);
        hi = std::max(hi, l.omega_ge.cm1);
        gmax = std::max(gmax, l.gamma.cm1);
        gmin = std::min(gmin, l.gamma.cm1);
    }
    const double step = gmin / 50.0;
    const double half = 0.5 * (hi - lo) + 10.0 * gmax;
    // Round the halfwidth up so the span is fully covered.
    return make_grid(Wavenumber{0.5 * (lo + hi)}, Wavenumber{std::ceil(half / step) * step}, Wavenumber{step});
}

const LineSpectrum* SpectrumGrid::find(const std::string& label) const {
    auto it = std::find_if(per_line.begin(), per_line.end(),
                           [&](const LineSpectrum& s) { return s.label == label; });
    return it == per_line.end() ? nullptr : &*it;
}

std::vector<std::optional<ControlField>> assign_controls(std::span<const SpectralLine> lines,
                                                         std::span<const LineControl> controls) {
    std::vector<std::optional<ControlField>> assigned(lines.size());
    for (const auto& c : controls) {
        bool matched = false;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].label() != c.selector) continue;
            if (assigned[i]) {
                throw ControlSelectionError("ambiguous control: line " + c.selector +
                                            " is selected by more than one control");
            }
            assigned[i] = c.field;
            matched = true;
        }
        if (!matched) throw ControlSelectionError("control selector '" + c.selector + "' matches no line");
    }
    return assigned;
}

SpectrumGrid synthesize_spectrum(std::span<const SpectralLine> lines,
                                 std::span<const LineControl> controls,
                                 std::span<const Wavenumber> grid, double probe_amp) {
    check_grid(grid);
    const auto assigned = assign_controls(lines, controls);

    SpectrumGrid out;
    out.energies.assign(grid.begin(), grid.end());
    out.total.assign(grid.size(), 0.0);
    out.per_line.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out.per_line.push_back({lines[i].label(), line_profile(lines[i], assigned[i], grid, probe_amp)});
    }
    // Fixed accumulation order: catalog order at every grid point.
    for (const auto& ls : out.per_line) {
        for (std::size_t k = 0; k < grid.size(); ++k) out.total[k] += ls.values[k];
    }
    return out;
}

}  // namespace eitspec
