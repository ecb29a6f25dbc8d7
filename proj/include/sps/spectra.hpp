// spectra.hpp — secular roots of the coupled emitter-cavity system and all
// lineshapes: closed-form cavity emission spectrum, uncoupled Lorentzians,
// the spectral-filter product, and lineshape analysis (peak, FWHM).
#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "sps/params.hpp"

namespace sps {

// Complex resonances of the coupled system. Real part = position,
// -2 * imaginary part = FWHM. lambda_minus is the narrow root (smaller
// |Im|), ties broken toward the smaller real part.
struct SecularRoots {
    std::complex<double> lambda_plus;
    std::complex<double> lambda_minus;
};

// lambda_pm = (w_at + w_cav)/2 +- sqrt(((w_at - w_cav)/2)^2 + g^2) with
// w_at = omega0 - i(gamma+gamma_star)/2 and w_cav = omega_cav - i kappa/2.
// The atomic complex frequency includes pure dephasing: that is the only
// choice consistent with the coherence decay rate (gamma+gamma_star+kappa)/2
// and with the filter limit where the emitter line has width gamma+gamma_star.
SecularRoots secular_roots(const SystemParams& p);

enum class SpectrumKind {
    cavity_closed_form,
    qd_uncoupled,
    cavity_uncoupled,
    filter_product,
    qrt_oracle,
};

const char* spectrum_kind_name(SpectrumKind k) noexcept;

// Sampled lineshape, unit trapezoid integral over the grid.
struct Spectrum {
    std::vector<double> grid;   // strictly increasing frequencies, ueV
    std::vector<double> values; // non-negative density, 1/ueV
    SpectrumKind kind = SpectrumKind::cavity_closed_form;
};

std::vector<double> uniform_grid(double lo, double hi, int points);

// Rejects grids that are too short, non-finite, or not strictly increasing.
void validate_grid(const std::vector<double>& grid);

// 20001 uniform points spanning [min(omega0, omega_cav) - 10 W,
// max(omega0, omega_cav) + 10 W] with W = max(kappa, gamma + gamma_star).
std::vector<double> default_grid(const SystemParams& p);

// s(w) ~ 1 / (|w - lambda_plus|^2 |w - lambda_minus|^2).
// Errors: ZeroCoupling if g = 0; GridTooNarrow if the grid does not contain
// Re(lambda_pm) +- 5 half-widths for both roots.
Spectrum cavity_spectrum_closed_form(const SystemParams& p, std::vector<double> grid);

// s(w) ~ 1 / ((w - center)^2 + (fwhm/2)^2).
Spectrum lorentzian_spectrum(double center, double fwhm, std::vector<double> grid,
                             SpectrumKind kind = SpectrumKind::qd_uncoupled);

// Uncoupled lines of the system: emitter (width gamma+gamma_star) and
// empty cavity (width kappa).
Spectrum qd_uncoupled_spectrum(const SystemParams& p, std::vector<double> grid);
Spectrum cavity_uncoupled_spectrum(const SystemParams& p, std::vector<double> grid);

// Pointwise product S0_cav * S0_QD, renormalized (weak-coupling filter form).
Spectrum filter_product_spectrum(const SystemParams& p, std::vector<double> grid);

double trapezoid(const std::vector<double>& grid, const std::vector<double>& values);

// Linear-interpolated distance between the two half-maximum crossings.
// Errors: Multimodal for a resolved multi-peak shape (a secondary local
// maximum at or above half of the global maximum, or more than two half-max
// crossings); GridTooCoarse if fewer than 8 samples lie above half max;
// GridTooNarrow if the half-max region touches a grid boundary.
double fwhm(const Spectrum& s);

// Grid frequency of the maximum value; ties broken toward lower frequency.
double peak_frequency(const Spectrum& s);

// ||a - b||_2 / min(||a||_2, ||b||_2) by trapezoid quadrature; both spectra
// must share the grid.
double normalized_l2_distance(const Spectrum& a, const Spectrum& b);

// True when the exact two-pole lineshape for these roots has a secondary
// maximum at or above half of its global maximum (resolved doublet).
bool resolved_doublet(const SecularRoots& r);

// CSV, header "omega_ueV,density_per_ueV", 17 significant digits.
void write_spectrum_csv(const Spectrum& s, std::ostream& os);
// Same grid, extra oracle column "qrt_density_per_ueV".
void write_spectrum_csv(const Spectrum& s, const Spectrum& oracle, std::ostream& os);

} // namespace sps
