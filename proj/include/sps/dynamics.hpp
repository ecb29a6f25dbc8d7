// dynamics.hpp — master-equation moment system: fixed-step integration of
// the populations and coherence, closed-form time integrals, and the
// quantum-regression spectrum used as the numerical oracle for the
// closed-form lineshape.
//
// Moment variables for the single-excitation problem (initial state: one
// exciton, empty cavity):
//   dn/dt = -kappa n + g (c + conj c)
//   dp/dt = -gamma p - g (c + conj c)
//   dc/dt = -(i delta + (gamma+gamma_star+kappa)/2) c + g (p - n)
#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "sps/params.hpp"
#include "sps/spectra.hpp"

namespace sps {

struct TrajectoryPoint {
    double t;               // time, hbar/ueV
    double n;               // cavity population
    double p;               // emitter population
    std::complex<double> c; // emitter-cavity coherence
};

struct TimeIntegrals {
    double n_integral;               // N = int n dt, hbar/ueV
    double p_integral;               // P = int p dt
    std::complex<double> c_integral; // C = int c dt
};

// Stability margin for the classic fixed-step 4th-order scheme.
double max_stable_dt(const SystemParams& p);       // 0.05 / max(kappa, gamma+gamma_star, g, |delta|)
double default_dt(const SystemParams& p);          // 0.01 / max(...)
double default_t_max(const SystemParams& p);       // 30 / min(gamma, kappa, tau_inv)

// Classic 4th-order fixed-step integration from (n, p, c) = (0, 1, 0).
// Errors: StepTooLarge if dt exceeds the stability margin (or the stored
// trajectory would exceed 2e7 points).
std::vector<TrajectoryPoint> integrate_populations(const SystemParams& p, double t_max, double dt);

// Trapezoid integrals of the trajectory at the default step over the default
// horizon, plus an exponential-extrapolation estimate of the truncated tail.
TimeIntegrals time_integrals_from_ode(const SystemParams& p);

// Exact solution of the integrated moment equations:
//   kappa N = g (C + conj C)
//   gamma P + g (C + conj C) = 1
//   (i delta + (gamma+gamma_star+kappa)/2) C = g (P - N)
// reduced to a 2x2 real solve after eliminating C.
TimeIntegrals time_integrals_closed_form(const SystemParams& p);

// First-order correlation spectrum by quantum regression: the correlation
// pair (<a+(t+tau) a(t)>, i<sigma+(t+tau) a(t)>) evolves in tau with
// diagonal (i omega_cav - kappa/2, i omega0 - (gamma+gamma_star)/2) and real
// antisymmetric off-diagonal couplings +-g, seeded by the time integrals
// (N, C); s(omega) ~ Re of the first resolvent component. Values are clipped
// at zero before normalization; the pre-clip minimum is available as a
// diagnostic. Errors: ZeroCoupling.
Spectrum qrt_spectrum(const SystemParams& p, std::vector<double> grid,
                      double* preclip_min = nullptr);

// CSV, header "t_hbar_per_ueV,n,p,re_c,im_c", 17 significant digits.
void write_trajectory_csv(const std::vector<TrajectoryPoint>& traj, std::ostream& os);

} // namespace sps
