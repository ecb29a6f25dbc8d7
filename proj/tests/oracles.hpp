// oracles.hpp — test-only independent checks: bisection-based lineshape
// measurements on analytic densities and random parameter draws. Nothing in
// here may call the implementation path it is used to verify.
#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "sps/params.hpp"

namespace testing {

using RealFn = std::function<double(double)>;

// Golden-section refinement of a maximum of f near [lo, hi].
inline double refine_peak(const RealFn& f, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 200 && b - a > 1e-13 * (std::abs(a) + std::abs(b) + 1.0); ++i) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2; x2 = a + inv_phi * (b - a); f2 = f(x2);
        } else {
            b = x2; x2 = x1; f2 = f1; x1 = b - inv_phi * (b - a); f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

// Bisection for f(w) = level between a and b (f(a), f(b) must bracket it).
inline double bisect_level(const RealFn& f, double a, double b, double level) {
    double fa = f(a) - level;
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m) - level;
        if ((fa <= 0.0) == (fm <= 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// FWHM of a unimodal analytic density: peak by golden section in
// [peak_guess - span, peak_guess + span], crossings by bisection out to
// the same span on either side.
inline double oracle_fwhm(const RealFn& f, double peak_guess, double span) {
    const double wp = refine_peak(f, peak_guess - span, peak_guess + span);
    const double half = 0.5 * f(wp);
    const double left = bisect_level(f, wp - span, wp, half);
    const double right = bisect_level(f, wp, wp + span, half);
    return right - left;
}

// Random but physically sane parameter draws (relative frame, omega0 = 0).
struct ParamSampler {
    std::mt19937_64 rng;

    explicit ParamSampler(uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    sps::SystemParams draw(bool with_dephasing) {
        sps::SystemParams p;
        p.g = log_uniform(0.5, 150.0);
        p.kappa = log_uniform(1.0, 400.0);
        p.gamma = log_uniform(0.05, 20.0);
        p.gamma_star = with_dephasing ? log_uniform(0.5, 2000.0) : 0.0;
        p.omega0 = 0.0;
        p.omega_cav = uniform(-1000.0, 1000.0);
        return p;
    }
};

} // namespace testing
