// figures.hpp — closed-form scalar figures of merit: incoherent coupling
// rate R, cooperativity, source efficiency, photon lifetime, and
// indistinguishability.
#pragma once

#include <optional>

#include "sps/params.hpp"

namespace sps {

struct FiguresOfMerit {
    double r;                // incoherent coupling rate, ueV
    double cooperativity;    // dimensionless, >= 0
    double p_cav;            // emission efficiency into the cavity channel
    double tau_inv;          // inverse photon lifetime, ueV
    std::optional<double> d; // indistinguishability, absent for a resolved doublet
};

// R = (4 g^2 / (kappa+gamma+gamma_star)) / (1 + (2 delta / (kappa+gamma+gamma_star))^2).
double coupling_rate(const SystemParams& p);

// C = R (1/kappa + 1/gamma).
double cooperativity(const SystemParams& p);

// P_cav = (kappa / (kappa+gamma)) C / (1+C). Equals kappa * N with N the
// time-integrated cavity population, exactly, for every pure dephasing rate.
double efficiency(const SystemParams& p);

// tau^-1 = (kappa+gamma)/2 + R - sqrt(((kappa-gamma)/2)^2 + R^2).
// Exact identities: gamma = kappa  => tau^-1 = kappa; R = 0 => tau^-1 = min(kappa, gamma).
double lifetime_inv(const SystemParams& p);

// d = tau^-1 / (2 |Im lambda_minus|), clamped to [0, 1]: the ratio of the
// intensity decay rate to the spectral FWHM of the narrow resonance, equal
// to 1 for a transform-limited Lorentzian photon.
// Errors: Multimodal when the emission lineshape is a resolved doublet.
double indistinguishability(const SystemParams& p);

struct FilteringCondition {
    bool filtering;          // gamma + gamma_star > kappa
    bool efficient_emission; // kappa > gamma
};

FilteringCondition filtering_condition(const SystemParams& p);

// All scalar figures for one parameter point; d is absent when Multimodal.
FiguresOfMerit figures_of_merit(const SystemParams& p);

} // namespace sps
