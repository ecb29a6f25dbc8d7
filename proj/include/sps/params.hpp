// params.hpp — physical parameter set, validation, and unit conversions.
//
// All internal computation uses energies in ueV with hbar = 1: rates and
// angular frequencies are numerically equal to energies in ueV. The ns
// conversion exists for display only.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sps/errors.hpp"

namespace sps {

inline constexpr double hbar_uev_ns = 0.6582119569; // ueV * ns

// One emitter-cavity system. delta is always derived, never stored.
struct SystemParams {
    double g = 0.0;          // coupling strength, ueV, g >= 0
    double kappa = 0.0;      // cavity linewidth (FWHM), ueV, > 0
    double gamma = 0.0;      // emitter decay into leaky modes, ueV, > 0
    double gamma_star = 0.0; // pure dephasing rate, ueV, >= 0
    double omega0 = 0.0;     // emitter transition frequency, ueV
    double omega_cav = 0.0;  // cavity frequency, ueV

    double delta() const { return omega_cav - omega0; }
};

struct DerivedWidths {
    double gamma_tot; // gamma + gamma_star (emitter line FWHM)
    double gamma_t;   // (gamma + gamma_star + kappa) / 2 (coherence decay)
};

DerivedWidths derived_widths(const SystemParams& p);

// Returns p unchanged if all invariants hold, throws Error otherwise.
// Rates must be finite and within [0, 1e7] ueV; kappa and gamma strictly
// positive; frequencies finite.
const SystemParams& validate(const SystemParams& p);

double energy_to_inverse_time(double e_uev);       // ueV -> 1/ns
double inverse_time_to_energy(double rate_inv_ns); // 1/ns -> ueV

// "35", "500ueV", "1.5meV" -> value in ueV. Throws bad_config.
double parse_energy(const std::string& text);

// Partial parameter assignment from a config file or CLI flags.
// delta is mutually exclusive with omega0/omega_cav.
struct ParamOverrides {
    std::optional<double> g, kappa, gamma, gamma_star;
    std::optional<double> delta, omega0, omega_cav;

    bool empty() const;
};

// Flat "key = value" text, keys g, kappa, gamma, gamma_star, delta,
// omega0, omega_cav; values accept the unit suffixes of parse_energy.
// '#' starts a comment. Unknown or duplicate keys are rejected.
ParamOverrides parse_config(std::istream& in);
ParamOverrides parse_config_file(const std::string& path);

// Applies overrides on top of base. A delta override puts the system in
// the relative frame (omega0 = 0, omega_cav = delta). Not validated here.
SystemParams apply_overrides(SystemParams base, const ParamOverrides& o);

} // namespace sps
