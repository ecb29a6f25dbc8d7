#include "sps/figures.hpp"

#include <algorithm>
#include <cmath>

#include "sps/spectra.hpp"

namespace sps {

double coupling_rate(const SystemParams& p) {
    validate(p);
    const double total = p.kappa + p.gamma + p.gamma_star;
    const double x = 2.0 * p.delta() / total;
    return 4.0 * p.g * p.g / total / (1.0 + x * x);
}

double cooperativity(const SystemParams& p) {
    return coupling_rate(p) * (1.0 / p.kappa + 1.0 / p.gamma);
}

double efficiency(const SystemParams& p) {
    const double c = cooperativity(p);
    return p.kappa / (p.kappa + p.gamma) * c / (1.0 + c);
}

double lifetime_inv(const SystemParams& p) {
    const double r = coupling_rate(p);
    // hypot and the grouping keep the gamma = kappa and R = 0 identities exact
    return 0.5 * (p.kappa + p.gamma) + (r - std::hypot(0.5 * (p.kappa - p.gamma), r));
}

double indistinguishability(const SystemParams& p) {
    const SecularRoots roots = secular_roots(p);
    if (resolved_doublet(roots))
        fail(errc::multimodal, "resolved doublet: single-line indistinguishability undefined");
    const double line_fwhm = 2.0 * std::abs(roots.lambda_minus.imag());
    return std::clamp(lifetime_inv(p) / line_fwhm, 0.0, 1.0);
}

FilteringCondition filtering_condition(const SystemParams& p) {
    return {p.gamma + p.gamma_star > p.kappa, p.kappa > p.gamma};
}

FiguresOfMerit figures_of_merit(const SystemParams& p) {
    FiguresOfMerit f{};
    f.r = coupling_rate(p);
    f.cooperativity = cooperativity(p);
    f.p_cav = efficiency(p);
    f.tau_inv = lifetime_inv(p);
    try {
        f.d = indistinguishability(p);
    } catch (const Error& e) {
        if (e.code() != errc::multimodal) throw;
        f.d = std::nullopt;
    }
    return f;
}

} // namespace sps
