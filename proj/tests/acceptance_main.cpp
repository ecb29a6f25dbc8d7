// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are fixed here, not calibrated.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sps/dynamics.hpp"
#include "sps/figures.hpp"
#include "sps/params.hpp"
#include "sps/spectra.hpp"
#include "sps/sweep.hpp"

#include "oracles.hpp"

using sps::Spectrum;
using sps::SystemParams;

namespace {

int failures = 0;

struct Criterion {
    std::string label;
    std::vector<std::string> problems;

    explicit Criterion(std::string l) : label(std::move(l)) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    void finish() {
        if (problems.empty()) {
            std::printf("[PASS] %s\n", label.c_str());
        } else {
            ++failures;
            std::printf("[FAIL] %s\n", label.c_str());
            for (const auto& p : problems) std::printf("       - %s\n", p.c_str());
        }
    }
};

SystemParams press(double gamma_star, double delta) { return {35, 85, 1, gamma_star, 0, delta}; }
SystemParams hennessy(double gamma_star, double delta, double gamma = 1.0) {
    return {76, 100, gamma, gamma_star, 0, delta};
}

std::string fmt(const char* pattern, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

// ---------------------------------------------------------------------------

void criterion_1_efficiency_table() {
    Criterion c("criterion 1: efficiency table matches the nine quoted values within 1 point");
    struct Row {
        const char* name;
        SystemParams params;
        double quoted;
    };
    const Row rows[] = {
        {"press gs=0 delta=0", press(0, 0), 0.97},
        {"press gs=0 delta=1meV", press(0, 1000), 0.10},
        {"press gs=0.5meV delta=0", press(500, 0), 0.90},
        {"press gs=0.5meV delta=1meV", press(500, 1000), 0.40},
        {"hennessy gs=0 delta=0", hennessy(0, 0), 0.99},
        {"hennessy gs=0 delta=1meV", hennessy(0, 1000), 0.37},
        {"hennessy gs=0.5meV delta=0", hennessy(500, 0), 0.97},
        {"hennessy gs=0.5meV delta=1meV", hennessy(500, 1000), 0.76},
        {"hennessy gamma=0.1 gs=0.5meV delta=1meV", hennessy(500, 1000, 0.1), 0.96},
    };
    for (const Row& row : rows) {
        const double computed = sps::efficiency(row.params);
        c.expect(std::abs(computed - row.quoted) <= 0.01,
                 std::string(row.name) +
                     fmt(": computed %.4f vs quoted %.2f (off by more than 1 point)", computed,
                         row.quoted));
    }
    c.finish();
}

void criterion_2_indistinguishability() {
    Criterion c("criterion 2: indistinguishability 97% at 3% efficiency; d bounded; white-light"
                " limit");
    const SystemParams source{35, 10, 10, 500, 0, 1500};
    const double d = sps::indistinguishability(source);
    const double eff = sps::efficiency(source);
    c.expect(std::abs(d - 0.97) <= 0.01, fmt("d = %.4f vs quoted %.2f", d, 0.97));
    c.expect(std::abs(eff - 0.03) <= 0.01, fmt("efficiency = %.4f vs quoted %.2f", eff, 0.03));

    // in place of the unreproducible resonant 80% figure: d stays in [0, 1]
    // wherever defined, and reaches 1 in the white-light limit
    testing::ParamSampler sampler(1), dummy(2);
    int defined = 0;
    for (int i = 0; i < 2000; ++i) {
        const SystemParams p = sampler.draw(i % 2 == 1);
        try {
            const double v = sps::indistinguishability(p);
            if (!(v >= 0.0 && v <= 1.0)) {
                c.expect(false, fmt("d out of [0,1]: %.6f (draw %.0f)", v, double(i)));
                break;
            }
            ++defined;
        } catch (const sps::Error&) {
        }
    }
    c.expect(defined > 100, "too few defined draws to exercise the bound");
    SystemParams far = source;
    far.omega_cav = 1e5;
    const double d_far = sps::indistinguishability(far);
    c.expect(d_far > 0.999 && d_far <= 1.0, fmt("white-light limit d = %.6f not in (0.999, 1]", d_far, 0.0));
    c.finish();
}

void criterion_3_spectrum_regimes() {
    Criterion c("criterion 3: spectrum regime switch (doublet / emitter line / cavity line)");
    // resonant, undephased: two-peak spectrum
    {
        const Spectrum s = sps::cavity_spectrum_closed_form(press(0, 0), sps::default_grid(press(0, 0)));
        int peaks = 0;
        const double top = *std::max_element(s.values.begin(), s.values.end());
        for (size_t i = 1; i + 1 < s.values.size(); ++i)
            if (s.values[i] > s.values[i - 1] && s.values[i] >= s.values[i + 1] &&
                s.values[i] >= 0.5 * top)
                ++peaks;
        c.expect(peaks == 2, fmt("expected a two-peak spectrum, found %.0f peaks", double(peaks), 0.0));
        bool multimodal = false;
        try {
            sps::fwhm(s);
        } catch (const sps::Error& e) {
            multimodal = e.code() == sps::errc::multimodal;
        }
        c.expect(multimodal, "fwhm did not flag the resonant doublet as multimodal");
    }
    // detuned, undephased: emission at the emitter frequency
    {
        const SystemParams p = press(0, 1000);
        const Spectrum s = sps::cavity_spectrum_closed_form(p, sps::default_grid(p));
        const double peak = sps::peak_frequency(s);
        c.expect(std::abs(peak - p.omega0) <= 5.0,
                 fmt("undephased detuned peak at %.3f, expected within 5 of %.1f", peak, p.omega0));
    }
    // detuned, dephased: emission at the cavity frequency with the cavity width
    {
        const SystemParams p = press(500, 1000);
        const Spectrum s = sps::cavity_spectrum_closed_form(p, sps::default_grid(p));
        const double peak = sps::peak_frequency(s);
        const double width = sps::fwhm(s);
        c.expect(std::abs(peak - p.omega_cav) <= 5.0,
                 fmt("dephased detuned peak at %.3f, expected within 5 of %.1f", peak, p.omega_cav));
        c.expect(std::abs(width - p.kappa) <= 0.15 * p.kappa,
                 fmt("dephased detuned width %.3f vs kappa %.1f beyond 15%%", width, p.kappa));
    }
    c.finish();
}

void criterion_4_oracle_equivalence() {
    Criterion c("criterion 4: quantum-regression oracle equals the closed form");
    testing::ParamSampler sampler(4);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const SystemParams p = sampler.draw(false); // gamma* = 0
        const auto r = sps::secular_roots(p);
        double lo = 1e300, hi = -1e300;
        for (const auto& l : {r.lambda_plus, r.lambda_minus}) {
            lo = std::min(lo, l.real() - 8.0 * std::abs(l.imag()));
            hi = std::max(hi, l.real() + 8.0 * std::abs(l.imag()));
        }
        const auto grid = sps::uniform_grid(lo, hi, 20001);
        const double dist = sps::normalized_l2_distance(sps::qrt_spectrum(p, grid),
                                                        sps::cavity_spectrum_closed_form(p, grid));
        worst = std::max(worst, dist);
    }
    c.expect(worst < 1e-6, fmt("gamma*=0 worst L2 distance %.3e exceeds %.0e", worst, 1e-6));

    // dephased draws: peak within one grid step, width within 20 percent
    int width_checks = 0;
    int kept = 0;
    double worst_steps = 0.0, worst_width = 0.0;
    for (int i = 0; i < 400 && kept < 100; ++i) {
        const SystemParams p = sampler.draw(true);
        std::vector<double> grid;
        try {
            grid = sps::default_grid(p);
            const Spectrum closed = sps::cavity_spectrum_closed_form(p, grid);
            const Spectrum oracle = sps::qrt_spectrum(p, grid);
            ++kept;
            const double step = grid[1] - grid[0];
            worst_steps = std::max(worst_steps, std::abs(sps::peak_frequency(oracle) -
                                                         sps::peak_frequency(closed)) /
                                                    step);
            try {
                const double wa = sps::fwhm(oracle);
                const double wb = sps::fwhm(closed);
                worst_width = std::max(worst_width, std::abs(wa / wb - 1.0));
                ++width_checks;
            } catch (const sps::Error&) {
                // multimodal or under-resolved on this grid: width undefined
            }
        } catch (const sps::Error&) {
            // grid does not cover the resonances for this draw; skip
        }
    }
    c.expect(kept == 100, fmt("only %.0f dephased draws evaluated", double(kept), 0.0));
    c.expect(worst_steps <= 1.0,
             fmt("dephased peak positions disagree by %.2f grid steps", worst_steps, 0.0));
    c.expect(width_checks >= 50, fmt("only %.0f width comparisons", double(width_checks), 0.0));
    c.expect(worst_width <= 0.20, fmt("dephased widths disagree by %.1f%%", 100.0 * worst_width, 0.0));
    c.finish();
}

void criterion_5_exact_identities() {
    Criterion c("criterion 5: exact identities (efficiency = kappa N, unit emission, Vieta)");
    testing::ParamSampler sampler(5);
    double worst_eff = 0.0, worst_unit = 0.0, worst_vieta = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const SystemParams p = sampler.draw(i % 2 == 1);
        const auto ti = sps::time_integrals_closed_form(p);
        const double eff = sps::efficiency(p);
        worst_eff = std::max(worst_eff,
                             std::abs(eff - p.kappa * ti.n_integral) / std::abs(eff));
        worst_unit = std::max(worst_unit, std::abs(p.gamma * ti.p_integral +
                                                   p.kappa * ti.n_integral - 1.0));
        const auto r = sps::secular_roots(p);
        const std::complex<double> at(p.omega0, -0.5 * (p.gamma + p.gamma_star));
        const std::complex<double> cav(p.omega_cav, -0.5 * p.kappa);
        const double sum_err = std::abs(r.lambda_plus + r.lambda_minus - (at + cav)) /
                               (std::abs(at) + std::abs(cav) + 1.0);
        const double prod_err =
            std::abs(r.lambda_plus * r.lambda_minus - (at * cav - p.g * p.g)) /
            (std::abs(at * cav) + p.g * p.g + 1.0);
        worst_vieta = std::max({worst_vieta, sum_err, prod_err});
    }
    c.expect(worst_eff <= 1e-10, fmt("efficiency vs kappa N relative error %.2e > %.0e", worst_eff, 1e-10));
    c.expect(worst_unit <= 1e-12, fmt("gamma P + kappa N - 1 error %.2e > %.0e", worst_unit, 1e-12));
    c.expect(worst_vieta <= 1e-10, fmt("Vieta identity error %.2e > %.0e", worst_vieta, 1e-10));
    c.finish();
}

void criterion_6_optimum() {
    Criterion c("criterion 6: dephasing optimum at kappa+gamma+gamma* = 2 delta, c_max near"
                " g^2/(gamma delta)");
    testing::ParamSampler sampler(6);
    for (int i = 0; i < 50; ++i) {
        SystemParams p;
        p.kappa = sampler.log_uniform(10.0, 300.0);
        p.gamma = sampler.log_uniform(1e-3, 0.01) * p.kappa; // gamma <= kappa/100
        p.g = sampler.log_uniform(5.0, 120.0);
        p.gamma_star = 0.0;
        const double delta = sampler.log_uniform(1.2, 30.0) * 0.5 * (p.kappa + p.gamma);
        const auto opt = sps::optimal_dephasing(p, delta);
        const double total = p.kappa + p.gamma + opt.gamma_star_opt;
        if (std::abs(total - 2.0 * delta) > 1e-6 * 2.0 * delta) {
            c.expect(false, fmt("stationarity off: total width %.6f vs 2 delta %.6f", total,
                                2.0 * delta));
            break;
        }
        const double approx = p.g * p.g / (p.gamma * delta);
        if (std::abs(opt.c_max / approx - 1.0) > 0.015) {
            c.expect(false, fmt("c_max %.6f vs g^2/(gamma delta) %.6f beyond 1.5%%", opt.c_max,
                                approx));
            break;
        }
    }
    c.finish();
}

void criterion_7_ode_convergence() {
    Criterion c("criterion 7: 4th-order convergence; trajectory integrals match closed forms");
    const SystemParams p = press(500, 300);
    const double scale = std::max({p.kappa, p.gamma + p.gamma_star, p.g, std::abs(p.delta())});
    const double dt0 = 0.02 / scale;
    const auto reference = sps::integrate_populations(p, 0.5, dt0 / 8.0);
    const auto err = [&](double dt, int stride) {
        const auto traj = sps::integrate_populations(p, 0.5, dt);
        double worst = 0.0;
        for (size_t i = 0; i < traj.size() && i * stride < reference.size(); ++i) {
            const auto& a = traj[i];
            const auto& b = reference[i * static_cast<size_t>(stride)];
            worst = std::max(worst,
                             std::abs(a.n - b.n) + std::abs(a.p - b.p) + std::abs(a.c - b.c));
        }
        return worst;
    };
    const double ratio = err(dt0, 8) / err(dt0 / 2.0, 4);
    c.expect(ratio > 13.0 && ratio < 19.0,
             fmt("error ratio per dt halving %.2f outside [13, 19] (expected ~16)", ratio, 0.0));

    testing::ParamSampler sampler(7);
    double worst_int = 0.0;
    for (int i = 0; i < 100; ++i) {
        SystemParams q;
        q.g = sampler.log_uniform(1.0, 80.0);
        q.kappa = sampler.log_uniform(10.0, 150.0);
        q.gamma = sampler.log_uniform(0.5, 5.0);
        q.gamma_star = (i % 2) ? sampler.log_uniform(1.0, 300.0) : 0.0;
        q.omega_cav = sampler.uniform(-300.0, 300.0);
        const auto ode = sps::time_integrals_from_ode(q);
        const auto cf = sps::time_integrals_closed_form(q);
        worst_int = std::max({worst_int,
                              std::abs(ode.n_integral / cf.n_integral - 1.0),
                              std::abs(ode.p_integral / cf.p_integral - 1.0),
                              std::abs(ode.c_integral - cf.c_integral) / std::abs(cf.c_integral)});
    }
    c.expect(worst_int <= 1e-4,
             fmt("trajectory integrals deviate from closed forms by %.2e > %.0e", worst_int, 1e-4));
    c.finish();
}

void criterion_8_lifetime_identities() {
    Criterion c("criterion 8: lifetime identities (gamma = kappa and R = 0)");
    const SystemParams equal{35, 10, 10, 500, 0, 1500};
    c.expect(sps::lifetime_inv(equal) == 10.0,
             fmt("gamma = kappa should pin tau^-1 to exactly %.1f, got %.17f", 10.0,
                 sps::lifetime_inv(equal)));
    const SystemParams dark{0, 85, 1, 120, 0, 40};
    c.expect(sps::lifetime_inv(dark) == 1.0,
             fmt("R = 0 should give min(kappa, gamma) = %.1f, got %.17f", 1.0,
                 sps::lifetime_inv(dark)));
    const SystemParams dark2{0, 2, 7, 0, 0, 0};
    c.expect(sps::lifetime_inv(dark2) == 2.0,
             fmt("R = 0 should give min(kappa, gamma) = %.1f, got %.17f", 2.0,
                 sps::lifetime_inv(dark2)));
    c.finish();
}

} // namespace

int main() {
    criterion_1_efficiency_table();
    criterion_2_indistinguishability();
    criterion_3_spectrum_regimes();
    criterion_4_oracle_equivalence();
    criterion_5_exact_identities();
    criterion_6_optimum();
    criterion_7_ode_convergence();
    criterion_8_lifetime_identities();
    if (failures > 0) std::printf("%d of 8 criteria failing\n", failures);
    return failures;
}
