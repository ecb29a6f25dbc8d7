#include "sps/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "sps/figures.hpp"

namespace sps {

namespace {

double rate_scale(const SystemParams& p) {
    return std::max({p.kappa, p.gamma + p.gamma_star, p.g, std::abs(p.delta())});
}

using State = std::array<double, 4>; // n, p, Re c, Im c

State rhs(const SystemParams& p, const State& y) {
    const double gamma_t = 0.5 * (p.gamma + p.gamma_star + p.kappa);
    const double delta = p.delta();
    const double feed = 2.0 * p.g * y[2]; // g (c + conj c)
    return {
        -p.kappa * y[0] + feed,
        -p.gamma * y[1] - feed,
        -gamma_t * y[2] + delta * y[3] + p.g * (y[1] - y[0]),
        -gamma_t * y[3] - delta * y[2],
    };
}

// One classic 4th-order step.
State rk4_step(const SystemParams& p, const State& y, double dt) {
    const State k1 = rhs(p, y);
    State t;
    for (int i = 0; i < 4; ++i) t[i] = y[i] + 0.5 * dt * k1[i];
    const State k2 = rhs(p, t);
    for (int i = 0; i < 4; ++i) t[i] = y[i] + 0.5 * dt * k2[i];
    const State k3 = rhs(p, t);
    for (int i = 0; i < 4; ++i) t[i] = y[i] + dt * k3[i];
    const State k4 = rhs(p, t);
    State out;
    for (int i = 0; i < 4; ++i)
        out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

long check_step_args(const SystemParams& p, double t_max, double dt) {
    validate(p);
    if (!std::isfinite(dt) || dt <= 0.0) fail(errc::step_too_large, "dt must be finite and > 0");
    if (!std::isfinite(t_max) || t_max <= 0.0)
        fail(errc::step_too_large, "t_max must be finite and > 0");
    if (dt > max_stable_dt(p))
        fail(errc::step_too_large, "dt exceeds the stability margin 0.05/max rate scale");
    const double steps = std::ceil(t_max / dt);
    if (!(steps < 1e15)) fail(errc::step_too_large, "step count overflows");
    return static_cast<long>(steps);
}

} // namespace

double max_stable_dt(const SystemParams& p) {
    validate(p);
    return 0.05 / rate_scale(p);
}

double default_dt(const SystemParams& p) {
    validate(p);
    return 0.01 / rate_scale(p);
}

double default_t_max(const SystemParams& p) {
    validate(p);
    return 30.0 / std::min({p.gamma, p.kappa, lifetime_inv(p)});
}

std::vector<TrajectoryPoint> integrate_populations(const SystemParams& p, double t_max, double dt) {
    const long steps = check_step_args(p, t_max, dt);
    if (steps > 20'000'000) fail(errc::step_too_large, "stored trajectory would exceed 2e7 points");
    std::vector<TrajectoryPoint> traj;
    traj.reserve(static_cast<size_t>(steps) + 1);
    State y{0.0, 1.0, 0.0, 0.0};
    traj.push_back({0.0, y[0], y[1], {y[2], y[3]}});
    for (long i = 1; i <= steps; ++i) {
        y = rk4_step(p, y, dt);
        traj.push_back({dt * static_cast<double>(i), y[0], y[1], {y[2], y[3]}});
    }
    return traj;
}

TimeIntegrals time_integrals_from_ode(const SystemParams& p) {
    const double dt = default_dt(p);
    const double t_max = default_t_max(p);
    const long steps = check_step_args(p, t_max, dt);

    State cur{0.0, 1.0, 0.0, 0.0};
    State prior = cur;
    State sum{};
    for (long i = 1; i <= steps; ++i) {
        const State next = rk4_step(p, cur, dt);
        for (int k = 0; k < 4; ++k) sum[k] += 0.5 * dt * (cur[k] + next[k]);
        prior = cur;
        cur = next;
    }
    // Residual tail by per-component exponential extrapolation from the last
    // step; skipped when the local decay estimate is unusable (sign change,
    // growth, or underflow), where the tail is negligible anyway.
    for (int k = 0; k < 4; ++k) {
        const double f0 = prior[k], f1 = cur[k];
        if (f0 == 0.0 || f1 == 0.0 || (f0 > 0.0) != (f1 > 0.0)) continue;
        if (std::abs(f1) >= std::abs(f0)) continue;
        const double rate = std::log(std::abs(f0 / f1)) / dt;
        if (!(rate > 0.0) || !std::isfinite(rate)) continue;
        sum[k] += cur[k] / rate;
    }
    return {sum[0], sum[1], {sum[2], sum[3]}};
}

TimeIntegrals time_integrals_closed_form(const SystemParams& p) {
    validate(p);
    const double gamma_t = 0.5 * (p.gamma + p.gamma_star + p.kappa);
    const double delta = p.delta();
    // Re C = rho (P - N) after eliminating C from the coherence relation
    const double rho = p.g * gamma_t / (gamma_t * gamma_t + delta * delta);
    const double feed = 2.0 * p.g * rho;
    // (kappa + feed) N - feed P = 0 ; -feed N + (gamma + feed) P = 1
    const double det = (p.kappa + feed) * (p.gamma + feed) - feed * feed;
    const double n_int = feed / det;
    const double p_int = (p.kappa + feed) / det;
    const std::complex<double> c_int =
        p.g * (p_int - n_int) / std::complex<double>(gamma_t, delta);
    return {n_int, p_int, c_int};
}

Spectrum qrt_spectrum(const SystemParams& p, std::vector<double> grid, double* preclip_min) {
    validate(p);
    if (p.g == 0.0)
        fail(errc::zero_coupling, "g = 0: cavity is never populated, spectrum undefined");
    validate_grid(grid);
    const TimeIntegrals ti = time_integrals_closed_form(p);
    const double gamma_tot = p.gamma + p.gamma_star;

    Spectrum s;
    s.kind = SpectrumKind::qrt_oracle;
    s.values.resize(grid.size());
    double low = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double w = grid[i];
        const std::complex<double> a11(0.5 * p.kappa, w - p.omega_cav);
        const std::complex<double> a22(0.5 * gamma_tot, w - p.omega0);
        const std::complex<double> det = a11 * a22 + p.g * p.g;
        const double v = ((a22 * ti.n_integral + p.g * ti.c_integral) / det).real();
        low = std::min(low, v);
        s.values[i] = std::max(v, 0.0);
    }
    if (preclip_min) *preclip_min = low;
    s.grid = std::move(grid);
    const double total = trapezoid(s.grid, s.values);
    if (!(total > 0.0) || !std::isfinite(total))
        fail(errc::non_finite, "oracle spectrum has no positive weight on this grid");
    for (double& v : s.values) v /= total;
    return s;
}

void write_trajectory_csv(const std::vector<TrajectoryPoint>& traj, std::ostream& os) {
    os << "t_hbar_per_ueV,n,p,re_c,im_c\n";
    char buf[192];
    for (const auto& pt : traj) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", pt.t, pt.n, pt.p,
                      pt.c.real(), pt.c.imag());
        os << buf;
    }
}

} // namespace sps
