#include "sps/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

namespace sps {

SecularRoots secular_roots(const SystemParams& p) {
    validate(p);
    const std::complex<double> omega_at(p.omega0, -0.5 * (p.gamma + p.gamma_star));
    const std::complex<double> omega_cv(p.omega_cav, -0.5 * p.kappa);
    const std::complex<double> mean = 0.5 * (omega_at + omega_cv);
    const std::complex<double> half_diff = 0.5 * (omega_at - omega_cv);
    const std::complex<double> shift = std::sqrt(half_diff * half_diff + p.g * p.g);
    const std::complex<double> a = mean + shift;
    const std::complex<double> b = mean - shift;

    const double ia = std::abs(a.imag());
    const double ib = std::abs(b.imag());
    const bool b_narrow = ib < ia || (ib == ia && b.real() < a.real());
    SecularRoots r;
    r.lambda_minus = b_narrow ? b : a;
    r.lambda_plus = b_narrow ? a : b;
    return r;
}

const char* spectrum_kind_name(SpectrumKind k) noexcept {
    switch (k) {
        case SpectrumKind::cavity_closed_form: return "cavity_closed_form";
        case SpectrumKind::qd_uncoupled: return "qd_uncoupled";
        case SpectrumKind::cavity_uncoupled: return "cavity_uncoupled";
        case SpectrumKind::filter_product: return "filter_product";
        case SpectrumKind::qrt_oracle: return "qrt_oracle";
    }
    return "unknown";
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        fail(errc::bad_config, "grid bounds must be finite with lo < hi");
    if (points < 2) fail(errc::bad_config, "grid needs at least 2 points");
    std::vector<double> g(static_cast<size_t>(points));
    const double span = hi - lo;
    // lo + span*i/(n-1) keeps symmetric midpoints exact for integer bounds
    for (int i = 0; i < points; ++i)
        g[static_cast<size_t>(i)] = lo + span * static_cast<double>(i) / (points - 1);
    g.back() = hi;
    return g;
}

std::vector<double> default_grid(const SystemParams& p) {
    validate(p);
    const double w = std::max(p.kappa, p.gamma + p.gamma_star);
    const double lo = std::min(p.omega0, p.omega_cav) - 10.0 * w;
    const double hi = std::max(p.omega0, p.omega_cav) + 10.0 * w;
    return uniform_grid(lo, hi, 20001);
}

void validate_grid(const std::vector<double>& grid) {
    if (grid.size() < 3) fail(errc::bad_config, "grid needs at least 3 points");
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) fail(errc::non_finite, "grid contains a non-finite value");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            fail(errc::bad_config, "grid must be strictly increasing");
    }
}

namespace {

// Trapezoid normalization on the supplied grid keeps Spectrum values
// self-consistent regardless of grid truncation.
void normalize(Spectrum& s) {
    const double total = trapezoid(s.grid, s.values);
    if (!(total > 0.0) || !std::isfinite(total))
        fail(errc::non_finite, "spectrum has no positive weight on this grid");
    for (double& v : s.values) v /= total;
}

void require_root_coverage(const std::vector<double>& grid, const SecularRoots& r) {
    for (const auto& l : {r.lambda_plus, r.lambda_minus}) {
        const double hw = std::abs(l.imag());
        if (l.real() - 5.0 * hw < grid.front() || l.real() + 5.0 * hw > grid.back())
            fail(errc::grid_too_narrow, "grid does not contain both resonances +- 5 half-widths");
    }
}

} // namespace

double trapezoid(const std::vector<double>& grid, const std::vector<double>& values) {
    if (grid.size() != values.size()) fail(errc::bad_config, "grid/value size mismatch");
    double total = 0.0;
    for (size_t i = 1; i < grid.size(); ++i)
        total += 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
    return total;
}

Spectrum cavity_spectrum_closed_form(const SystemParams& p, std::vector<double> grid) {
    validate(p);
    if (p.g == 0.0)
        fail(errc::zero_coupling, "g = 0: cavity is never populated, spectrum undefined");
    validate_grid(grid);
    const SecularRoots r = secular_roots(p);
    require_root_coverage(grid, r);

    Spectrum s;
    s.kind = SpectrumKind::cavity_closed_form;
    s.values.resize(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        const double w = grid[i];
        s.values[i] = 1.0 / (std::norm(w - r.lambda_plus) * std::norm(w - r.lambda_minus));
    }
    s.grid = std::move(grid);
    normalize(s);
    return s;
}

Spectrum lorentzian_spectrum(double center, double fwhm_in, std::vector<double> grid,
                             SpectrumKind kind) {
    if (!std::isfinite(center)) fail(errc::non_finite, "center is not finite");
    if (!std::isfinite(fwhm_in) || fwhm_in <= 0.0)
        fail(errc::non_positive_width, "fwhm must be > 0");
    validate_grid(grid);
    const double hw = 0.5 * fwhm_in;
    Spectrum s;
    s.kind = kind;
    s.values.resize(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        const double d = grid[i] - center;
        s.values[i] = 1.0 / (d * d + hw * hw);
    }
    s.grid = std::move(grid);
    normalize(s);
    return s;
}

Spectrum qd_uncoupled_spectrum(const SystemParams& p, std::vector<double> grid) {
    validate(p);
    return lorentzian_spectrum(p.omega0, p.gamma + p.gamma_star, std::move(grid),
                               SpectrumKind::qd_uncoupled);
}

Spectrum cavity_uncoupled_spectrum(const SystemParams& p, std::vector<double> grid) {
    validate(p);
    return lorentzian_spectrum(p.omega_cav, p.kappa, std::move(grid),
                               SpectrumKind::cavity_uncoupled);
}

Spectrum filter_product_spectrum(const SystemParams& p, std::vector<double> grid) {
    validate(p);
    validate_grid(grid);
    const double hw_qd = 0.5 * (p.gamma + p.gamma_star);
    const double hw_cav = 0.5 * p.kappa;
    Spectrum s;
    s.kind = SpectrumKind::filter_product;
    s.values.resize(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        const double dq = grid[i] - p.omega0;
        const double dc = grid[i] - p.omega_cav;
        s.values[i] = 1.0 / ((dq * dq + hw_qd * hw_qd) * (dc * dc + hw_cav * hw_cav));
    }
    s.grid = std::move(grid);
    normalize(s);
    return s;
}

namespace {

void check_spectrum(const Spectrum& s) {
    validate_grid(s.grid);
    if (s.values.size() != s.grid.size()) fail(errc::bad_config, "grid/value size mismatch");
    for (double v : s.values)
        if (!std::isfinite(v)) fail(errc::non_finite, "spectrum value not finite");
}

size_t argmax_lowest(const std::vector<double>& v) {
    size_t best = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

} // namespace

double peak_frequency(const Spectrum& s) {
    check_spectrum(s);
    return s.grid[argmax_lowest(s.values)];
}

double fwhm(const Spectrum& s) {
    check_spectrum(s);
    const size_t n = s.values.size();
    const size_t imax = argmax_lowest(s.values);
    const double peak = s.values[imax];
    if (!(peak > 0.0)) fail(errc::non_finite, "spectrum has no positive maximum");
    const double half = 0.5 * peak;

    // A secondary local maximum reaching half of the global maximum makes
    // the width of "the" line undefined (resolved doublet).
    size_t peaks_above_half = 0;
    for (size_t i = 1; i + 1 < n; ++i) {
        if (s.values[i] >= half && s.values[i] > s.values[i - 1] && s.values[i] >= s.values[i + 1])
            ++peaks_above_half;
    }
    if (peaks_above_half > 1) fail(errc::multimodal, "spectrum has more than one resolved peak");

    size_t crossings = 0;
    for (size_t i = 1; i < n; ++i)
        if ((s.values[i] >= half) != (s.values[i - 1] >= half)) ++crossings;
    if (crossings > 2) fail(errc::multimodal, "more than two half-maximum crossings");

    size_t above = 0;
    for (double v : s.values)
        if (v > half) ++above;
    if (above < 8) fail(errc::grid_too_coarse, "fewer than 8 grid points above half maximum");

    size_t i0 = imax, i1 = imax;
    while (i0 > 0 && s.values[i0 - 1] >= half) --i0;
    while (i1 + 1 < n && s.values[i1 + 1] >= half) ++i1;
    if (i0 == 0 || i1 == n - 1)
        fail(errc::grid_too_narrow, "half-maximum region touches the grid boundary");

    const auto cross = [&](size_t lo, size_t hi) {
        // linear interpolation of the half-max crossing between samples lo, hi
        const double f0 = s.values[lo], f1 = s.values[hi];
        return s.grid[lo] + (half - f0) * (s.grid[hi] - s.grid[lo]) / (f1 - f0);
    };
    const double left = cross(i0 - 1, i0);
    const double right = cross(i1 + 1, i1);
    return right - left;
}

double normalized_l2_distance(const Spectrum& a, const Spectrum& b) {
    check_spectrum(a);
    check_spectrum(b);
    if (a.grid.size() != b.grid.size() || a.grid != b.grid)
        fail(errc::bad_config, "spectra must share the same grid");
    std::vector<double> diff2(a.grid.size()), a2(a.grid.size()), b2(a.grid.size());
    for (size_t i = 0; i < a.grid.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        diff2[i] = d * d;
        a2[i] = a.values[i] * a.values[i];
        b2[i] = b.values[i] * b.values[i];
    }
    const double na = std::sqrt(trapezoid(a.grid, a2));
    const double nb = std::sqrt(trapezoid(a.grid, b2));
    return std::sqrt(trapezoid(a.grid, diff2)) / std::min(na, nb);
}

bool resolved_doublet(const SecularRoots& r) {
    // Critical points of q(w) = |w-l+|^2 |w-l-|^2 solve the real cubic
    //   2w^3 - 3S w^2 + (S^2 + 2P + bm^2 + bp^2) w - (S P + bm^2 ap + bp^2 am) = 0
    // with S = ap+am, P = ap*am (ap, am the real parts; bp, bm the |Im|).
    // Three distinct real roots <=> the lineshape has two maxima; the
    // doublet counts as resolved when the smaller maximum reaches half of
    // the larger one.
    const double ap = r.lambda_plus.real(), bp = std::abs(r.lambda_plus.imag());
    const double am = r.lambda_minus.real(), bm = std::abs(r.lambda_minus.imag());
    const double s = ap + am;
    const double pr = ap * am;
    // monic form w^3 + c2 w^2 + c1 w + c0
    const double c2 = -1.5 * s;
    const double c1 = 0.5 * (s * s + 2.0 * pr + bm * bm + bp * bp);
    const double c0 = -0.5 * (s * pr + bm * bm * ap + bp * bp * am);
    // depressed cubic t^3 + p t + q, w = t - c2/3
    const double p = c1 - c2 * c2 / 3.0;
    const double q = c0 - c2 * c1 / 3.0 + 2.0 * c2 * c2 * c2 / 27.0;
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (!(disc > 0.0)) return false; // one critical point: unimodal

    // trigonometric roots, p < 0 guaranteed when disc > 0
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    double w_lo = std::numeric_limits<double>::infinity();
    double w_hi = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) {
        const double t = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
        const double w = t - c2 / 3.0;
        w_lo = std::min(w_lo, w);
        w_hi = std::max(w_hi, w);
    }
    const auto density = [&](double w) {
        return 1.0 / (std::norm(w - r.lambda_plus) * std::norm(w - r.lambda_minus));
    };
    const double h1 = density(w_lo);
    const double h2 = density(w_hi);
    return std::min(h1, h2) >= 0.5 * std::max(h1, h2);
}

namespace {

void write_g17(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

} // namespace

void write_spectrum_csv(const Spectrum& s, std::ostream& os) {
    check_spectrum(s);
    os << "omega_ueV,density_per_ueV\n";
    for (size_t i = 0; i < s.grid.size(); ++i) {
        write_g17(os, s.grid[i]);
        os << ',';
        write_g17(os, s.values[i]);
        os << '\n';
    }
}

void write_spectrum_csv(const Spectrum& s, const Spectrum& oracle, std::ostream& os) {
    check_spectrum(s);
    check_spectrum(oracle);
    if (s.grid != oracle.grid) fail(errc::bad_config, "spectra must share the same grid");
    os << "omega_ueV,density_per_ueV,qrt_density_per_ueV\n";
    for (size_t i = 0; i < s.grid.size(); ++i) {
        write_g17(os, s.grid[i]);
        os << ',';
        write_g17(os, s.values[i]);
        os << ',';
        write_g17(os, oracle.values[i]);
        os << '\n';
    }
}

} // namespace sps
