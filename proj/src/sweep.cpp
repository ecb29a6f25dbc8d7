#include "sps/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "sps/figures.hpp"
#include "sps/spectra.hpp"

namespace sps {

const char* sweep_axis_name(SweepAxis a) noexcept {
    switch (a) {
        case SweepAxis::gamma_star: return "gamma_star";
        case SweepAxis::delta: return "delta";
        case SweepAxis::g: return "g";
        case SweepAxis::kappa: return "kappa";
        case SweepAxis::gamma: return "gamma";
    }
    return "unknown";
}

const char* sweep_output_name(SweepOutput o) noexcept {
    switch (o) {
        case SweepOutput::r: return "r";
        case SweepOutput::cooperativity: return "cooperativity";
        case SweepOutput::p_cav: return "p_cav";
        case SweepOutput::tau_inv: return "tau_inv";
        case SweepOutput::d: return "d";
        case SweepOutput::peak_frequency: return "peak_frequency";
        case SweepOutput::fwhm: return "fwhm";
    }
    return "unknown";
}

SweepAxis parse_sweep_axis(const std::string& name) {
    for (SweepAxis a : {SweepAxis::gamma_star, SweepAxis::delta, SweepAxis::g, SweepAxis::kappa,
                        SweepAxis::gamma})
        if (name == sweep_axis_name(a)) return a;
    fail(errc::bad_config, "unknown sweep axis '" + name + "'");
}

SweepOutput parse_sweep_output(const std::string& name) {
    for (SweepOutput o : {SweepOutput::r, SweepOutput::cooperativity, SweepOutput::p_cav,
                          SweepOutput::tau_inv, SweepOutput::d, SweepOutput::peak_frequency,
                          SweepOutput::fwhm})
        if (name == sweep_output_name(o)) return o;
    fail(errc::bad_config, "unknown sweep output '" + name + "'");
}

namespace {

void check_config(const SweepConfig& cfg) {
    if (!std::isfinite(cfg.start) || !std::isfinite(cfg.stop) || !(cfg.start < cfg.stop))
        fail(errc::bad_config, "sweep requires finite start < stop");
    if (cfg.points < 2 || cfg.points > 1'000'000)
        fail(errc::bad_config, "sweep points must be in [2, 1e6]");
    for (size_t i = 0; i < cfg.outputs.size(); ++i)
        for (size_t j = i + 1; j < cfg.outputs.size(); ++j)
            if (cfg.outputs[i] == cfg.outputs[j]) fail(errc::bad_config, "duplicate sweep output");
}

SystemParams at_axis(SystemParams p, SweepAxis axis, double x) {
    switch (axis) {
        case SweepAxis::gamma_star: p.gamma_star = x; break;
        case SweepAxis::delta: p.omega_cav = p.omega0 + x; break;
        case SweepAxis::g: p.g = x; break;
        case SweepAxis::kappa: p.kappa = x; break;
        case SweepAxis::gamma: p.gamma = x; break;
    }
    return p;
}

void append_note(std::string& note, SweepOutput o, const Error& e) {
    if (!note.empty()) note += ';';
    note += sweep_output_name(o);
    note += '=';
    note += errc_name(e.code());
}

SweepRow compute_row(const SweepConfig& cfg, double x) {
    SweepRow row;
    row.axis_value = x;
    row.values.assign(cfg.outputs.size(), std::nullopt);
    const SystemParams p = at_axis(cfg.base, cfg.axis, x);
    try {
        validate(p);
    } catch (const Error& e) {
        row.note = errc_name(e.code());
        return row;
    }

    // one spectrum per point serves both lineshape outputs
    const bool needs_spectrum =
        std::any_of(cfg.outputs.begin(), cfg.outputs.end(), [](SweepOutput o) {
            return o == SweepOutput::peak_frequency || o == SweepOutput::fwhm;
        });
    std::optional<Spectrum> line;
    std::optional<Error> line_error;
    if (needs_spectrum) {
        try {
            line = cavity_spectrum_closed_form(p, default_grid(p));
        } catch (const Error& e) {
            line_error = e;
        }
    }

    for (size_t i = 0; i < cfg.outputs.size(); ++i) {
        const SweepOutput o = cfg.outputs[i];
        try {
            switch (o) {
                case SweepOutput::r: row.values[i] = coupling_rate(p); break;
                case SweepOutput::cooperativity: row.values[i] = cooperativity(p); break;
                case SweepOutput::p_cav: row.values[i] = efficiency(p); break;
                case SweepOutput::tau_inv: row.values[i] = lifetime_inv(p); break;
                case SweepOutput::d: row.values[i] = indistinguishability(p); break;
                case SweepOutput::peak_frequency:
                    if (line_error) throw *line_error;
                    row.values[i] = peak_frequency(*line);
                    break;
                case SweepOutput::fwhm:
                    if (line_error) throw *line_error;
                    row.values[i] = fwhm(*line);
                    break;
            }
        } catch (const Error& e) {
            append_note(row.note, o, e);
        }
    }
    return row;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned threads) {
    check_config(cfg);
    const int n = cfg.points;
    const double step = (cfg.stop - cfg.start) / (n - 1);
    std::vector<SweepRow> rows(static_cast<size_t>(n));

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

    const auto work = [&](unsigned t) {
        for (int i = static_cast<int>(t); i < n; i += static_cast<int>(threads)) {
            const double x = (i == n - 1) ? cfg.stop : cfg.start + step * i;
            rows[static_cast<size_t>(i)] = compute_row(cfg, x);
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    return rows;
}

JumpResult jump_scenario(const SystemParams& p, double jump) {
    validate(p);
    if (!std::isfinite(jump)) fail(errc::non_finite, "jump is not finite");
    SystemParams after = p;
    after.omega_cav += jump;
    JumpResult r{};
    r.p_before = efficiency(p);
    r.p_after = efficiency(after);
    r.peak_before = peak_frequency(cavity_spectrum_closed_form(p, default_grid(p)));
    r.peak_after = peak_frequency(cavity_spectrum_closed_form(after, default_grid(after)));
    return r;
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol) {
    if (!(lo < hi)) fail(errc::bad_config, "golden section needs lo < hi");
    constexpr double inv_phi = 0.6180339887498949;
    const double tol = rel_tol * (hi - lo);
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

DephasingOptimum optimal_dephasing(const SystemParams& p, double delta) {
    validate(p);
    if (!std::isfinite(delta)) fail(errc::non_finite, "delta is not finite");
    const double dabs = std::abs(delta);
    SystemParams base = p;
    base.omega0 = 0.0;
    base.omega_cav = delta;

    const auto coop_at = [&](double gs) {
        SystemParams q = base;
        q.gamma_star = gs;
        return cooperativity(q);
    };

    // R is maximal in the total width at kappa+gamma+gamma_star = 2|delta|;
    // below that detuning the width is already past the optimum at gamma_star = 0.
    if (dabs <= 0.5 * (p.kappa + p.gamma)) return {0.0, coop_at(0.0), true};

    // bracket capped at the rate sanity bound so every probe stays valid
    const double hi = std::min(20.0 * dabs, 1.0e7);
    const double gs_opt = golden_section_max(coop_at, 0.0, hi, 1e-8);
    return {gs_opt, coop_at(gs_opt), false};
}

namespace {

void write_g17(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

} // namespace

void write_sweep_csv(const SweepConfig& cfg, const std::vector<SweepRow>& rows, std::ostream& os) {
    os << sweep_axis_name(cfg.axis);
    for (SweepOutput o : cfg.outputs) os << ',' << sweep_output_name(o);
    os << ",note\n";
    for (const auto& row : rows) {
        write_g17(os, row.axis_value);
        for (const auto& v : row.values) {
            os << ',';
            if (v) write_g17(os, *v);
        }
        os << ',' << row.note << '\n';
    }
}

void write_sweep_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows, std::ostream& os) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        obj[sweep_axis_name(cfg.axis)] = row.axis_value;
        for (size_t i = 0; i < cfg.outputs.size(); ++i) {
            const char* key = sweep_output_name(cfg.outputs[i]);
            if (row.values[i])
                obj[key] = *row.values[i];
            else
                obj[key] = nullptr;
        }
        obj["note"] = row.note;
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
}

} // namespace sps
