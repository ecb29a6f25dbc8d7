// sps — command-line frontend: spectra, figures of merit, sweeps, jump
// scenarios, the dephasing design search, and one-shot reproduction of the
// reference figures and quoted numbers.
//
// Exit codes: 0 ok, 2 usage, 3 validation, 4 numeric domain, 5 I/O.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sps/dynamics.hpp"
#include "sps/figures.hpp"
#include "sps/params.hpp"
#include "sps/spectra.hpp"
#include "sps/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code_for(sps::errc c) {
    switch (c) {
        case sps::errc::non_finite:
        case sps::errc::negative_value:
        case sps::errc::non_positive_rate:
        case sps::errc::out_of_range:
        case sps::errc::bad_config:
            return 3;
        case sps::errc::non_positive_width:
        case sps::errc::zero_coupling:
        case sps::errc::grid_too_narrow:
        case sps::errc::grid_too_coarse:
        case sps::errc::multimodal:
        case sps::errc::step_too_large:
            return 4;
        case sps::errc::io_error:
            return 5;
    }
    return 1;
}

std::string g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Removes every file it created unless commit() was called.
class OutputTracker {
public:
    ~OutputTracker() {
        if (committed_) return;
        for (const auto& p : files_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }
    std::ofstream open(const fs::path& path) {
        std::ofstream os(path);
        if (!os) sps::fail(sps::errc::io_error, "cannot open '" + path.string() + "' for writing");
        files_.push_back(path);
        return os;
    }
    void close(std::ofstream& os, const fs::path& path) {
        os.flush();
        if (!os) sps::fail(sps::errc::io_error, "failed writing '" + path.string() + "'");
        os.close();
    }
    void commit() { committed_ = true; }

private:
    std::vector<fs::path> files_;
    bool committed_ = false;
};

// Writes to the named file (removed again on failure) or to stdout for "-".
void emit(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        std::cout.flush();
        return;
    }
    OutputTracker tracker;
    auto os = tracker.open(path);
    writer(os);
    tracker.close(os, path);
    tracker.commit();
}

// -------------------------------------------------------------------------
// parameter assembly: preset < config file < explicit flags

struct ParamArgs {
    std::string preset;
    std::string config;
    std::string g, kappa, gamma, gamma_star, delta, omega0, omega_cav;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--preset", preset, "Parameter preset: press | hennessy");
        cmd->add_option("--config", config, "Flat key = value parameter file");
        cmd->add_option("--g", g, "Coupling strength (energy, e.g. 35, 35ueV, 0.035meV)");
        cmd->add_option("--kappa", kappa, "Cavity linewidth FWHM (energy)");
        cmd->add_option("--gamma", gamma, "Emitter decay into leaky modes (energy)");
        cmd->add_option("--gamma-star", gamma_star, "Pure dephasing rate (energy)");
        cmd->add_option("--delta", delta, "Cavity-emitter detuning (relative frame)");
        cmd->add_option("--omega0", omega0, "Emitter frequency (absolute frame)");
        cmd->add_option("--omega-cav", omega_cav, "Cavity frequency (absolute frame)");
    }

    sps::SystemParams resolve() const {
        const bool any_flag = !(g.empty() && kappa.empty() && gamma.empty() &&
                                gamma_star.empty() && delta.empty() && omega0.empty() &&
                                omega_cav.empty());
        if (preset.empty() && config.empty() && !any_flag)
            throw UsageError("no parameters given (use --preset, --config, or explicit flags)");

        sps::SystemParams base{};
        bool have_g = false, have_kappa = false, have_gamma = false;
        if (!preset.empty()) {
            if (preset == "press") {
                base.g = 35.0;
                base.kappa = 85.0;
                base.gamma = 1.0;
            } else if (preset == "hennessy") {
                base.g = 76.0;
                base.kappa = 100.0;
                base.gamma = 1.0;
            } else {
                throw UsageError("unknown preset '" + preset + "' (press | hennessy)");
            }
            have_g = have_kappa = have_gamma = true;
        }

        if (!config.empty()) {
            const sps::ParamOverrides file = sps::parse_config_file(config);
            base = sps::apply_overrides(base, file);
            have_g |= file.g.has_value();
            have_kappa |= file.kappa.has_value();
            have_gamma |= file.gamma.has_value();
        }

        sps::ParamOverrides flags;
        if (!g.empty()) flags.g = sps::parse_energy(g);
        if (!kappa.empty()) flags.kappa = sps::parse_energy(kappa);
        if (!gamma.empty()) flags.gamma = sps::parse_energy(gamma);
        if (!gamma_star.empty()) flags.gamma_star = sps::parse_energy(gamma_star);
        if (!delta.empty()) flags.delta = sps::parse_energy(delta);
        if (!omega0.empty()) flags.omega0 = sps::parse_energy(omega0);
        if (!omega_cav.empty()) flags.omega_cav = sps::parse_energy(omega_cav);
        base = sps::apply_overrides(base, flags);
        have_g |= flags.g.has_value();
        have_kappa |= flags.kappa.has_value();
        have_gamma |= flags.gamma.has_value();

        std::string missing;
        if (!have_g) missing += " --g";
        if (!have_kappa) missing += " --kappa";
        if (!have_gamma) missing += " --gamma";
        if (!missing.empty()) throw UsageError("missing required parameters:" + missing);
        return base;
    }
};

unsigned sweep_threads() {
    const char* env = std::getenv("SPS_THREADS");
    if (!env || !*env) return 0; // hardware default
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw UsageError("SPS_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
}

bool verbose_flag = false;

void diag(const std::string& msg) {
    if (verbose_flag) std::cerr << "[sps] " << msg << '\n';
}

void diag_params(const sps::SystemParams& p) {
    diag("params: g=" + g6(p.g) + " kappa=" + g6(p.kappa) + " gamma=" + g6(p.gamma) +
         " gamma_star=" + g6(p.gamma_star) + " omega0=" + g6(p.omega0) +
         " omega_cav=" + g6(p.omega_cav) + " (delta=" + g6(p.delta()) + ") ueV");
}

// -------------------------------------------------------------------------
// subcommands

struct SpectrumCmd {
    ParamArgs params;
    bool oracle = false;
    int grid_points = 0;
    std::string grid_lo, grid_hi;
    std::string output = "-";
    std::string plot_data;

    int run() const {
        const sps::SystemParams p = params.resolve();
        sps::validate(p);
        diag_params(p);

        std::vector<double> grid;
        if (grid_points > 0 || !grid_lo.empty() || !grid_hi.empty()) {
            std::vector<double> dflt = sps::default_grid(p);
            const double lo = grid_lo.empty() ? dflt.front() : sps::parse_energy(grid_lo);
            const double hi = grid_hi.empty() ? dflt.back() : sps::parse_energy(grid_hi);
            const int n = grid_points > 0 ? grid_points : static_cast<int>(dflt.size());
            grid = sps::uniform_grid(lo, hi, n);
        } else {
            grid = sps::default_grid(p);
        }

        const sps::Spectrum s = sps::cavity_spectrum_closed_form(p, grid);
        if (oracle) {
            double preclip = 0.0;
            const sps::Spectrum q = sps::qrt_spectrum(p, grid, &preclip);
            diag("oracle pre-clip minimum: " + g6(preclip));
            emit(output, [&](std::ostream& os) { sps::write_spectrum_csv(s, q, os); });
        } else {
            emit(output, [&](std::ostream& os) { sps::write_spectrum_csv(s, os); });
        }

        if (!plot_data.empty()) {
            OutputTracker tracker;
            const auto write_curve = [&](const std::string& suffix, const sps::Spectrum& curve) {
                const fs::path path = plot_data + "_" + suffix + ".csv";
                auto os = tracker.open(path);
                sps::write_spectrum_csv(curve, os);
                tracker.close(os, path);
                diag("wrote " + path.string());
            };
            write_curve("cavity", s);
            write_curve("qd0", sps::qd_uncoupled_spectrum(p, grid));
            write_curve("cav0", sps::cavity_uncoupled_spectrum(p, grid));
            write_curve("filter", sps::filter_product_spectrum(p, grid));
            tracker.commit();
        }
        return 0;
    }
};

void write_figures(const sps::SystemParams& p, const std::string& format, std::ostream& os) {
    const sps::FiguresOfMerit f = sps::figures_of_merit(p);
    const sps::FilteringCondition fc = sps::filtering_condition(p);
    const double tau_ns = 1.0 / sps::energy_to_inverse_time(f.tau_inv);
    if (format == "json") {
        ordered_json obj;
        obj["r_ueV"] = f.r;
        obj["cooperativity"] = f.cooperativity;
        obj["p_cav"] = f.p_cav;
        obj["tau_inv_ueV"] = f.tau_inv;
        obj["tau_ns"] = tau_ns;
        if (f.d)
            obj["d"] = *f.d;
        else
            obj["d"] = nullptr;
        obj["filtering"] = fc.filtering;
        obj["efficient_emission"] = fc.efficient_emission;
        obj["note"] = f.d ? "" : "d=Multimodal";
        os << obj.dump(2) << '\n';
    } else {
        os << "r_ueV,cooperativity,p_cav,tau_inv_ueV,tau_ns,d,filtering,efficient_emission,note\n";
        os << g17(f.r) << ',' << g17(f.cooperativity) << ',' << g17(f.p_cav) << ','
           << g17(f.tau_inv) << ',' << g17(tau_ns) << ',' << (f.d ? g17(*f.d) : "") << ','
           << (fc.filtering ? 1 : 0) << ',' << (fc.efficient_emission ? 1 : 0) << ','
           << (f.d ? "" : "d=Multimodal") << '\n';
    }
}

struct FiguresCmd {
    ParamArgs params;
    std::string format = "csv";
    std::string output = "-";

    int run() const {
        const sps::SystemParams p = params.resolve();
        sps::validate(p);
        diag_params(p);
        emit(output, [&](std::ostream& os) { write_figures(p, format, os); });
        return 0;
    }
};

struct SweepCmd {
    ParamArgs params;
    std::string axis = "gamma_star";
    std::string start, stop;
    int points = 101;
    std::string outputs = "p_cav";
    std::string format = "csv";
    std::string output = "-";

    int run() const {
        sps::SweepConfig cfg;
        cfg.base = params.resolve();
        sps::validate(cfg.base);
        diag_params(cfg.base);
        cfg.axis = sps::parse_sweep_axis(axis);
        if (start.empty() || stop.empty()) throw UsageError("sweep requires --start and --stop");
        cfg.start = sps::parse_energy(start);
        cfg.stop = sps::parse_energy(stop);
        cfg.points = points;
        std::string token;
        for (char ch : outputs + ",") {
            if (ch == ',') {
                if (!token.empty()) cfg.outputs.push_back(sps::parse_sweep_output(token));
                token.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                token += ch;
            }
        }
        const auto rows = sps::run_sweep(cfg, sweep_threads());
        emit(output, [&](std::ostream& os) {
            if (format == "json")
                sps::write_sweep_json(cfg, rows, os);
            else
                sps::write_sweep_csv(cfg, rows, os);
        });
        return 0;
    }
};

struct JumpCmd {
    ParamArgs params;
    std::string jump;
    std::string format = "csv";
    std::string output = "-";

    int run() const {
        const sps::SystemParams p = params.resolve();
        sps::validate(p);
        diag_params(p);
        if (jump.empty()) throw UsageError("jump requires --jump");
        const sps::JumpResult r = sps::jump_scenario(p, sps::parse_energy(jump));
        emit(output, [&](std::ostream& os) {
            if (format == "json") {
                ordered_json obj;
                obj["p_before"] = r.p_before;
                obj["p_after"] = r.p_after;
                obj["peak_before_ueV"] = r.peak_before;
                obj["peak_after_ueV"] = r.peak_after;
                os << obj.dump(2) << '\n';
            } else {
                os << "p_before,p_after,peak_before_ueV,peak_after_ueV\n";
                os << g17(r.p_before) << ',' << g17(r.p_after) << ',' << g17(r.peak_before) << ','
                   << g17(r.peak_after) << '\n';
            }
        });
        return 0;
    }
};

struct DesignCmd {
    ParamArgs params;
    std::string format = "csv";
    std::string output = "-";

    int run() const {
        const sps::SystemParams p = params.resolve();
        sps::validate(p);
        diag_params(p);
        const sps::DephasingOptimum opt = sps::optimal_dephasing(p, p.delta());
        emit(output, [&](std::ostream& os) {
            if (format == "json") {
                ordered_json obj;
                obj["gamma_star_opt_ueV"] = opt.gamma_star_opt;
                obj["c_max"] = opt.c_max;
                obj["on_boundary"] = opt.on_boundary;
                os << obj.dump(2) << '\n';
            } else {
                os << "gamma_star_opt_ueV,c_max,on_boundary\n";
                os << g17(opt.gamma_star_opt) << ',' << g17(opt.c_max) << ','
                   << (opt.on_boundary ? 1 : 0) << '\n';
            }
        });
        return 0;
    }
};

// -------------------------------------------------------------------------
// reproduce: named reference artifacts

sps::SystemParams press_params(double gamma_star, double delta) {
    return {35.0, 85.0, 1.0, gamma_star, 0.0, delta};
}

sps::SystemParams hennessy_params(double gamma_star, double delta, double gamma = 1.0) {
    return {76.0, 100.0, gamma, gamma_star, 0.0, delta};
}

void reproduce_fig2(const std::string& which, const fs::path& dir) {
    double gamma_star = 0.0, delta = 0.0;
    if (which == "fig2a") { gamma_star = 0.0; delta = 0.0; }
    else if (which == "fig2b") { gamma_star = 500.0; delta = 0.0; }
    else if (which == "fig2c") { gamma_star = 0.0; delta = 1000.0; }
    else if (which == "fig2d") { gamma_star = 500.0; delta = 1000.0; }
    const sps::SystemParams p = press_params(gamma_star, delta);
    const std::vector<double> grid = sps::default_grid(p);

    OutputTracker tracker;
    const auto write_curve = [&](const std::string& suffix, const sps::Spectrum& s) {
        const fs::path path = dir / (which + "_" + suffix + ".csv");
        auto os = tracker.open(path);
        sps::write_spectrum_csv(s, os);
        tracker.close(os, path);
        std::cout << "wrote " << path.string() << '\n';
    };
    write_curve("cavity", sps::cavity_spectrum_closed_form(p, grid));
    write_curve("qd0", sps::qd_uncoupled_spectrum(p, grid));
    write_curve("cav0", sps::cavity_uncoupled_spectrum(p, grid));
    tracker.commit();
}

void reproduce_fig3(const std::string& which, const fs::path& dir) {
    const fs::path path = dir / (which + ".csv");
    OutputTracker tracker;
    auto os = tracker.open(path);
    const int points = 501;
    if (which == "fig3a") {
        os << "gamma_star_ueV,press_delta0,press_delta1meV,hennessy_delta0,hennessy_delta1meV\n";
        for (int i = 0; i < points; ++i) {
            const double gs = 2000.0 * i / (points - 1);
            os << g17(gs) << ',' << g17(sps::efficiency(press_params(gs, 0.0))) << ','
               << g17(sps::efficiency(press_params(gs, 1000.0))) << ','
               << g17(sps::efficiency(hennessy_params(gs, 0.0))) << ','
               << g17(sps::efficiency(hennessy_params(gs, 1000.0))) << '\n';
        }
    } else {
        os << "delta_ueV,press_gs0,press_gs500,hennessy_gs0,hennessy_gs500\n";
        for (int i = 0; i < points; ++i) {
            const double delta = 2000.0 * i / (points - 1);
            os << g17(delta) << ',' << g17(sps::efficiency(press_params(0.0, delta))) << ','
               << g17(sps::efficiency(press_params(500.0, delta))) << ','
               << g17(sps::efficiency(hennessy_params(0.0, delta))) << ','
               << g17(sps::efficiency(hennessy_params(500.0, delta))) << '\n';
        }
    }
    tracker.close(os, path);
    tracker.commit();
    std::cout << "wrote " << path.string() << '\n';

    if (which == "fig3b") {
        // the undephased and dephased Press curves trade places once
        double lo = 1.0, hi = 500.0;
        const auto diff = [](double delta) {
            return sps::efficiency(press_params(0.0, delta)) -
                   sps::efficiency(press_params(500.0, delta));
        };
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (diff(lo) * diff(mid) <= 0.0)
                hi = mid;
            else
                lo = mid;
        }
        std::cout << "press curves cross at delta = " << g6(0.5 * (lo + hi)) << " ueV\n";
    }
}

void reproduce_table_efficiency(std::ostream& os) {
    struct Row {
        const char* name;
        sps::SystemParams params;
        double quoted;
    };
    const Row rows[] = {
        {"press_gs0_delta0", press_params(0.0, 0.0), 0.97},
        {"press_gs0_delta1meV", press_params(0.0, 1000.0), 0.10},
        {"press_gs500_delta0", press_params(500.0, 0.0), 0.90},
        {"press_gs500_delta1meV", press_params(500.0, 1000.0), 0.40},
        {"hennessy_gs0_delta0", hennessy_params(0.0, 0.0), 0.99},
        {"hennessy_gs0_delta1meV", hennessy_params(0.0, 1000.0), 0.37},
        {"hennessy_gs500_delta0", hennessy_params(500.0, 0.0), 0.97},
        {"hennessy_gs500_delta1meV", hennessy_params(500.0, 1000.0), 0.76},
        {"hennessy_gamma0.1_gs500_delta1meV", hennessy_params(500.0, 1000.0, 0.1), 0.96},
    };
    os << "case,p_cav_computed,p_cav_quoted,diff_points\n";
    for (const Row& row : rows) {
        const double computed = sps::efficiency(row.params);
        os << row.name << ',' << g6(computed) << ',' << g6(row.quoted) << ','
           << g6(100.0 * std::abs(computed - row.quoted)) << '\n';
    }
}

void reproduce_indist(std::ostream& os) {
    // wavelength-stabilized source: kappa = gamma = 10 ueV, g = 35 ueV,
    // gamma_star = 500 ueV, detuned by 1.5 meV into the white-light regime
    const sps::SystemParams detuned{35.0, 10.0, 10.0, 500.0, 0.0, 1500.0};
    const sps::SystemParams resonant{35.0, 10.0, 10.0, 500.0, 0.0, 0.0};
    os << "quantity,computed,quoted\n";
    os << "d_delta1.5meV," << g6(sps::indistinguishability(detuned)) << ",0.97\n";
    os << "p_cav_delta1.5meV," << g6(sps::efficiency(detuned)) << ",0.03\n";
    os << "d_resonant," << g6(sps::indistinguishability(resonant)) << ",\n";
}

struct ReproduceCmd {
    std::string target;
    std::string out_dir = ".";

    int run() const {
        const fs::path dir(out_dir);
        if (target.rfind("fig2", 0) == 0 && (target == "fig2a" || target == "fig2b" ||
                                             target == "fig2c" || target == "fig2d")) {
            reproduce_fig2(target, dir);
        } else if (target == "fig3a" || target == "fig3b") {
            reproduce_fig3(target, dir);
        } else if (target == "table-efficiency") {
            reproduce_table_efficiency(std::cout);
        } else if (target == "indist") {
            reproduce_indist(std::cout);
        } else {
            throw UsageError("unknown reproduce target '" + target +
                             "' (fig2a..fig2d, fig3a, fig3b, table-efficiency, indist)");
        }
        return 0;
    }
};

} // namespace

namespace {

int run_app(int argc, char** argv) {
    CLI::App app{"sps — single-emitter cavity QED: spectra, efficiency, lifetime,"
                 " indistinguishability"};
    app.require_subcommand(1);
    app.add_flag("--verbose", verbose_flag, "Run metadata on the diagnostic stream");

    SpectrumCmd spectrum_cmd;
    auto* spectrum = app.add_subcommand("spectrum", "Cavity emission spectrum CSV");
    spectrum_cmd.params.add_options(spectrum);
    spectrum->add_flag("--oracle", spectrum_cmd.oracle, "Add the quantum-regression column");
    spectrum->add_option("--grid-points", spectrum_cmd.grid_points, "Grid size (default 20001)");
    spectrum->add_option("--grid-lo", spectrum_cmd.grid_lo, "Grid lower bound (energy)");
    spectrum->add_option("--grid-hi", spectrum_cmd.grid_hi, "Grid upper bound (energy)");
    spectrum->add_option("--output", spectrum_cmd.output, "Output path ('-' = stdout)");
    spectrum->add_option("--plot-data", spectrum_cmd.plot_data,
                         "Prefix for per-curve two-column series");

    FiguresCmd figures_cmd;
    auto* figures = app.add_subcommand("figures", "One-row table of figures of merit");
    figures_cmd.params.add_options(figures);
    figures->add_option("--format", figures_cmd.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    figures->add_option("--output", figures_cmd.output, "Output path ('-' = stdout)");

    SweepCmd sweep_cmd;
    auto* sweep = app.add_subcommand("sweep", "Single-parameter sweep");
    sweep_cmd.params.add_options(sweep);
    sweep->add_option("--axis", sweep_cmd.axis, "gamma_star | delta | g | kappa | gamma");
    sweep->add_option("--start", sweep_cmd.start, "Axis start (energy)");
    sweep->add_option("--stop", sweep_cmd.stop, "Axis stop (energy)");
    sweep->add_option("--points", sweep_cmd.points, "Number of points (default 101)");
    sweep->add_option("--outputs", sweep_cmd.outputs,
                      "Comma list of r,cooperativity,p_cav,tau_inv,d,peak_frequency,fwhm");
    sweep->add_option("--format", sweep_cmd.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--output", sweep_cmd.output, "Output path ('-' = stdout)");

    JumpCmd jump_cmd;
    auto* jump = app.add_subcommand("jump", "Spectral-jump robustness scenario");
    jump_cmd.params.add_options(jump);
    jump->add_option("--jump", jump_cmd.jump, "Detuning jump (energy)");
    jump->add_option("--format", jump_cmd.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    jump->add_option("--output", jump_cmd.output, "Output path ('-' = stdout)");

    DesignCmd design_cmd;
    auto* design = app.add_subcommand(
        "design", "Dephasing rate maximizing cooperativity at the given detuning");
    design_cmd.params.add_options(design);
    design->add_option("--format", design_cmd.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    design->add_option("--output", design_cmd.output, "Output path ('-' = stdout)");

    ReproduceCmd reproduce_cmd;
    auto* reproduce = app.add_subcommand("reproduce", "Regenerate a named reference artifact");
    reproduce->add_option("target", reproduce_cmd.target,
                          "fig2a..fig2d | fig3a | fig3b | table-efficiency | indist")
        ->required();
    reproduce->add_option("--out-dir", reproduce_cmd.out_dir, "Directory for data files");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(spectrum)) return spectrum_cmd.run();
        if (app.got_subcommand(figures)) return figures_cmd.run();
        if (app.got_subcommand(sweep)) return sweep_cmd.run();
        if (app.got_subcommand(jump)) return jump_cmd.run();
        if (app.got_subcommand(design)) return design_cmd.run();
        if (app.got_subcommand(reproduce)) return reproduce_cmd.run();
        throw UsageError("no subcommand given");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const sps::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (...) {
        std::cerr << "internal error\n";
        return 1;
    }
}
