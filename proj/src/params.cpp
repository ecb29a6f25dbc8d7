#include "sps/params.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

namespace sps {

DerivedWidths derived_widths(const SystemParams& p) {
    return {p.gamma + p.gamma_star, 0.5 * (p.gamma + p.gamma_star + p.kappa)};
}

namespace {

constexpr double rate_sanity_bound = 1.0e7; // ueV; rejects unit mistakes

void check_rate(double v, const char* name) {
    if (!std::isfinite(v)) fail(errc::non_finite, std::string(name) + " is not finite");
    if (v > rate_sanity_bound)
        fail(errc::out_of_range, std::string(name) + " exceeds sanity bound 1e7 ueV");
}

} // namespace

const SystemParams& validate(const SystemParams& p) {
    check_rate(p.g, "g");
    check_rate(p.kappa, "kappa");
    check_rate(p.gamma, "gamma");
    check_rate(p.gamma_star, "gamma_star");
    if (!std::isfinite(p.omega0)) fail(errc::non_finite, "omega0 is not finite");
    if (!std::isfinite(p.omega_cav)) fail(errc::non_finite, "omega_cav is not finite");
    if (p.kappa <= 0.0) fail(errc::non_positive_rate, "kappa must be > 0");
    if (p.gamma <= 0.0) fail(errc::non_positive_rate, "gamma must be > 0");
    if (p.g < 0.0) fail(errc::negative_value, "g must be >= 0");
    if (p.gamma_star < 0.0) fail(errc::negative_value, "gamma_star must be >= 0");
    return p;
}

double energy_to_inverse_time(double e_uev) {
    if (!std::isfinite(e_uev)) fail(errc::non_finite, "energy is not finite");
    return e_uev / hbar_uev_ns;
}

double inverse_time_to_energy(double rate_inv_ns) {
    if (!std::isfinite(rate_inv_ns)) fail(errc::non_finite, "rate is not finite");
    return rate_inv_ns * hbar_uev_ns;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

double parse_energy(const std::string& text) {
    std::string t = trim(text);
    double factor = 1.0;
    if (t.size() >= 3) {
        const std::string suffix = t.substr(t.size() - 3);
        if (suffix == "meV") {
            factor = 1000.0;
            t = trim(t.substr(0, t.size() - 3));
        } else if (suffix == "ueV") {
            t = trim(t.substr(0, t.size() - 3));
        }
    }
    if (t.empty()) fail(errc::bad_config, "empty energy value: '" + text + "'");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        fail(errc::bad_config, "cannot parse energy value: '" + text + "'");
    if (!std::isfinite(v)) fail(errc::bad_config, "energy value not finite: '" + text + "'");
    return v * factor;
}

bool ParamOverrides::empty() const {
    return !g && !kappa && !gamma && !gamma_star && !delta && !omega0 && !omega_cav;
}

ParamOverrides parse_config(std::istream& in) {
    ParamOverrides o;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(errc::bad_config, "config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const double value = parse_energy(line.substr(eq + 1));
        std::optional<double>* slot = nullptr;
        if (key == "g") slot = &o.g;
        else if (key == "kappa") slot = &o.kappa;
        else if (key == "gamma") slot = &o.gamma;
        else if (key == "gamma_star") slot = &o.gamma_star;
        else if (key == "delta") slot = &o.delta;
        else if (key == "omega0") slot = &o.omega0;
        else if (key == "omega_cav") slot = &o.omega_cav;
        else fail(errc::bad_config, "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (slot->has_value())
            fail(errc::bad_config, "config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        *slot = value;
    }
    if (o.delta && (o.omega0 || o.omega_cav))
        fail(errc::bad_config, "config: delta is mutually exclusive with omega0/omega_cav");
    return o;
}

ParamOverrides parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open config file '" + path + "'");
    return parse_config(in);
}

SystemParams apply_overrides(SystemParams base, const ParamOverrides& o) {
    if (o.delta && (o.omega0 || o.omega_cav))
        fail(errc::bad_config, "delta is mutually exclusive with omega0/omega_cav");
    if (o.g) base.g = *o.g;
    if (o.kappa) base.kappa = *o.kappa;
    if (o.gamma) base.gamma = *o.gamma;
    if (o.gamma_star) base.gamma_star = *o.gamma_star;
    if (o.delta) {
        base.omega0 = 0.0;
        base.omega_cav = *o.delta;
    }
    if (o.omega0) base.omega0 = *o.omega0;
    if (o.omega_cav) base.omega_cav = *o.omega_cav;
    return base;
}

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::non_finite: return "NonFinite";
        case errc::negative_value: return "NegativeValue";
        case errc::non_positive_rate: return "NonPositiveRate";
        case errc::out_of_range: return "OutOfRange";
        case errc::non_positive_width: return "NonPositiveWidth";
        case errc::zero_coupling: return "ZeroCoupling";
        case errc::grid_too_narrow: return "GridTooNarrow";
        case errc::grid_too_coarse: return "GridTooCoarse";
        case errc::multimodal: return "Multimodal";
        case errc::step_too_large: return "StepTooLarge";
        case errc::bad_config: return "BadConfig";
        case errc::io_error: return "IoError";
    }
    return "Unknown";
}

} // namespace sps
