// sweep.hpp — single-parameter sweeps, spectral-jump scenarios, and the
// 1-D design search for the dephasing rate maximizing cooperativity.
#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sps/params.hpp"

namespace sps {

enum class SweepAxis { gamma_star, delta, g, kappa, gamma };
enum class SweepOutput { r, cooperativity, p_cav, tau_inv, d, peak_frequency, fwhm };

const char* sweep_axis_name(SweepAxis a) noexcept;
const char* sweep_output_name(SweepOutput o) noexcept;
SweepAxis parse_sweep_axis(const std::string& name);
SweepOutput parse_sweep_output(const std::string& name);

struct SweepConfig {
    SystemParams base;
    SweepAxis axis = SweepAxis::gamma_star;
    double start = 0.0;
    double stop = 0.0;
    int points = 2;
    std::vector<SweepOutput> outputs;
};

// Requested outputs in config order; a cell is absent when its computation
// failed for this axis value, with the error recorded in note.
struct SweepRow {
    double axis_value;
    std::vector<std::optional<double>> values;
    std::string note;
};

// Uniform grid on [start, stop]; every point computed independently from the
// closed forms. Per-point failures become absent cells, never abort the
// sweep. Output is identical for any thread count (0 = hardware default).
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned threads = 1);

struct JumpResult {
    double p_before;
    double p_after;
    double peak_before; // ueV
    double peak_after;  // ueV
};

// Efficiency and spectral peak at the base detuning and after a sudden
// cavity-emitter detuning change of `jump` (the spectral-jump scenario).
JumpResult jump_scenario(const SystemParams& p, double jump);

struct DephasingOptimum {
    double gamma_star_opt; // ueV
    double c_max;          // cooperativity at the optimum
    bool on_boundary;      // true when the optimum sits at gamma_star = 0
};

// Golden-section search of the cooperativity over gamma_star in [0, 20|delta|]
// to relative tolerance 1e-8. Interior optimum satisfies
// kappa + gamma + gamma_star = 2|delta|; for |delta| <= (kappa+gamma)/2 the
// optimum is gamma_star = 0, flagged on_boundary.
DephasingOptimum optimal_dephasing(const SystemParams& p, double delta);

// Generic golden-section maximizer on [lo, hi]; rel_tol is relative to the
// initial bracket width.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol);

// CSV: first column named after the axis, then the requested outputs, absent
// cells empty, error tags in a trailing "note" column.
void write_sweep_csv(const SweepConfig& cfg, const std::vector<SweepRow>& rows, std::ostream& os);
// JSON: array of row objects with identical keys.
void write_sweep_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows, std::ostream& os);

} // namespace sps
