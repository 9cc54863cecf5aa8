#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mlqi/series.hpp"

namespace mlqi {

enum class RunMode { spectral, sampled };

struct RunConfig {
    int ell0 = 0;        // level-one grid exponent, h = 1/2^ell0
    int levels = 1;      // number of refinement levels P
    RunMode mode = RunMode::spectral;
    EvalSpec spec{};
    bool early_stop = false;  // stop once sup_error < 1e-14
};

// Record of one refinement level.  Level p quasi-interpolates the level
// p-1 residual at spacing 1/2^{ell0+p-1}; the report describes the
// residual left after that correction.
struct LevelReport {
    int p = 0;
    double spacing = 0.0;
    double sup_error = 0.0;
    std::optional<double> wiener_error;      // spectral mode only
    std::optional<CosineSeries> residual;    // spectral mode only
    double spilled_mass = 0.0;               // cumulative frequency-cap spill
    bool roundoff_dominated = false;         // sup_error below 1e-13
};

std::vector<LevelReport> multilevel_spectral(const CosineSeries& f, const RunConfig& cfg);

// Black-box variant: f is any 1-periodic callback.  The approximant is
// kept as the sum of the per-level sampled quasi-interpolants and the
// residual is always re-evaluated through it, never resampled.
std::vector<LevelReport> multilevel_sampled(const std::function<double(double)>& f,
                                            const RunConfig& cfg);

// sup_error_p / sup_error_{p-1} for consecutive reports; a level whose
// predecessor has sup_error == 0 yields a NaN marker.
std::vector<double> decay_ratios(const std::vector<LevelReport>& reports);

}  // namespace mlqi
