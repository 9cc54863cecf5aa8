#include "mlqi/multilevel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mlqi/kernel.hpp"

namespace mlqi {

namespace {
void validate(const RunConfig& cfg) {
    validate(cfg.spec);
    if (cfg.ell0 < 0) throw std::invalid_argument("RunConfig requires ell0 >= 0");
    if (cfg.levels < 1) throw std::invalid_argument("RunConfig requires levels >= 1");
    if (cfg.ell0 + cfg.levels - 1 > 26)
        throw std::invalid_argument("RunConfig requires ell0 + levels - 1 <= 26");
}

constexpr double kRoundoffFloor = 1e-13;
constexpr double kEarlyStopThreshold = 1e-14;
}  // namespace

std::vector<LevelReport> multilevel_spectral(const CosineSeries& f, const RunConfig& cfg) {
    validate(cfg);
    if (cfg.mode != RunMode::spectral)
        throw std::invalid_argument("multilevel_spectral requires mode == spectral");

    std::vector<LevelReport> reports;
    reports.reserve(static_cast<size_t>(cfg.levels));
    const double input_norm = wiener_norm(f);
    double growth = 1.0;
    const double A = bound_constants().A;

    CosineSeries residual = f;
    double spill = 0.0;
    for (int p = 1; p <= cfg.levels; ++p) {
        SpectralQi qi = qi_spectral(residual, cfg.ell0 + p - 1, cfg.spec);
        residual = residual - qi.series;
        spill += qi.spilled_mass;

        LevelReport rep;
        rep.p = p;
        rep.spacing = std::ldexp(1.0, -(cfg.ell0 + p - 1));
        rep.sup_error = sup_norm_estimate(residual, cfg.spec);
        rep.wiener_error = wiener_norm(residual);
        rep.residual = residual;
        rep.spilled_mass = spill;
        rep.roundoff_dominated = rep.sup_error < kRoundoffFloor;

        // guaranteed for any input: the residual operator has norm <= A
        growth *= A;
        if (*rep.wiener_error > growth * input_norm + 1e-12)
            throw std::logic_error("residual norm exceeded the A^p growth bound");
        if (rep.sup_error > *rep.wiener_error + 1e-12)
            throw std::logic_error("sup-norm estimate exceeded the Wiener norm");

        reports.push_back(std::move(rep));
        if (cfg.early_stop && reports.back().sup_error < kEarlyStopThreshold) break;
    }
    return reports;
}

std::vector<LevelReport> multilevel_sampled(const std::function<double(double)>& f,
                                            const RunConfig& cfg) {
    validate(cfg);
    if (cfg.mode != RunMode::sampled)
        throw std::invalid_argument("multilevel_sampled requires mode == sampled");
    if (!f) throw std::invalid_argument("multilevel_sampled requires a callback");

    std::vector<GridSamples> corrections;  // residual samples per level
    const auto approximant = [&](double x) {
        double s = 0.0;
        for (const GridSamples& g : corrections) s += qi_eval_direct(g, x, cfg.spec);
        return s;
    };

    std::vector<LevelReport> reports;
    reports.reserve(static_cast<size_t>(cfg.levels));
    for (int p = 1; p <= cfg.levels; ++p) {
        const int ell = cfg.ell0 + p - 1;
        GridSamples g;
        g.ell = ell;
        const int n = g.n();
        g.values.resize(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            const double x = static_cast<double>(j) / n;
            g.values[static_cast<size_t>(j)] = f(x) - approximant(x);
        }
        corrections.push_back(std::move(g));

        double best = 0.0;
        for (int j = 0; j < cfg.spec.eval_points; ++j) {
            const double x = (j + 0.5) / static_cast<double>(cfg.spec.eval_points);
            best = std::max(best, std::abs(f(x) - approximant(x)));
        }

        LevelReport rep;
        rep.p = p;
        rep.spacing = std::ldexp(1.0, -ell);
        rep.sup_error = best;
        rep.roundoff_dominated = best < kRoundoffFloor;
        reports.push_back(std::move(rep));
        if (cfg.early_stop && best < kEarlyStopThreshold) break;
    }
    return reports;
}

std::vector<double> decay_ratios(const std::vector<LevelReport>& reports) {
    if (reports.size() < 2)
        throw std::invalid_argument("decay_ratios requires at least 2 reports");
    std::vector<double> ratios;
    ratios.reserve(reports.size() - 1);
    for (size_t i = 1; i < reports.size(); ++i) {
        const double prev = reports[i - 1].sup_error;
        ratios.push_back(prev == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                     : reports[i].sup_error / prev);
    }
    return ratios;
}

}  // namespace mlqi
