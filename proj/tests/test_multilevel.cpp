#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mlqi/commands.hpp"
#include "mlqi/kernel.hpp"
#include "mlqi/multilevel.hpp"

using namespace mlqi;

namespace {
// reference per-level sup errors (2-digit mantissas)
constexpr double kTableC1[10] = {9.9e-1, 7.0e-1, 1.9e-1, 1.4e-2, 2.4e-4,
                                 1.2e-6, 2.8e-9, 1.0e-10, 2.9e-12, 5.6e-14};
constexpr double kTableC9[10] = {2.0, 1.0, 1.3, 1.8, 1.0, 8.0e-1, 2.6e-1, 2.4e-2, 5.7e-4, 3.5e-6};
// p = 2 entry corrected for the exponent misprint (measured 1.0886)
constexpr double kTableExpcos[8] = {1.2, 1.1, 4.4e-1, 9.1e-2, 8.5e-3, 3.1e-4, 3.4e-6, 1.6e-8};

bool within_factor(double got, double want, double factor) {
    return got <= want * factor && got >= want / factor;
}

RunConfig spectral_cfg(int ell0, int levels) {
    RunConfig cfg;
    cfg.ell0 = ell0;
    cfg.levels = levels;
    cfg.mode = RunMode::spectral;
    return cfg;
}

RunConfig sampled_cfg(int ell0, int levels) {
    RunConfig cfg = spectral_cfg(ell0, levels);
    cfg.mode = RunMode::sampled;
    return cfg;
}
}  // namespace

TEST_CASE("c_1 run reproduces the reference decay (h = 1/2 at level one)") {
    const auto reports = multilevel_spectral(CosineSeries::mode(1), spectral_cfg(1, 10));
    REQUIRE(reports.size() == 10);
    for (int p = 1; p <= 7; ++p)
        CHECK(within_factor(reports[p - 1].sup_error, kTableC1[p - 1], 2.0));
    CHECK(reports[7].sup_error <= 1e-9);
    CHECK(reports[8].sup_error <= 1e-10);
    CHECK(reports[9].sup_error <= 1e-11);

    // decay continues through the deep levels
    const auto ratios = decay_ratios(reports);
    for (int p = 8; p <= 10; ++p) {
        CHECK(ratios[p - 2] > 0.0);
        CHECK(ratios[p - 2] < 1.0);
    }
}

TEST_CASE("c_9 run reproduces the reference decay (integer sampling)") {
    const auto reports = multilevel_spectral(CosineSeries::mode(9), spectral_cfg(0, 8));
    REQUIRE(reports.size() == 8);
    for (int p = 1; p <= 8; ++p)
        CHECK(within_factor(reports[p - 1].sup_error, kTableC9[p - 1], 2.0));
}

TEST_CASE("zero series stays zero") {
    const auto reports = multilevel_spectral(CosineSeries{}, spectral_cfg(0, 5));
    for (const auto& rep : reports) {
        CHECK(rep.sup_error == 0.0);
        CHECK(*rep.wiener_error == 0.0);
    }
}

TEST_CASE("level reports satisfy their structural invariants") {
    const auto reports = multilevel_spectral(expcos_series(), spectral_cfg(0, 6));
    const double wf = wiener_norm(expcos_series());
    const BoundConstants c = bound_constants();
    double prev_spacing = 0.0;
    for (const auto& rep : reports) {
        CHECK(rep.sup_error <= *rep.wiener_error + 1e-12);
        if (rep.p == 1)
            CHECK(rep.spacing == 1.0);
        else
            CHECK(rep.spacing == prev_spacing / 2.0);
        prev_spacing = rep.spacing;
        // crude growth bound
        CHECK(*rep.wiener_error <= std::pow(c.A, rep.p) * wf);
    }
}

TEST_CASE("residual telescoping") {
    const CosineSeries f = expcos_series();
    const int ell0 = 0, P = 5;
    const auto reports = multilevel_spectral(f, spectral_cfg(ell0, P));
    CosineSeries acc;
    CosineSeries prev = f;
    for (int p = 1; p <= P; ++p) {
        acc = acc + qi_spectral(prev, ell0 + p - 1).series;
        prev = *reports[static_cast<size_t>(p - 1)].residual;
    }
    const CosineSeries diff = f - (acc + *reports[static_cast<size_t>(P - 1)].residual);
    for (double c : diff.coeffs) CHECK(std::abs(c) < 1e-13);
}

TEST_CASE("eventual contraction of the residual norm") {
    // m below half the level-one node count: 0.9^p envelope with B = 10
    const auto reports = multilevel_spectral(CosineSeries::mode(1), spectral_cfg(2, 8));
    for (const auto& rep : reports)
        if (rep.p >= 3) CHECK(*rep.wiener_error <= 10.0 * std::pow(0.9, rep.p));
}

TEST_CASE("sampled mode agrees with spectral mode") {
    const auto spectral = multilevel_spectral(CosineSeries::mode(1), spectral_cfg(0, 6));
    const auto sampled = multilevel_sampled(
        [](double x) { return std::cos(2.0 * M_PI * x); }, sampled_cfg(0, 6));
    REQUIRE(sampled.size() == spectral.size());
    for (size_t i = 0; i < sampled.size(); ++i) {
        CHECK(std::abs(sampled[i].sup_error - spectral[i].sup_error) < 1e-10);
        CHECK(!sampled[i].wiener_error.has_value());
        CHECK(!sampled[i].residual.has_value());
    }
}

TEST_CASE("sampled mode on the constant target") {
    const auto reports =
        multilevel_sampled([](double) { return 1.0; }, sampled_cfg(0, 8));
    // level one leaves only the periodization ripple 2(psi_hat(1) + psi_hat(2) + ...)
    CHECK(reports[0].sup_error <= 6e-9);
    for (size_t i = 1; i < reports.size(); ++i)
        CHECK(reports[i].sup_error <= reports[i - 1].sup_error * (1.0 + 1e-9));
    CHECK(reports[6].sup_error <= 1e-12);
    CHECK(reports[7].sup_error <= 1e-12);
}

TEST_CASE("sampled run on exp(cos) tracks the reference decay") {
    const auto reports = multilevel_sampled(
        [](double x) { return std::exp(std::cos(2.0 * M_PI * x)); }, sampled_cfg(1, 8));
    for (int p = 1; p <= 8; ++p)
        CHECK(within_factor(reports[p - 1].sup_error, kTableExpcos[p - 1], 3.0));
}

TEST_CASE("decay ratios") {
    std::vector<LevelReport> fake(3);
    fake[0].sup_error = 1.0;
    fake[1].sup_error = 0.5;
    fake[2].sup_error = 0.25;
    const auto r = decay_ratios(fake);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == 0.5);
    CHECK(r[1] == 0.5);

    fake[1].sup_error = 0.0;
    CHECK(std::isnan(decay_ratios(fake)[1]));

    CHECK_THROWS_AS(decay_ratios({}), std::invalid_argument);
    CHECK_THROWS_AS(decay_ratios(std::vector<LevelReport>(1)), std::invalid_argument);
}

TEST_CASE("early stop cuts the run short") {
    RunConfig cfg = spectral_cfg(1, 12);
    cfg.early_stop = true;
    const auto reports = multilevel_spectral(CosineSeries::mode(1), cfg);
    CHECK(reports.size() < 12);
    CHECK(reports.back().sup_error < 1e-14);
}
