#include "mlqi/commands.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "mlqi/analysis.hpp"
#include "mlqi/kernel.hpp"

namespace mlqi {

CosineSeries expcos_series() {
    constexpr int kNodes = 1 << 14;
    constexpr int kMaxFreq = 40;
    std::vector<double> fx(kNodes);
    for (int j = 0; j < kNodes; ++j)
        fx[static_cast<size_t>(j)] = std::exp(std::cos(2.0 * M_PI * j / kNodes));

    CosineSeries f;
    f.coeffs.assign(kMaxFreq + 1, 0.0);
    for (int k = 0; k <= kMaxFreq; ++k) {
        double acc = 0.0;
        for (int j = 0; j < kNodes; ++j)
            acc += fx[static_cast<size_t>(j)] * std::cos(2.0 * M_PI * k * j / kNodes);
        f.coeffs[static_cast<size_t>(k)] = (k == 0 ? 1.0 : 2.0) * acc / kNodes;
    }
    return f;
}

Target make_cosine_target(int m) {
    if (m < 0) throw std::invalid_argument("requires m >= 0");
    Target t;
    t.name = "c" + std::to_string(m);
    t.series = CosineSeries::mode(m);
    t.fn = [m](double x) { return std::cos(2.0 * M_PI * m * x); };
    return t;
}

Target make_expcos_target() {
    Target t;
    t.name = "expcos";
    t.series = expcos_series();
    t.fn = [](double x) { return std::exp(std::cos(2.0 * M_PI * x)); };
    return t;
}

Target make_file_target(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open target file: " + path);
    Target t;
    t.name = path;
    t.series = series_from_csv(in);
    CosineSeries copy = t.series;
    t.fn = [copy](double x) { return eval_series(copy, x); };
    return t;
}

namespace {

void append_level_warnings(OutputRecord& rec, const std::vector<LevelReport>& reports,
                           const std::string& tag) {
    for (const auto& rep : reports) {
        if (rep.roundoff_dominated)
            rec.warnings.push_back(tag + "p=" + std::to_string(rep.p) + " roundoff-dominated");
    }
    if (!reports.empty() && reports.back().spilled_mass > 1e-20)
        rec.warnings.push_back(tag + "spilled_mass=" + format_sci(reports.back().spilled_mass));
}

}  // namespace

OutputRecord cmd_table1(const EvalSpec& spec) {
    // Level-one spacings matching how the reference table was produced:
    // the single-mode c_1 run and the exp(cos) run refine from h = 1/2,
    // the c_9 run starts from integer sampling (h = 1).
    constexpr int kLevels = 10;
    RunConfig cfg_c1{1, kLevels, RunMode::spectral, spec};
    RunConfig cfg_c9{0, kLevels, RunMode::spectral, spec};
    RunConfig cfg_f{1, kLevels, RunMode::spectral, spec};

    const auto c1 = multilevel_spectral(CosineSeries::mode(1), cfg_c1);
    const auto c9 = multilevel_spectral(CosineSeries::mode(9), cfg_c9);
    const auto f = multilevel_spectral(expcos_series(), cfg_f);
    const auto mp = mp_sequence(kLevels, MpVariant::table_consistent);

    OutputRecord rec;
    rec.command = "table1";
    rec.params = {{"levels", std::to_string(kLevels)},
                  {"l0_c1", "1"},
                  {"l0_c9", "0"},
                  {"l0_expcos", "1"}};
    rec.columns = {"p", "c1_sup", "c9_sup", "m_p", "expcos_sup"};
    for (int p = 1; p <= kLevels; ++p) {
        const size_t i = static_cast<size_t>(p - 1);
        rec.rows.push_back({static_cast<long>(p), c1[i].sup_error, c9[i].sup_error, mp[i],
                            f[i].sup_error});
    }
    append_level_warnings(rec, c1, "c1: ");
    append_level_warnings(rec, c9, "c9: ");
    append_level_warnings(rec, f, "expcos: ");
    return rec;
}

OutputRecord cmd_single(const Target& target, int ell0, int levels, RunMode mode,
                        const EvalSpec& spec, bool early_stop) {
    if (levels < 1) throw std::invalid_argument("requires levels >= 1");
    if (mode == RunMode::spectral && levels > 24)
        throw std::invalid_argument("requires levels <= 24 in spectral mode");
    if (mode == RunMode::sampled && levels > 12)
        throw std::invalid_argument("requires levels <= 12 in sampled mode");

    RunConfig cfg{ell0, levels, mode, spec, early_stop};
    const std::vector<LevelReport> reports = mode == RunMode::spectral
                                                 ? multilevel_spectral(target.series, cfg)
                                                 : multilevel_sampled(target.fn, cfg);

    OutputRecord rec;
    rec.command = "single";
    rec.params = {{"target", target.name},
                  {"l0", std::to_string(ell0)},
                  {"levels", std::to_string(levels)},
                  {"mode", mode == RunMode::spectral ? "spectral" : "sampled"}};
    rec.columns = {"p", "spacing", "sup_error", "wiener_error", "ratio"};
    for (size_t i = 0; i < reports.size(); ++i) {
        const LevelReport& rep = reports[i];
        Cell wiener = rep.wiener_error ? Cell(*rep.wiener_error) : Cell(std::monostate{});
        Cell ratio = std::monostate{};
        if (i > 0 && reports[i - 1].sup_error > 0.0)
            ratio = rep.sup_error / reports[i - 1].sup_error;
        rec.rows.push_back(
            {static_cast<long>(rep.p), rep.spacing, rep.sup_error, wiener, ratio});
    }
    append_level_warnings(rec, reports, "");
    return rec;
}

OutputRecord cmd_coeffs(int m, int ell, int levels, const EvalSpec& spec) {
    if (levels < 1 || levels > 8) throw std::invalid_argument("requires 1 <= levels <= 8");
    // init_truncation re-checks, but fail early with the exact message
    if (ell < 2) throw std::invalid_argument("requires ell >= 2");
    if (m < 0 || m >= (1 << (ell - 1))) throw std::invalid_argument("requires m < 2^{ell-1}");

    std::vector<double> discrepancy;
    verify_truncation(m, ell, levels, spec, &discrepancy);

    OutputRecord rec;
    rec.command = "coeffs";
    rec.params = {{"m", std::to_string(m)},
                  {"ell", std::to_string(ell)},
                  {"levels", std::to_string(levels)}};
    rec.columns = {"p", "j", "alpha_bar_j", "alpha_j", "truncation_norm", "remainder_budget",
                   "discrepancy"};

    TruncationState state = init_truncation(m, ell);
    for (int p = 1; p <= levels; ++p) {
        if (p > 1) state = step_truncation(state);
        const double norm = truncation_norm(state);
        for (size_t j = 0; j < state.alpha.size(); ++j) {
            rec.rows.push_back({static_cast<long>(p), static_cast<long>(j), state.alpha_bar[j],
                                state.alpha[j], norm, state.remainder_budget,
                                discrepancy[static_cast<size_t>(p - 1)]});
        }
    }
    return rec;
}

OutputRecord cmd_bounds(int pmax) {
    if (pmax < 3 || pmax > 8) throw std::invalid_argument("requires 3 <= pmax <= 8");
    static constexpr std::pair<int, int> kMatrix[] = {{1, 2}, {1, 3}, {3, 3}, {0, 2}, {5, 4}};

    OutputRecord rec;
    rec.command = "bounds";
    rec.params = {{"pmax", std::to_string(pmax)}};
    rec.columns = {"item", "value", "checked", "violations"};

    const BoundConstants c = bound_constants();
    const auto constant = [&rec](const std::string& name, double v) {
        rec.rows.push_back({name, v, std::monostate{}, std::monostate{}});
    };
    constant("a", c.a);
    constant("a_minus_1", c.a - 1.0);
    constant("A", c.A);
    constant("epsilon", c.epsilon);
    constant("mu_a", c.mu_a);
    constant("mu_b", c.mu_b);
    constant("mu_c", c.mu_c);
    constant("b", c.b);

    long total_violations = 0;
    for (const auto& [m, ell] : kMatrix) {
        const auto reports = scan_lemma_bounds(m, ell, pmax);
        for (const auto& rep : reports) {
            const std::string item = "scan m=" + std::to_string(m) + " ell=" +
                                     std::to_string(ell) + " " + lemma_name(rep.lemma);
            rec.rows.push_back({item, std::monostate{}, static_cast<long>(rep.checked),
                                static_cast<long>(rep.violations.size())});
            total_violations += static_cast<long>(rep.violations.size());
        }
    }
    if (total_violations > 0)
        rec.warnings.push_back("bound violations found: " + std::to_string(total_violations));
    return rec;
}

OutputRecord cmd_theta(double z, double q) {
    if (!(std::abs(q) < 1.0)) throw std::invalid_argument("requires |q| < 1");
    const double series = theta3_series(z, q);
    const double product = theta3_product(z, q);

    OutputRecord rec;
    rec.command = "theta";
    rec.params = {{"z", format_sci(z)}, {"q", format_sci(q)}};
    rec.columns = {"z", "q", "series", "product", "abs_diff", "E_t"};
    Cell e_t = std::monostate{};
    if (std::abs(q - std::exp(-0.5)) < 1e-12) {
        // q is the Gaussian nome: theta3(pi t, e^{-1/2})/sqrt(2 pi) = E(t) at t = z/pi
        e_t = series / std::sqrt(2.0 * M_PI);
    }
    rec.rows.push_back({z, q, series, product, std::abs(series - product), e_t});
    return rec;
}

OutputRecord cmd_bound_eval(double s, double t, int p, double B) {
    const TheoremBound bound = theorem_bound(s, t, p, 1.0, B);

    OutputRecord rec;
    rec.command = "bound";
    rec.params = {{"s", format_sci(s)},
                  {"t", format_sci(t)},
                  {"p", std::to_string(p)},
                  {"B", format_sci(B)}};
    rec.columns = {"C_t", "D_s", "truncation_term", "tail_term", "epsilon_term", "total"};
    rec.rows.push_back({bound.C_t, bound.D_s, bound.truncation_term, bound.tail_term,
                        bound.epsilon_term, bound.total});
    return rec;
}

}  // namespace mlqi
