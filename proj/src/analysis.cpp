#include "mlqi/analysis.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "mlqi/kernel.hpp"
#include "mlqi/multilevel.hpp"

namespace mlqi {

namespace {

void require_low_freq(int m, int ell) {
    if (ell < 2 || ell > 20) throw std::invalid_argument("requires 2 <= ell <= 20");
    if (m < 0) throw std::invalid_argument("requires m >= 0");
    if (m >= (1 << (ell - 1))) throw std::invalid_argument("requires m < 2^{ell-1}");
}

// T_{h,0} is the identity: the whole weight sits on c_m itself.
TruncationState identity_state(int m, int ell) {
    TruncationState s;
    s.p = 0;
    s.m = m;
    s.ell = ell;
    s.alpha_bar = {0.0};
    s.alpha = {1.0};
    s.remainder_budget = 0.0;
    return s;
}

// Folded cosine coefficients of the truncation: alpha_bar[j] sits at
// |m - (2^p - j) 2^ell|, alpha[j] at m + j 2^ell.
std::map<long, double> truncation_coefficients(const TruncationState& s) {
    std::map<long, double> out;
    const long n1 = 1L << s.ell;
    const long len = 1L << s.p;
    for (long j = 0; j < len; ++j) {
        out[std::labs(s.m - (len - j) * n1)] += s.alpha_bar[static_cast<size_t>(j)];
        out[s.m + j * n1] += s.alpha[static_cast<size_t>(j)];
    }
    return out;
}

}  // namespace

TruncationState init_truncation(int m, int ell) {
    require_low_freq(m, ell);
    const double hm = static_cast<double>(m) / (1 << ell);
    TruncationState s;
    s.p = 1;
    s.m = m;
    s.ell = ell;
    s.alpha_bar = {-psi_hat(hm - 2.0), -psi_hat(hm - 1.0)};
    s.alpha = {1.0 - psi_hat(hm), -psi_hat(hm + 1.0)};
    s.remainder_budget = bound_constants().epsilon;
    return s;
}

TruncationState step_truncation(const TruncationState& s) {
    if (s.p < 1 || static_cast<long>(s.alpha.size()) != (1L << s.p) ||
        s.alpha_bar.size() != s.alpha.size())
        throw std::invalid_argument("step_truncation requires a valid state");
    if (s.p >= 24) throw std::invalid_argument("step_truncation requires p < 24");

    const double hm = static_cast<double>(s.m) / (1 << s.ell);
    const long len = 1L << s.p;
    const double scale = std::ldexp(1.0, -s.p);  // 1 / 2^p

    TruncationState t;
    t.p = s.p + 1;
    t.m = s.m;
    t.ell = s.ell;
    t.alpha_bar.assign(static_cast<size_t>(2 * len), 0.0);
    t.alpha.assign(static_cast<size_t>(2 * len), 0.0);
    for (long j = 0; j < len; ++j) {
        const double sum = s.alpha_bar[static_cast<size_t>(j)] + s.alpha[static_cast<size_t>(j)];
        const double arg = (hm + static_cast<double>(j)) * scale;
        t.alpha_bar[static_cast<size_t>(j)] = -sum * psi_hat(arg - 2.0);
        t.alpha_bar[static_cast<size_t>(len + j)] =
            s.alpha_bar[static_cast<size_t>(j)] - sum * psi_hat(arg - 1.0);
        t.alpha[static_cast<size_t>(j)] = s.alpha[static_cast<size_t>(j)] - sum * psi_hat(arg);
        t.alpha[static_cast<size_t>(len + j)] = -sum * psi_hat(arg + 1.0);
    }
    const BoundConstants c = bound_constants();
    t.remainder_budget = t.p * std::pow(c.A, t.p - 1) * c.epsilon;
    return t;
}

double truncation_norm(const TruncationState& s) {
    double sum = 0.0;
    for (double v : s.alpha_bar) sum += std::abs(v);
    for (double v : s.alpha) sum += std::abs(v);
    return sum;
}

double verify_truncation(int m, int ell, int levels, const EvalSpec& spec,
                         std::vector<double>* per_level) {
    require_low_freq(m, ell);
    if (levels < 1 || levels > 8)
        throw std::invalid_argument("verify_truncation requires 1 <= levels <= 8");
    // the full truncation span has to stay addressable in the residual
    if ((1L << (ell + levels)) + m > spec.max_freq)
        throw std::invalid_argument("requires 2^{ell+levels} + m <= max_freq");

    RunConfig cfg;
    cfg.ell0 = ell;
    cfg.levels = levels;
    cfg.spec = spec;
    const auto reports = multilevel_spectral(CosineSeries::mode(m), cfg);

    if (per_level) per_level->clear();
    double worst = 0.0;
    TruncationState state = init_truncation(m, ell);
    for (int p = 1; p <= levels; ++p) {
        if (p > 1) state = step_truncation(state);
        const auto trunc = truncation_coefficients(state);
        const CosineSeries& res = *reports[static_cast<size_t>(p - 1)].residual;

        double level_worst = 0.0;
        for (int f = 0; f < static_cast<int>(res.coeffs.size()); ++f) {
            const auto it = trunc.find(f);
            const double tv = it == trunc.end() ? 0.0 : it->second;
            level_worst = std::max(level_worst, std::abs(tv - res.coeffs[static_cast<size_t>(f)]));
        }
        for (const auto& [f, tv] : trunc)
            if (f >= static_cast<long>(res.coeffs.size()))
                level_worst = std::max(level_worst, std::abs(tv));

        if (per_level) per_level->push_back(level_worst);
        worst = std::max(worst, level_worst);
    }
    return worst;
}

const char* lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::L3: return "L3";
        case LemmaId::L4: return "L4";
        case LemmaId::L5: return "L5";
        case LemmaId::L6: return "L6";
        case LemmaId::T1Recursion: return "T1-recursion";
    }
    return "?";
}

std::vector<BoundScanReport> scan_lemma_bounds(int m, int ell, int levels) {
    require_low_freq(m, ell);
    if (levels < 1 || levels > 8)
        throw std::invalid_argument("scan_lemma_bounds requires 1 <= levels <= 8");

    std::vector<TruncationState> states;
    states.push_back(identity_state(m, ell));
    states.push_back(init_truncation(m, ell));
    for (int p = 2; p <= levels; ++p) states.push_back(step_truncation(states.back()));

    std::vector<double> norms;
    norms.reserve(states.size());
    for (const auto& s : states) norms.push_back(truncation_norm(s));

    const BoundConstants c = bound_constants();
    const double ph1 = psi_hat(1.0);

    BoundScanReport L3{LemmaId::L3, 0, {}};
    BoundScanReport L4{LemmaId::L4, 0, {}};
    BoundScanReport L5{LemmaId::L5, 0, {}};
    BoundScanReport L6{LemmaId::L6, 0, {}};
    BoundScanReport T1{LemmaId::T1Recursion, 0, {}};

    const auto check = [](BoundScanReport& rep, int p, int j, double lhs, double rhs) {
        ++rep.checked;
        if (lhs > rhs) rep.violations.push_back({p, j, lhs, rhs});
    };

    for (int p = 2; p <= levels; ++p) {
        const auto& cur = states[static_cast<size_t>(p)];
        const auto& prev1 = states[static_cast<size_t>(p - 1)];
        const long half = 1L << (p - 1);
        for (long j = 0; j < half; ++j) {
            const double rhs = (std::abs(prev1.alpha_bar[static_cast<size_t>(j)]) +
                                std::abs(prev1.alpha[static_cast<size_t>(j)])) *
                               ph1;
            check(L3, p, static_cast<int>(j), std::abs(cur.alpha_bar[static_cast<size_t>(j)]), rhs);
            check(L3, p, static_cast<int>(j),
                  std::abs(cur.alpha[static_cast<size_t>(half + j)]), rhs);
        }
        if (p < 3) continue;

        const auto& prev2 = states[static_cast<size_t>(p - 2)];
        const long quarter = 1L << (p - 2);
        for (long j = 0; j < quarter; ++j) {
            const double rhs = c.mu_a * (std::abs(prev2.alpha_bar[static_cast<size_t>(j)]) +
                                         std::abs(prev2.alpha[static_cast<size_t>(j)]));
            check(L4, p, static_cast<int>(j),
                  std::abs(cur.alpha_bar[static_cast<size_t>(half + j)]), rhs);
            check(L4, p, static_cast<int>(j),
                  std::abs(cur.alpha[static_cast<size_t>(quarter + j)]), rhs);
        }

        const auto& prev3 = states[static_cast<size_t>(p - 3)];
        const long eighth = 1L << (p - 3);
        for (long j = 0; j < eighth; ++j) {
            const double base = std::abs(prev3.alpha_bar[static_cast<size_t>(j)]) +
                                std::abs(prev3.alpha[static_cast<size_t>(j)]);
            check(L5, p, static_cast<int>(j),
                  std::abs(cur.alpha_bar[static_cast<size_t>(half + quarter + j)]), c.mu_b * base);
            check(L5, p, static_cast<int>(j),
                  std::abs(cur.alpha[static_cast<size_t>(eighth + j)]), c.mu_b * base);
            check(L6, p, static_cast<int>(j),
                  std::abs(cur.alpha_bar[static_cast<size_t>(half + quarter + eighth + j)]),
                  c.mu_c * base);
            check(L6, p, static_cast<int>(j), std::abs(cur.alpha[static_cast<size_t>(j)]),
                  c.mu_c * base);
        }

        // Three-term norm recursion, with the stated relaxed constants.
        check(T1, p, -1, norms[static_cast<size_t>(p)],
              ph1 * norms[static_cast<size_t>(p - 1)] + 0.0072 * norms[static_cast<size_t>(p - 2)] +
                  0.711 * norms[static_cast<size_t>(p - 3)]);
    }
    return {L3, L4, L5, L6, T1};
}

std::vector<double> mp_sequence(int levels, MpVariant variant) {
    if (levels < 1) throw std::invalid_argument("mp_sequence requires levels >= 1");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(levels));
    if (variant == MpVariant::table_consistent) {
        double prod = 1.0;
        for (int j = 1; j <= levels; ++j) {
            prod *= 1.0 - psi_hat(std::ldexp(1.0, -j));
            out.push_back(prod);
        }
    } else {
        for (int p = 1; p <= levels; ++p) {
            double prod = 1.0;
            for (int j = 0; j < p; ++j) prod *= 1.0 - 2.0 * psi_hat(std::ldexp(1.0, -j));
            prod *= 1.0 - psi_hat(std::ldexp(1.0, -p));
            out.push_back(prod);
        }
    }
    return out;
}

TheoremBound theorem_bound(double s, double t, int p, double f_norm_s, double B) {
    if (!(s >= 1.0)) throw std::invalid_argument("requires s >= 1");
    if (!(t > 0.5 && t < s)) throw std::invalid_argument("requires 1/2 < t < s");
    if (p < 3) throw std::invalid_argument("requires p >= 3");
    if (!(B > 0.0)) throw std::invalid_argument("requires B > 0");
    if (!(f_norm_s >= 0.0)) throw std::invalid_argument("requires f_norm_s >= 0");

    const BoundConstants c = bound_constants();

    // C(t)^2 = sum_{k >= 2^{p-2}} k^{-2t}: partial sum to 10^6, then the
    // integral bound int_N^inf x^{-2t} dx = N^{1-2t}/(2t-1).
    const double k0 = std::ldexp(1.0, p - 2);
    double csq = 0.0;
    constexpr double kSumCap = 1e6;
    if (k0 <= kSumCap) {
        for (double k = k0; k <= kSumCap; k += 1.0) csq += std::pow(k, -2.0 * t);
        csq += std::pow(kSumCap, 1.0 - 2.0 * t) / (2.0 * t - 1.0);
    } else {
        csq = std::pow(k0 - 1.0, 1.0 - 2.0 * t) / (2.0 * t - 1.0);
    }
    const double C_t = std::sqrt(csq);

    double dsq = 0.0;
    for (int l = 0; l <= p - 3; ++l)
        dsq += std::pow(0.9, -2.0 * l - 4.0) * std::pow(2.0, -2.0 * l * (s - 0.5));
    const double D_s = std::sqrt(dsq);

    TheoremBound out;
    out.C_t = C_t;
    out.D_s = D_s;
    out.truncation_term = 31.0 * B * (1.0 + D_s) * std::pow(0.9, p) * f_norm_s;
    out.tail_term = C_t * std::pow(c.A, p) * std::pow(2.0, -(p - 2.0) * (s - t)) * f_norm_s;
    out.epsilon_term =
        (2.0 / std::sqrt(3.0)) * std::pow(p, 1.5) * std::pow(c.A, p) * c.epsilon * f_norm_s;
    out.total = out.truncation_term + out.tail_term + out.epsilon_term;
    return out;
}

namespace {

// Residual after q refinement levels starting at spacing 1/2^{ell0},
// applied to an arbitrary series (q = 0 is the identity).
CosineSeries multilevel_residual(CosineSeries f, int ell0, int q, const EvalSpec& spec) {
    for (int p = 1; p <= q; ++p) f = f - qi_spectral(f, ell0 + p - 1, spec).series;
    return f;
}

}  // namespace

double highfreq_identity_check(int ell, int n, int p, const EvalSpec& spec) {
    if (ell < 0 || ell > 20) throw std::invalid_argument("requires 0 <= ell <= 20");
    if (n < 0 || n >= (1 << ell)) throw std::invalid_argument("requires 0 <= n < 2^ell");
    if (p < 1 || p > ell + 4) throw std::invalid_argument("requires 1 <= p <= ell + 4");

    const int m = (1 << ell) + n;
    const CosineSeries lhs = multilevel_residual(CosineSeries::mode(m), 0, p, spec);

    CosineSeries rhs;
    if (p <= ell + 1) {
        rhs = CosineSeries::mode(m);
        for (int j = 0; j < p; ++j) {
            const int mode = n % (1 << j);
            CosineSeries term = qi_spectral(CosineSeries::mode(mode), j, spec).series;
            term = multilevel_residual(term, j + 1, p - 1 - j, spec);
            rhs = rhs - term;
        }
    } else {
        rhs = multilevel_residual(CosineSeries::mode(m), ell + 2, p - (ell + 2), spec);
        CosineSeries half = qi_spectral(CosineSeries::mode(m), ell + 1, spec).series;
        rhs = rhs - multilevel_residual(half, ell + 2, p - (ell + 2), spec);
        for (int j = 0; j <= ell; ++j) {
            const int mode = n % (1 << j);
            CosineSeries term = qi_spectral(CosineSeries::mode(mode), j, spec).series;
            term = multilevel_residual(term, j + 1, p - (j + 1), spec);
            rhs = rhs - term;
        }
    }

    const CosineSeries diff = lhs - rhs;
    double worst = 0.0;
    for (double c : diff.coeffs) worst = std::max(worst, std::abs(c));
    return worst;
}

}  // namespace mlqi
