#include "mlqi/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "mlqi/kernel.hpp"

namespace mlqi {

CosineSeries::CosineSeries(std::vector<double> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(0.0);
}

CosineSeries CosineSeries::mode(int m) {
    if (m < 0) throw std::invalid_argument("cosine mode requires m >= 0");
    CosineSeries f;
    f.coeffs.assign(static_cast<size_t>(m) + 1, 0.0);
    f.coeffs[static_cast<size_t>(m)] = 1.0;
    return f;
}

double CosineSeries::coeff(int m) const {
    if (m < 0 || m >= static_cast<int>(coeffs.size())) return 0.0;
    return coeffs[static_cast<size_t>(m)];
}

double& CosineSeries::ensure(int m) {
    if (m >= static_cast<int>(coeffs.size()))
        coeffs.resize(static_cast<size_t>(m) + 1, 0.0);
    return coeffs[static_cast<size_t>(m)];
}

CosineSeries operator+(const CosineSeries& f, const CosineSeries& g) {
    CosineSeries r = f.coeffs.size() >= g.coeffs.size() ? f : g;
    const CosineSeries& small = f.coeffs.size() >= g.coeffs.size() ? g : f;
    for (size_t m = 0; m < small.coeffs.size(); ++m) r.coeffs[m] += small.coeffs[m];
    return r;
}

CosineSeries operator-(const CosineSeries& f, const CosineSeries& g) {
    CosineSeries r = f;
    r.coeffs.resize(std::max(f.coeffs.size(), g.coeffs.size()), 0.0);
    for (size_t m = 0; m < g.coeffs.size(); ++m) r.coeffs[m] -= g.coeffs[m];
    return r;
}

CosineSeries operator*(double s, const CosineSeries& f) {
    CosineSeries r = f;
    for (double& c : r.coeffs) c *= s;
    return r;
}

void validate(const EvalSpec& spec) {
    if (!(spec.window_R >= 8.0))
        throw std::invalid_argument("EvalSpec requires window_R >= 8");
    if (!(spec.eta >= 0.0 && spec.eta <= 1e-20))
        throw std::invalid_argument("EvalSpec requires 0 <= eta <= 1e-20");
    if (spec.max_freq < 1)
        throw std::invalid_argument("EvalSpec requires max_freq >= 1");
    if (spec.eval_points < 1024)
        throw std::invalid_argument("EvalSpec requires eval_points >= 1024");
}

namespace {

// Clenshaw recurrence for sum_{k=0}^{n} a_k T_k(u) with u = cos(2 pi x).
double clenshaw(const std::vector<double>& a, int n, double u) {
    double b1 = 0.0, b2 = 0.0;
    for (int k = n; k >= 1; --k) {
        const double b0 = a[static_cast<size_t>(k)] + 2.0 * u * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return a[0] + u * b1 - b2;
}

int last_nonzero(const std::vector<double>& a) {
    int n = static_cast<int>(a.size()) - 1;
    while (n > 0 && a[static_cast<size_t>(n)] == 0.0) --n;
    return n;
}

}  // namespace

double eval_series(const CosineSeries& f, double x) {
    const double xr = x - std::floor(x);
    const double u = std::cos(2.0 * M_PI * xr);
    return clenshaw(f.coeffs, last_nonzero(f.coeffs), u);
}

GridSamples sample(const CosineSeries& f, int ell) {
    if (ell < 0 || ell > 26) throw std::invalid_argument("sample requires 0 <= ell <= 26");
    GridSamples g;
    g.ell = ell;
    const int n = g.n();
    g.values.resize(static_cast<size_t>(n));
    const int top = last_nonzero(f.coeffs);
    for (int j = 0; j < n; ++j) {
        const double u = std::cos(2.0 * M_PI * (static_cast<double>(j) / n));
        g.values[static_cast<size_t>(j)] = clenshaw(f.coeffs, top, u);
    }
    return g;
}

double qi_eval_direct(const GridSamples& s, double x, const EvalSpec& spec) {
    validate(spec);
    const int n = s.n();
    const double xr = x - std::floor(x);
    const double t = xr * n;  // x / h
    const long lo = static_cast<long>(std::ceil(t - spec.window_R));
    const long hi = static_cast<long>(std::floor(t + spec.window_R));
    double sum = 0.0;
    for (long l = lo; l <= hi; ++l) {
        const long j = ((l % n) + n) % n;  // samples extend n-periodically
        sum += s.values[static_cast<size_t>(j)] * psi(t - static_cast<double>(l));
    }
    return sum;
}

SpectralQi qi_spectral(const CosineSeries& f, int ell, const EvalSpec& spec) {
    validate(spec);
    if (ell < 0 || ell > 26) throw std::invalid_argument("qi_spectral requires 0 <= ell <= 26");
    const long n = 1L << ell;

    // psi_hat(u) > eta only for |u| < sqrt(-ln eta / (2 pi^2)); eta = 0
    // admits everything down to the underflow edge at |u| ~ 6.15.
    const double umax =
        spec.eta > 0.0 ? std::sqrt(-std::log(spec.eta) / 19.739208802178716) : 6.2;

    SpectralQi out;
    const int top = static_cast<int>(f.coeffs.size()) - 1;
    const int reserve =
        std::min<long>(spec.max_freq, top + n * (static_cast<long>(umax) + 1)) + 1;
    out.series.coeffs.assign(static_cast<size_t>(reserve), 0.0);

    for (int m = 0; m <= top; ++m) {
        const double c = f.coeffs[static_cast<size_t>(m)];
        if (c == 0.0) continue;
        const double r = static_cast<double>(m) / static_cast<double>(n);
        const long klo = static_cast<long>(std::ceil(-umax - r));
        const long khi = static_cast<long>(std::floor(umax - r));
        for (long k = klo; k <= khi; ++k) {
            const double w = psi_hat(static_cast<double>(k) + r);
            if (!(w > spec.eta)) continue;
            const long idx = std::labs(m + n * k);
            if (idx > spec.max_freq)
                out.spilled_mass += std::abs(c * w);
            else
                out.series.ensure(static_cast<int>(idx)) += c * w;
        }
    }
    return out;
}

double wiener_norm(const CosineSeries& f) {
    double sum = 0.0;
    for (double c : f.coeffs) sum += std::abs(c);
    return sum;
}

double sup_norm_estimate(const CosineSeries& f, const EvalSpec& spec) {
    validate(spec);
    const int N = spec.eval_points;
    const int top = last_nonzero(f.coeffs);
    double best = 0.0;
    for (int j = 0; j < N; ++j) {
        const double x = (j + 0.5) / static_cast<double>(N);
        const double v = std::abs(clenshaw(f.coeffs, top, std::cos(2.0 * M_PI * x)));
        if (v > best) best = v;
    }
    return best;
}

double sobolev_norm(const CosineSeries& f, double s) {
    if (!(s >= 0.0)) throw std::invalid_argument("sobolev_norm requires s >= 0");
    double acc = f.coeff(0) * f.coeff(0);
    for (int m = 1; m < static_cast<int>(f.coeffs.size()); ++m) {
        const double c = f.coeffs[static_cast<size_t>(m)];
        if (c != 0.0) acc += std::pow(static_cast<double>(m), 2.0 * s) * c * c;
    }
    return std::sqrt(acc);
}

}  // namespace mlqi
