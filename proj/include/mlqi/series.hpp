#pragma once

#include <vector>

namespace mlqi {

// Even 1-periodic function represented by a finite cosine series
//   f(x) = sum_{m=0}^{M} coeffs[m] cos(2 pi m x).
// coeffs always holds M+1 entries; trailing zeros are permitted.
struct CosineSeries {
    std::vector<double> coeffs{0.0};

    CosineSeries() = default;
    explicit CosineSeries(std::vector<double> c);

    // Pure cosine mode c_m.
    static CosineSeries mode(int m);

    int max_freq() const { return static_cast<int>(coeffs.size()) - 1; }
    double coeff(int m) const;
    // Grows the series (zero-filled) so that frequency m is addressable.
    double& ensure(int m);
};

CosineSeries operator+(const CosineSeries& f, const CosineSeries& g);
CosineSeries operator-(const CosineSeries& f, const CosineSeries& g);
CosineSeries operator*(double s, const CosineSeries& f);

// Samples of a 1-periodic function on the dyadic grid j/2^ell.
struct GridSamples {
    int ell = 0;
    std::vector<double> values;  // values[j] = f(j / 2^ell), length 2^ell

    int n() const { return 1 << ell; }
};

// Evaluation controls; the defaults keep every truncation artifact at
// least two decades below double-precision roundoff.
struct EvalSpec {
    double window_R = 14.0;    // kernel cutoff radius in grid spacings
    double eta = 1e-40;        // spectral weight cutoff
    int max_freq = 1 << 16;    // output frequency cap
    int eval_points = 8192;    // sup-norm sample count
};

void validate(const EvalSpec& spec);

// sum_m coeffs[m] cos(2 pi m x); 1-periodic in x.
double eval_series(const CosineSeries& f, double x);

GridSamples sample(const CosineSeries& f, int ell);

// Stationary quasi-interpolant of periodic samples s, evaluated at x:
//   Q f(x) = sum_l f(h l) psi(x/h - l),  h = 1/n,
// with the sum windowed to |x/h - l| <= window_R.  The neglected tail is
// below 2 sum_{r > R} psi(r) ~ 1e-49 relative at the default R.
double qi_eval_direct(const GridSamples& s, double x, const EvalSpec& spec = {});

struct SpectralQi {
    CosineSeries series;
    double spilled_mass = 0.0;  // |weight| mass discarded past max_freq
};

// Exact frequency-domain form of the same operator on a cosine series:
// each input mode m spawns weight psi_hat(k + m/n) at cosine index
// |m + n k| for every integer k with psi_hat(k + m/n) > eta (n = 2^ell).
// Weights landing on the same folded index accumulate.
SpectralQi qi_spectral(const CosineSeries& f, int ell, const EvalSpec& spec = {});

// l1 norm of the cosine coefficients; dominates the sup norm.
double wiener_norm(const CosineSeries& f);

// max |f((j + 1/2) / N)| over j = 0..N-1.  The half-sample offset avoids
// probing only at interpolation nodes.
double sup_norm_estimate(const CosineSeries& f, const EvalSpec& spec = {});

// Sobolev norm of order s in the all-cosine convention: the coefficient
// of cos(2 pi k x) enters as k^{2s} |fhat_k|^2 (so ||c_k||_s = k^s for
// k >= 1) and the constant term enters unweighted.
double sobolev_norm(const CosineSeries& f, double s);

}  // namespace mlqi
