#include "mlqi/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace mlqi {

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267794;  // 1/sqrt(2 pi)
constexpr double kTwoPiSq = 19.739208802178716;          // 2 pi^2

void require_nome(double q) {
    if (!(std::abs(q) < 1.0))
        throw std::invalid_argument("theta3 requires |q| < 1");
}
}  // namespace

double psi(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double psi_hat(double t) { return std::exp(-kTwoPiSq * t * t); }

double theta3_series(double z, double q, double tail_tol) {
    require_nome(q);
    double sum = 1.0;
    double qp = q;            // q^{l^2}
    double qstep = q * q * q; // q^{2l+1}
    const double q2 = q * q;
    for (int l = 1; l < 100000; ++l) {
        sum += 2.0 * qp * std::cos(2.0 * l * z);
        if (2.0 * std::abs(qp) < tail_tol) break;
        qp *= qstep;
        qstep *= q2;
    }
    return sum;
}

double theta3_product(double z, double q, double tail_tol) {
    require_nome(q);
    const double c2z = std::cos(2.0 * z);
    double prod = 1.0;
    double qodd = q;        // q^{2l-1}
    const double q2 = q * q;
    double qeven = q2;      // q^{2l}
    for (int l = 1; l < 100000; ++l) {
        prod *= (1.0 + 2.0 * qodd * c2z + qodd * qodd) * (1.0 - qeven);
        // each remaining factor differs from 1 by less than this
        if (2.0 * std::abs(qodd) + qodd * qodd + std::abs(qeven) < tail_tol) break;
        qodd *= q2;
        qeven *= q2;
    }
    return prod;
}

double periodized_sum(double t) {
    // psi_hat(u) underflows past |u| ~ 6.15, so after reducing t to
    // [-1/2, 1/2] a window of +-7 shifts captures every nonzero term.
    const double r = t - std::round(t);
    double sum = 0.0;
    for (int l = -7; l <= 7; ++l) sum += psi_hat(l + r);
    return sum;
}

BoundConstants bound_constants() {
    BoundConstants c;
    c.a = 1.0 + 3.0 * psi_hat(1.0);
    c.A = 1.0 + c.a;
    c.epsilon = 2.0 * psi_hat(2.0);
    c.mu_a = psi_hat(0.5) + psi_hat(1.0);
    c.mu_b = c.mu_a + psi_hat(0.25) * (psi_hat(std::sqrt(2.0)) + psi_hat(1.0));
    c.mu_c = (1.0 - psi_hat(0.25)) * (1.0 + psi_hat(1.0) - psi_hat(0.5)) +
             psi_hat(1.5) * (1.0 + psi_hat(1.0));
    c.b = c.mu_b + c.mu_c;
    return c;
}

}  // namespace mlqi
