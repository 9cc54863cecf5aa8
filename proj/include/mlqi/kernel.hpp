#pragma once

namespace mlqi {

// Gaussian kernel psi(x) = exp(-x^2/2) / sqrt(2 pi).
double psi(double x);

// Fourier transform of psi: psi_hat(t) = exp(-2 pi^2 t^2).
// Underflows to 0 for |t| >~ 6; callers treat 0 as a valid weight.
double psi_hat(double t);

// Jacobi theta_3(z, q) = 1 + 2 sum_{l>=1} q^{l^2} cos(2 l z), |q| < 1.
// The series is cut once 2|q|^{l^2} < tail_tol; the dropped tail is
// bounded by tail_tol * |q| / (1 - |q|).
double theta3_series(double z, double q, double tail_tol = 1e-30);

// Same function through the product representation
//   prod_{l>=1} (1 + 2 q^{2l-1} cos 2z + q^{2(2l-1)}) (1 - q^{2l}).
double theta3_product(double z, double q, double tail_tol = 1e-30);

// E(t) = sum_{l in Z} psi_hat(l + t), evaluated by direct summation.
// 1-periodic; equals theta3(pi t, e^{-1/2}) / sqrt(2 pi) by Poisson
// summation, which the tests cross-check.
double periodized_sum(double t);

// Constants of the convergence analysis, all derived from psi_hat.
struct BoundConstants {
    double a;        // 1 + 3 psi_hat(1), norm bound of the quasi-interpolation operator
    double A;        // 1 + a, norm bound of the residual operator
    double epsilon;  // 2 psi_hat(2), per-level remainder tolerance
    double mu_a;     // psi_hat(1/2) + psi_hat(1)
    double mu_b;     // mu_a + psi_hat(1/4) (psi_hat(sqrt 2) + psi_hat(1))
    double mu_c;     // (1 - psi_hat(1/4))(1 + psi_hat(1) - psi_hat(1/2))
                     //   + psi_hat(3/2)(1 + psi_hat(1))
    double b;        // mu_b + mu_c
};

// Computed at call time from psi_hat, never from hard-coded literals.
BoundConstants bound_constants();

}  // namespace mlqi
