#pragma once

#include <vector>

#include "mlqi/series.hpp"

namespace mlqi {

// Central truncation of the level-p multilevel residual of c_m for a
// level-one spacing h = 1/2^ell.  alpha_bar[j] multiplies the cosine of
// frequency m - (2^p - j)/h and alpha[j] the one of frequency m + j/h,
// j = 0..2^p-1.  The complement of the truncation has Wiener norm at
// most remainder_budget = p A^{p-1} epsilon (~1e-34 scale), tracked as a
// number but never added to coefficients.
struct TruncationState {
    int p = 0;
    int m = 0;
    int ell = 0;
    std::vector<double> alpha_bar;
    std::vector<double> alpha;
    double remainder_budget = 0.0;
};

// Level-one state: alpha_bar = (-psi_hat(hm-2), -psi_hat(hm-1)),
// alpha = (1 - psi_hat(hm), -psi_hat(hm+1)).  Requires ell >= 2 and
// 0 <= m < 2^{ell-1} (m = 0 is the degenerate even case).
TruncationState init_truncation(int m, int ell);

// One refinement step: vectors double in length, with multipliers
// psi_hat((hm + j)/2^p + d), d in {-2, -1, 0, +1}.
TruncationState step_truncation(const TruncationState& s);

// sum_j |alpha_bar[j]| + |alpha[j]|.
double truncation_norm(const TruncationState& s);

// Runs the spectral multilevel engine on c_m and compares its level-p
// residual coefficients against the recursion's, folded to absolute
// frequencies.  Returns the worst absolute discrepancy over p <= levels;
// per_level, when given, receives the per-p maxima.
double verify_truncation(int m, int ell, int levels, const EvalSpec& spec = {},
                         std::vector<double>* per_level = nullptr);

enum class LemmaId { L3, L4, L5, L6, T1Recursion };

struct BoundViolation {
    int p = 0;
    int j = 0;  // -1 for norm-level checks
    double lhs = 0.0;
    double rhs = 0.0;
};

struct BoundScanReport {
    LemmaId lemma{};
    long checked = 0;
    std::vector<BoundViolation> violations;
};

const char* lemma_name(LemmaId id);

// Evaluates the coefficient inequalities (absolute values on both sides)
// and the three-term norm recursion over every admissible (p, j) with
// p <= levels.  Violations are recorded, not thrown.
std::vector<BoundScanReport> scan_lemma_bounds(int m, int ell, int levels);

enum class MpVariant { as_printed, table_consistent };

// Reference decay sequence m_p, p = 1..levels.
//   table_consistent: prod_{j=1..p} (1 - psi_hat(2^-j))
//   as_printed:       (1 - psi_hat(2^-p)) prod_{j=0..p-1} (1 - 2 psi_hat(2^-j))
std::vector<double> mp_sequence(int levels, MpVariant variant);

struct TheoremBound {
    double C_t = 0.0;
    double D_s = 0.0;
    double truncation_term = 0.0;  // 31 B (1 + D(s)) 0.9^p * ||f||_s
    double tail_term = 0.0;        // C(t) A^p 2^{-(p-2)(s-t)} * ||f||_s
    double epsilon_term = 0.0;     // (2/sqrt 3) p^{3/2} A^p epsilon * ||f||_s
    double total = 0.0;
};

// Error bound for a target of Sobolev norm f_norm_s at level p.
// Requires s >= 1, 1/2 < t < s, p >= 3, B > 0.  C(t) is evaluated as an
// explicit partial sum to k = 10^6 plus an integral tail bound.
TheoremBound theorem_bound(double s, double t, int p, double f_norm_s, double B = 10.0);

// For m = 2^ell + n the multilevel residual of c_m admits a closed
// expansion in lower-frequency corrections; this evaluates both sides
// through the spectral engine and returns the worst coefficientwise
// discrepancy.  Requires 0 <= n < 2^ell and 1 <= p <= ell + 4.
double highfreq_identity_check(int ell, int n, int p, const EvalSpec& spec = {});

}  // namespace mlqi
