#pragma once

#include <functional>
#include <string>

#include "mlqi/multilevel.hpp"
#include "mlqi/output.hpp"
#include "mlqi/series.hpp"

namespace mlqi {

// Cosine coefficients of exp(cos 2 pi x): trapezoidal quadrature on 2^14
// uniform samples, truncated at frequency 40 (the true coefficients are
// below 1e-30 well before that).
CosineSeries expcos_series();

// A named approximation target: its cosine series plus, when available,
// an analytic callback for black-box (sampled) runs.
struct Target {
    std::string name;
    CosineSeries series;
    std::function<double(double)> fn;
};

Target make_cosine_target(int m);                 // "c<m>"
Target make_expcos_target();                      // "expcos"
Target make_file_target(const std::string& path); // cosine-series CSV file

OutputRecord cmd_table1(const EvalSpec& spec = {});
OutputRecord cmd_single(const Target& target, int ell0, int levels, RunMode mode,
                        const EvalSpec& spec = {}, bool early_stop = false);
OutputRecord cmd_coeffs(int m, int ell, int levels, const EvalSpec& spec = {});
OutputRecord cmd_bounds(int pmax);
OutputRecord cmd_theta(double z, double q);
OutputRecord cmd_bound_eval(double s, double t, int p, double B);

}  // namespace mlqi
