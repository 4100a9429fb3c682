#pragma once

#include <vector>

#include "per1/escape.hpp"
#include "per1/grid.hpp"
#include "per1/pcf.hpp"

namespace per1 {

struct H12Report {
    double h_plus = 0.0;           // H^+(lambda-2)
    double log_abs_lambda = 0.0;
    double dev_plus = 0.0;         // |H^+ - log|lambda||
    double h_minus = 0.0;          // H^-(lambda-2)
    double gm_value = 0.0;         // G_M(lambda/2 - lambda^2/4)
    double rhs_minus = 0.0;        // G_M/2 + log 2
    double dev_minus = 0.0;
};

/// Both identities H^+(lambda-2) = log|lambda| and
/// H^-(lambda-2) = G_M(c(lambda))/2 + log 2 with c(lambda) = lambda/2 - lambda^2/4.
H12Report verify_H12(cplx lambda, double tol);

/// sqrt(2 (5 - 5u - 4u^2 + 4u^3)) at u = cos(theta); equals
/// |c(lambda) (c(lambda) + 1)| for lambda = 2 e^{i theta}, asserted internally.
double claim2_profile(double theta);

struct DistinctMeasureReport {
    double h_plus = 0.0;
    double h_minus = 0.0;
    double gap = 0.0;  // H^-(lambda-2) - H^+(lambda-2), >= 0 for Re lambda <= 1
};

DistinctMeasureReport distinct_measure_report(cplx lambda, double tol = 1e-10);

struct EquidistributionLevel {
    int n = 0;
    int root_count = 0;
    double max_residual = 0.0;
    std::vector<double> potentials;  // u_S at each probe
    PointCloud cloud;
};

struct EquidistributionReport {
    std::vector<EquidistributionLevel> levels;
    std::vector<cplx> probes;
    std::vector<double> successive_diffs;  // max over probes per consecutive pair
    double fitted_offset = 0.0;            // least-squares const in u_S ~ 2H - const
    double raw_error = 0.0;                // max |u_S - 2H| at the last level
    double corrected_error = 0.0;          // after subtracting the fitted offset
};

/// Roots of f_t^n(sign*1) = sign*1 for each n in n_list; discrete potentials
/// u_S(z) = (1/|S|) sum log|z - s| at probe points on |z| = probe_radius,
/// compared across levels and against 2 H^sign(z) - const.
EquidistributionReport equidistribution_experiment(const GaussRat& lambda, Sign sign,
                                                   const std::vector<int>& n_list, int probe_count,
                                                   double probe_radius, unsigned long seed = 1);

}  // namespace per1
