#include "per1/capacity.hpp"

#include <cmath>

#include "per1/errors.hpp"
#include "per1/resultant.hpp"

namespace per1 {

CapacityResult capacity_closed_form(std::complex<double> lambda, double tol) {
    if (!(tol > 0.0)) throw error("capacity_closed_form: tol must be positive");
    if (lambda == std::complex<double>{0.0, 0.0}) throw error("capacity_closed_form: lambda must be nonzero");
    const double r = std::abs(lambda);
    if (r == 1.0 && lambda != std::complex<double>{1.0, 0.0})
        throw gamma_divergence("capacity_closed_form: |lambda| = 1 with lambda != 1 cannot be certified");

    // |log|s_j|| <= (j+1) log+|lambda| + Bconst, same term bounds as gamma_arch.
    double Bconst;
    double loglam_pos = std::max(std::log(r), 0.0);
    if (lambda == std::complex<double>{1.0, 0.0}) {
        Bconst = 1.0;  // log|s_j| = log(j+1) <= (j+1)
        loglam_pos = 0.0;
    } else if (r > 1.0) {
        Bconst = std::abs(std::log(std::abs(lambda - std::complex<double>{1.0, 0.0}))) + std::log(2.0);
    } else {
        const double d = std::abs(std::complex<double>{1.0, 0.0} - lambda);
        Bconst = std::max(std::log(2.0 / d), std::abs(std::log((1.0 - r) / d)));
    }

    double log_cap = -2.0 * std::log(r);
    std::complex<double> part{1.0, 0.0}, pw{1.0, 0.0};
    const double big = 1e100;
    for (int j = 1; j < 2000; ++j) {
        double log_sj;
        if (std::abs(pw) < big && std::abs(part) < big) {
            pw *= lambda;
            part += pw;
            log_sj = std::log(std::abs(part));
        } else {
            // |lambda|>1 far regime: log|s_j| = (j+1)log|lambda| - log|lambda-1| + o(1)
            log_sj = (j + 1) * std::log(r) - std::log(std::abs(lambda - std::complex<double>{1.0, 0.0}));
        }
        log_cap += -3.0 * std::pow(4.0, -(j + 1)) * log_sj;
        // tail <= sum_{i>j} 3*4^{-i-1} ((i+1) loglam_pos + (i+1) Bconst') with
        // the crude (i+1) envelope for the lambda=1 log(i+1) case folded in.
        const double tail = std::pow(4.0, -j) * ((j + 3) * (loglam_pos + Bconst));
        if (tail <= tol)
            return {std::exp(log_cap), log_cap, tail, j};
    }
    throw non_convergence("capacity_closed_form: tail did not clear tol");
}

CapacityResult capacity_resultant_limit(const GaussRat& lambda, int n, int n_max) {
    const GaussRat res = resultant_recursive(lambda, n, n_max);
    const double d = std::ldexp(1.0, n - 1);
    const double log_cap = -log_abs(res) / (d * d);
    return {std::exp(log_cap), log_cap, 0.0, n};
}

}  // namespace per1
