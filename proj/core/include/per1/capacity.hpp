#pragma once

#include <complex>

#include "per1/gaussian.hpp"

namespace per1 {

enum class CapacityMode { closed_form, resultant_limit };

struct CapacityResult {
    double value = 0.0;      // Cap(K^+-_lambda)
    double log_value = 0.0;  // natural log
    double tail = 0.0;       // certified truncation tail (closed form mode)
    int n_used = 0;          // truncation index / resultant level
};

/// Cap(K_lambda) = |lambda|^{-2} prod_{j>=1} |1+lambda+...+lambda^j|^{-3*4^{-j-1}},
/// truncated with a certified tail <= tol.  Same gamma certification rules as
/// gamma_arch (throws gamma_divergence on the uncertifiable unit circle).
CapacityResult capacity_closed_form(std::complex<double> lambda, double tol);

/// |Res(F_n)|^{-1/deg(F_n)^2} with the exact resultant at level n.
CapacityResult capacity_resultant_limit(const GaussRat& lambda, int n, int n_max = 14);

}  // namespace per1
