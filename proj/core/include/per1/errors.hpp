#pragma once

#include <stdexcept>
#include <string>

namespace per1 {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// escape-rate / series iteration ran out of budget before the tail cleared tol
struct non_convergence : error {
    using error::error;
};

// gamma(lambda) tail cannot be certified (unit-modulus lambda != 1)
struct gamma_divergence : error {
    using error::error;
};

// exact iterate index exceeds N_max
struct budget_exceeded : error {
    using error::error;
};

// cross-product P_n Q_m - P_m Q_n vanished identically
struct degenerate_relation : error {
    using error::error;
};

// root solver failed residual targets within budget
struct solver_stall : error {
    using error::error;
};

struct root_of_unity : error {
    using error::error;
};

// p-adic working precision exhausted after all retries
struct precision_exhausted : error {
    using error::error;
};

struct coincident_points : error {
    using error::error;
};

}  // namespace per1
