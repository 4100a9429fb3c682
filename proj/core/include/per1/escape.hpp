#pragma once

#include "per1/dynamics.hpp"

namespace per1 {

enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? +1 : -1; }

struct EscapeRateResult {
    double value = 0.0;       // natural-log units
    int iterations = 0;
    double tail_bound = 0.0;  // |value - limit| <= tail_bound
};

/// H^sign_lambda(t): renormalized homogeneous iteration from (sign*1, 1).
/// Each step rescales to unit max-norm and accumulates 2^{-k} log(scale_k);
/// the stopping rule is the geometric tail derived from the sandwich
/// c/T <= ||F_t z|| / ||z||^2 <= C*T with T = max(|t|,1),
/// c = min(|lambda|/2, 1/4), C = max(|lambda|, 3).
EscapeRateResult escape_rate(const MapParams& p, Sign sign, double tol, int max_iter = 600);

/// gamma(lambda) = 1/2 sum_{i>=1} 2^{-i} log|1 + lambda + ... + lambda^i|,
/// partial sum with certified tail <= tol.  Throws gamma_divergence for
/// unit-modulus lambda != 1.
double gamma_arch(cplx lambda, double tol);

/// G^sign(t1,t2) = 2 H^sign(t1/t2) + log|t2| for t2 != 0, and
/// log|t1| + gamma(lambda) on the line t2 = 0.
double green_homogeneous(cplx lambda, const ProjPair& v, Sign sign, double tol);

}  // namespace per1
