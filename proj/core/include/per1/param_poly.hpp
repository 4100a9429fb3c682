#pragma once

#include <utility>
#include <vector>

#include "per1/poly.hpp"

namespace per1 {

inline constexpr int kDefaultNMax = 14;

/// F_t^n(sign*1, 1) = (P_n(t), Q_n(t)) by exact substitution
/// F_t(P, Q) = (lambda P Q, P^2 + t P Q + Q^2).
/// deg P_n = 2^{n-1} - 1 and deg Q_n = 2^{n-1}.
std::pair<RatPoly, RatPoly> iterate_param_poly(const GaussRat& lambda, int n, int sign = +1,
                                               int n_max = kDefaultNMax);

/// Partial sum s_j = 1 + lambda + ... + lambda^j.
GaussRat partial_sum(const GaussRat& lambda, long j);

/// Coefficient sequences of F_n^+(1,s) = (s B_n + s^2 A_n + O(s^3),
///                                        C_n + s D_n + O(s^2)),
/// with the reduced sequences A*_n, D*_n from the product decomposition.
struct CoeffSeq {
    std::vector<GaussRat> B, C, A, D, Astar, Dstar;  // index i holds X_{i+1}
    int n = 0;

    const GaussRat& B_at(int k) const { return B.at(k - 1); }
    const GaussRat& C_at(int k) const { return C.at(k - 1); }
    const GaussRat& A_at(int k) const { return A.at(k - 1); }
    const GaussRat& D_at(int k) const { return D.at(k - 1); }
    const GaussRat& Astar_at(int k) const { return Astar.at(k - 1); }
    const GaussRat& Dstar_at(int k) const { return Dstar.at(k - 1); }
};

/// Recursions seeded B1 = lambda, C1 = 1, A1 = 0, D1 = 2, A*1 = 0, D*1 = 2;
/// the closed forms for B_n and C_n are verified internally for n >= 3.
CoeffSeq coeff_sequences(const GaussRat& lambda, int n);

GaussRat closed_form_B(const GaussRat& lambda, int n);  // n >= 3
GaussRat closed_form_C(const GaussRat& lambda, int n);  // n >= 1

}  // namespace per1
