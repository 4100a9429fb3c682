#pragma once

#include "per1/param_poly.hpp"
#include "per1/poly.hpp"

namespace per1 {

/// Resultant of the homogenizations of P and Q to the declared degrees
/// (defaults: the actual degrees), as the determinant of the Sylvester
/// matrix computed by fraction-free (Bareiss) elimination over Z[i] after
/// clearing denominators.  Zero iff the two forms share a projective root.
GaussRat sylvester_resultant(const RatPoly& P, const RatPoly& Q, long declared_deg_p = -1,
                             long declared_deg_q = -1);

/// Res(F_n) for F_n = (t2 * hom(P_n), hom(Q_n)), both homogenized to degree
/// 2^{n-1}, straight from the Sylvester determinant.
GaussRat resultant_of_iterate(const GaussRat& lambda, int n, int n_max = kDefaultNMax);

/// Res(F_n) by the exact closed form
///   Res(F_1) = -lambda,  Res(F_2) = lambda^6 (1+lambda),
///   Res(F_n) = lambda^{2*4^{n-1}-2^{n-1}} s_{n-1} prod_{j=1}^{n-2} s_j^{3*4^{n-2-j}},
/// with the recursion Res(F_{n+1}) = (s_n/s_{n-1}) lambda^{2^n} Res(F_n)^4
/// checked internally.
GaussRat resultant_recursive(const GaussRat& lambda, int n, int n_max = kDefaultNMax);

}  // namespace per1
