#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "per1/escape.hpp"
#include "per1/param_poly.hpp"
#include "per1/roots.hpp"

namespace per1 {

/// Parameter equation f_t^n(sign*1) = f_t^m(sign*1), held as the homogeneous
/// cross product P_n Q_m - P_m Q_n over the exact scalars (content removed).
struct PcfEquation {
    GaussRat lambda;
    int n = 0;
    int m = 0;
    Sign sign = Sign::plus;
    RatPoly poly;
};

PcfEquation build_pcf_equation(const GaussRat& lambda, int n, int m, Sign sign,
                               int n_max = kDefaultNMax);

struct RootSet {
    std::vector<std::complex<double>> roots;  // one entry per root, with multiplicity
    std::vector<int> multiplicities;
    std::vector<double> residuals;  // projective orbit residual per root
    bool verified = true;
};

/// All roots with multiplicity (Aberth-Ehrlich + binary128 Newton polishing);
/// residuals are the projective defect |F^n x F^m| of the defining relation
/// on unit-norm renormalized iterates.
RootSet solve_all_roots(const PcfEquation& eq);

/// Projective residual of f_t^n(sign) = f_t^m(sign) at a parameter value,
/// evaluated in binary128 (the residual of a double-rounded root is dominated
/// by the cross-product conditioning, so certification happens at the
/// solver's working precision).
double orbit_residual(std::complex<double> lambda, std::complex<double> t, int n, int m, Sign sign);
double orbit_residual(std::complex<double> lambda, const detail::qcomplex& t, int n, int m, Sign sign);

/// Period-3 parameter for lambda = -2: the root t0 > 2*sqrt(3) of
/// l(t) = 16(2+t)^2 + 4(2+t)^2(8-t^2) + (8-t^2)^2, certified by
/// |f^3_{-2,t0}(1) - 1| small and f_{-2,t0}(1) != 1.
struct Period3Witness {
    double t0 = 0.0;
    double ell_residual = 0.0;    // |l(t0)|
    double orbit_residual = 0.0;  // |f^3(1) - 1|
    double f1 = 0.0;              // f(1), bounded away from 1
};

Period3Witness period3_witness();

double ell_period3(double t);  // l(t) above

void write_csv(std::ostream& os, const RootSet& roots);
std::string to_json(const PcfEquation& eq, const RootSet& roots);

}  // namespace per1
