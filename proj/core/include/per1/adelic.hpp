#pragma once

#include <complex>
#include <vector>

#include "per1/escape.hpp"
#include "per1/places.hpp"
#include "per1/preperiodic.hpp"

namespace per1 {

/// gamma_v(lambda) = 1/2 sum_{i>=1} 2^{-i} log|1+...+lambda^i|_v with a
/// certified tail <= tol.  Exact shortcuts: |lambda|_p < 1 gives 0,
/// |lambda|_p > 1 gives log|lambda|_p.  Throws root_of_unity for lambda = -1.
double gamma_v(const BigRat& lambda, const Place& v, double tol);

/// log Cap(K_v) = -2 log|lambda|_v - 3 sum_j 4^{-j-1} log|s_j|_v, certified.
double log_capacity_at(const BigRat& lambda, const Place& v, double tol);

struct GlobalSum {
    double value = 0.0;
    double tail = 0.0;  // rounding envelope; the mathematical tail is 0 per index
    int terms = 0;
};

/// sum_v N_v gamma_v(lambda), evaluated as sum_i (1/2) 2^{-i} sum_v log|s_i|_v
/// with each inner sum exactly zero by the product formula (only the
/// archimedean place and primes dividing the numerator/denominator of s_i
/// contribute).
GlobalSum global_gamma_sum(const BigRat& lambda, int truncation);

/// Same interchange for sum_v N_v log Cap(K_v).
GlobalSum global_capacity_sum(const BigRat& lambda, int truncation);

struct LocalHeight {
    Place place;
    double value = 0.0;
    double certified_tail = 0.0;
    bool exact = false;  // value is exact (good reduction / shortcut)
};

/// H^sign_{lambda,v}(t): archimedean places delegate to escape_rate;
/// |lambda|_p = 1 with |t|_p <= 1 is 0 exactly (good reduction, Res = lambda^2);
/// otherwise truncated-precision p-adic iteration of F_t with the certified
/// non-archimedean geometric tail.  Working precision is raised and the
/// computation retried on internal cancellation, up to a budget.
LocalHeight local_height(const BigRat& lambda, const BigRat& t, const Place& v, Sign sign,
                         double tol);

struct HeightPlaceEntry {
    Place place;
    PlaceClass cls;
    double gamma_v = 0.0;
    double local_height = 0.0;
    double tail = 0.0;
    double outer_radius_bound = 0.0;  // e^{-2 gamma_v - log(c)/2^{n-1}} for class Mn
};

struct HeightReport {
    BigRat lambda;
    BigRat t;
    Sign sign = Sign::plus;
    std::vector<HeightPlaceEntry> places;
    bool preperiodic = false;
    int period = 0;
    int preperiod = 0;
    double canonical_height = 0.0;
    double tail = 0.0;
    double global_gamma_sum = 0.0;
};

/// hhat^sign(t) = sum over the contributing places (archimedean plus primes
/// dividing num/den of lambda and den of t; all other places vanish by good
/// reduction).  Exactly 0 when the exact orbit is preperiodic.
HeightReport height_report(const BigRat& lambda, const BigRat& t, Sign sign, double tol = 1e-10);

double canonical_height(const BigRat& lambda, const BigRat& t, Sign sign, double tol = 1e-10);

/// Archimedean Arakelov-Green pairing
///   g(x,y) = -log|x~ ^ y~| + G(x~) + G(y~) + log Cap(K),
/// independent of the choice of lifts; infinite points lift to (1,0).
double arakelov_green_arch(const ExtComplex& x, const ExtComplex& y, cplx lambda, Sign sign,
                           double tol = 1e-10);

/// Quasi-adelic height of a finite set: 2 [k:Q] * mean canonical height
/// (k = Q here).
double quasi_adelic_height(const std::vector<BigRat>& S, const BigRat& lambda, Sign sign,
                           double tol = 1e-10);

/// The pairwise-energy form of the same height, evaluated from the
/// Arakelov-Green pairing over the contributing places; used as the
/// cross-check oracle for quasi_adelic_height (|S| >= 2).
double pairwise_energy_height(const std::vector<BigRat>& S, const BigRat& lambda, Sign sign,
                              double tol = 1e-10);

}  // namespace per1
