#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "per1/gaussian.hpp"

namespace per1 {

/// Dense polynomial over the Gaussian rationals, coefficients low-to-high.
/// Invariant: leading coefficient nonzero unless the polynomial is zero
/// (empty coefficient list).
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<GaussRat> coeffs);
    static RatPoly constant(GaussRat c);
    static RatPoly monomial(GaussRat c, size_t deg);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
    const GaussRat& operator[](size_t i) const { return coeffs_[i]; }
    const std::vector<GaussRat>& coeffs() const { return coeffs_; }
    const GaussRat& leading() const;

    GaussRat eval(const GaussRat& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    RatPoly derivative() const;
    RatPoly reversed(size_t declared_degree) const;  // x^d * p(1/x)

    /// Divide by the rational content (gcd of all re/im numerators over the
    /// lcm of denominators); no-op on the zero polynomial.
    RatPoly primitive_part() const;

    /// Remainder of division by a monic divisor.
    RatPoly rem(const RatPoly& monic_divisor) const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly scaled(const GaussRat& c) const;
    friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

    size_t max_coeff_bits() const;  // bit-size telemetry

  private:
    void trim();
    std::vector<GaussRat> coeffs_;
};

}  // namespace per1
