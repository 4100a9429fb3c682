#pragma once

#include <complex>
#include <optional>
#include <string>

#include "per1/rational.hpp"

namespace per1 {

/// Gaussian rational a + b*i with exact rational parts.  This is the exact
/// scalar for all symbolic paths; rational lambda is the b = 0 case.
struct GaussRat {
    BigRat re;
    BigRat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(BigRat r) : re(std::move(r)), im(0) {}
    GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) = default;

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b);

    GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
    GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
    GaussRat& operator/=(const GaussRat& b) { return *this = *this / b; }
};

BigRat norm_sq(const GaussRat& x);  // re^2 + im^2
GaussRat conj(const GaussRat& x);
GaussRat pow_gauss(const GaussRat& x, long e);

double log_abs(const GaussRat& x);  // log sqrt(re^2+im^2), exact-mantissa based
std::complex<double> to_complex(const GaussRat& x);

/// Parse "2", "-4", "1/2", "1.1i", "3/2+1/2i", "0.3-0.4i", "i", "-i".
std::optional<GaussRat> parse_gauss(const std::string& s);
std::string to_string(const GaussRat& x);

}  // namespace per1
