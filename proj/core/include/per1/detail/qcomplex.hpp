#pragma once

#include <quadmath.h>

#include <complex>

namespace per1::detail {

// Minimal binary128 complex type for root polishing; the wide exponent range
// (~1e+-4932) absorbs the coefficient spread of high iterates.
struct qcomplex {
    __float128 re = 0, im = 0;

    friend qcomplex operator+(const qcomplex& a, const qcomplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend qcomplex operator-(const qcomplex& a, const qcomplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend qcomplex operator*(const qcomplex& a, const qcomplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend qcomplex operator/(const qcomplex& a, const qcomplex& b) {
        // Smith's algorithm keeps intermediate magnitudes tame.
        if (fabsq(b.re) >= fabsq(b.im)) {
            const __float128 r = b.im / b.re;
            const __float128 d = b.re + b.im * r;
            return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
        }
        const __float128 r = b.re / b.im;
        const __float128 d = b.im + b.re * r;
        return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
    }
};

inline __float128 qabs(const qcomplex& z) { return hypotq(z.re, z.im); }

inline std::complex<double> to_double(const qcomplex& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

inline qcomplex from_double(std::complex<double> z) {
    return {static_cast<__float128>(z.real()), static_cast<__float128>(z.imag())};
}

}  // namespace per1::detail
