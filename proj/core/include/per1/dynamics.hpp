#pragma once

#include <array>
#include <complex>

namespace per1 {

using cplx = std::complex<double>;

/// One member of Per_1(lambda)^cm: f(z) = lambda z / (z^2 + t z + 1).
struct MapParams {
    cplx lambda;
    cplx t;
};

/// Point of C^2 \ {0}; the norm in use everywhere is max(|z1|, |z2|).
struct ProjPair {
    cplx z1;
    cplx z2;
};

inline double norm_max(const ProjPair& v) {
    return std::max(std::abs(v.z1), std::abs(v.z2));
}

/// C union {infinity}, with infinity an explicit sentinel rather than an
/// overflow convention.
struct ExtComplex {
    cplx value{};
    bool infinite = false;

    static ExtComplex inf() { return {cplx{}, true}; }
    static ExtComplex at(cplx z) { return {z, false}; }
};

ExtComplex eval_map(const MapParams& p, const ExtComplex& z);
ProjPair eval_homogeneous(const MapParams& p, const ProjPair& v);

/// Derivative f'(z) = lambda (1 - z^2) / (z^2 + t z + 1)^2 at a finite point.
cplx map_derivative(const MapParams& p, cplx z);

struct FixedPointData {
    std::array<cplx, 3> points;       // {0, Z+, Z-}
    std::array<cplx, 3> multipliers;  // {lambda, (1-Z+^2)/lambda, (1-Z-^2)/lambda}
};

FixedPointData fixed_point_data(const MapParams& p);

}  // namespace per1
