#include "per1/dynamics.hpp"

#include <cmath>

namespace per1 {

// f(1/z) = f(z), so large arguments can always be folded into the unit disk
// before squaring.  A vanishing denominator with nonzero numerator is a pole.
ExtComplex eval_map(const MapParams& p, const ExtComplex& z) {
    if (z.infinite) return ExtComplex::at(cplx{0.0, 0.0});
    cplx w = z.value;
    if (std::abs(w) > 1.0) w = cplx{1.0, 0.0} / w;
    const cplx den = w * w + p.t * w + cplx{1.0, 0.0};
    const cplx num = p.lambda * w;
    if (den == cplx{0.0, 0.0}) {
        if (num == cplx{0.0, 0.0}) return ExtComplex::at(cplx{0.0, 0.0});  // unreachable: Res = lambda^2 != 0
        return ExtComplex::inf();
    }
    return ExtComplex::at(num / den);
}

ProjPair eval_homogeneous(const MapParams& p, const ProjPair& v) {
    return ProjPair{p.lambda * v.z1 * v.z2, v.z1 * v.z1 + p.t * v.z1 * v.z2 + v.z2 * v.z2};
}

cplx map_derivative(const MapParams& p, cplx z) {
    const cplx den = z * z + p.t * z + cplx{1.0, 0.0};
    return p.lambda * (cplx{1.0, 0.0} - z * z) / (den * den);
}

FixedPointData fixed_point_data(const MapParams& p) {
    const cplx disc = std::sqrt(p.t * p.t - 4.0 * (cplx{1.0, 0.0} - p.lambda));
    const cplx zp = (-p.t + disc) / 2.0;
    const cplx zm = (-p.t - disc) / 2.0;
    FixedPointData fp;
    fp.points = {cplx{0.0, 0.0}, zp, zm};
    fp.multipliers = {p.lambda, (cplx{1.0, 0.0} - zp * zp) / p.lambda,
                      (cplx{1.0, 0.0} - zm * zm) / p.lambda};
    return fp;
}

}  // namespace per1
