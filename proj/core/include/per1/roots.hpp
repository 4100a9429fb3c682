#pragma once

#include <complex>
#include <vector>

#include "per1/detail/qcomplex.hpp"
#include "per1/poly.hpp"

namespace per1 {

struct PolyRoot {
    std::complex<double> z;
    detail::qcomplex zq;    // the root at working (binary128) precision
    int multiplicity = 1;
    double residual = 0.0;  // relative backward error |p(z)| / sum |a_i||z|^i
};

struct RootSolveOptions {
    int max_sweeps = 120;
    double cluster_radius = 1e-6;  // scaled by max(1, |root|)
    double residual_target = 1e-12;
};

struct PolyRoots {
    std::vector<PolyRoot> roots;  // multiplicity-weighted count == degree
    bool verified = true;         // all residuals at target
    int sweeps = 0;
};

/// All complex roots of an exact polynomial: Aberth-Ehrlich simultaneous
/// iteration in binary128 with Newton-polygon initial radii, Newton polish,
/// and multiplicity clustering.
PolyRoots solve_roots(const RatPoly& p, const RootSolveOptions& opt = {});

}  // namespace per1
