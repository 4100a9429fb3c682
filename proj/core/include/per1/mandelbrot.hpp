#pragma once

#include <complex>

namespace per1 {

/// G_M(c) = lim 2^{-n} log+ |p_c^n(c)| for p_c(z) = z^2 + c, the escape rate
/// of the critical value.  Members of M (orbit staying within |z| <= 2) give 0
/// exactly; for orbits still bounded at the iteration budget the true value is
/// below tol and 0 is returned.
double mandelbrot_green(std::complex<double> c, double tol);

}  // namespace per1
