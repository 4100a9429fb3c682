#include "per1/mandelbrot.hpp"

#include <cmath>

#include "per1/errors.hpp"

namespace per1 {

double mandelbrot_green(std::complex<double> c, double tol) {
    if (!(tol > 0.0)) throw error("mandelbrot_green: tol must be positive");
    // If the orbit is still bounded at step n, the value is at most
    // 2^{-n} * log(4 + |c|) by the functional equation g(p_c(z)) = 2 g(z).
    const double bound_at_rest = std::log(4.0 + std::abs(c));
    int budget = 64;
    while (std::ldexp(bound_at_rest, -budget) > tol && budget < 4096) ++budget;

    std::complex<double> z = c;
    const double esc = std::max(2.0, std::abs(c));
    int n = 0;
    bool escaped = false;
    while (true) {
        z = z * z + c;
        ++n;
        const double az = std::abs(z);
        if (az > 1e100) return std::ldexp(std::log(az), -n);
        if (az > esc) escaped = true;
        if (!escaped && n >= budget) return 0.0;
        if (n >= budget + 4096)
            throw non_convergence("mandelbrot_green: escaping orbit failed to clear 1e100");
    }
}

}  // namespace per1
