#pragma once

#include "per1/escape.hpp"
#include "per1/grid.hpp"

namespace per1 {

struct RenderOptions {
    int max_period = 64;
    int budget = 4000;          // orbit iterations per pixel
    int burn_in = 256;
    double eps_cycle = 1e-9;    // |f^q(z) - z| threshold
    double delta_mult = 1e-3;   // require |(f^q)'| < 1 - delta
    int threads = 0;            // 0: hardware concurrency
};

/// Per-pixel attracting-cycle classification of the signed critical orbit:
/// rate of convergence -log|multiplier| (clamped to [0,12], NaN when no
/// attracting cycle is detected within the budget), the detected period, and
/// the cycle centroid (continuous within one stable component, so the locus
/// shows up as the set of classification edges).
struct RenderResult {
    GridField rate;
    std::vector<int> period;                    // 0 = undetected
    std::vector<std::complex<double>> centroid; // cycle centroid per cell

    int period_at(int ix, int iy) const { return period[static_cast<size_t>(iy) * rate.nx + ix]; }
    std::complex<double> centroid_at(int ix, int iy) const {
        return centroid[static_cast<size_t>(iy) * rate.nx + ix];
    }
};

RenderResult render_bifurcation(cplx lambda, const Window& window, int nx, int ny, Sign sign,
                                const RenderOptions& opt = {});

/// Boolean mask (1.0 / 0.0 grid): undetected cells plus cells whose detected
/// cycle (period or centroid) differs from a 4-neighbor.
GridField locus_mask(const RenderResult& render, double centroid_jump = 0.05);

struct DensityResult {
    GridField density;   // (1/2pi) discrete Laplacian of H^sign, cell density
    GridField potential; // the sampled H field
    double mass = 0.0;   // density integrated over the interior cells
    int negative_cells = 0;  // cells below -tol (flagged, density should be >= 0)
};

/// Bifurcation-measure density mu = (1/2pi) Laplace H^sign on the grid
/// (5-point stencil, boundary cells dropped).
DensityResult measure_density(cplx lambda, const Window& window, int nx, int ny, Sign sign,
                              double tol, int threads = 0);

}  // namespace per1
