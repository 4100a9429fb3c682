#include "per1/render.hpp"

#include <cmath>
#include <limits>

#include "per1/detail/parallel.hpp"

namespace per1 {

namespace {

constexpr double kFiniteCap = 1e8;  // cycle points beyond this skip multiplier tests

struct PixelClass {
    double rate = std::numeric_limits<double>::quiet_NaN();
    int period = 0;
    cplx centroid{0.0, 0.0};
};

PixelClass classify_pixel(const MapParams& p, Sign sign, const RenderOptions& opt) {
    ExtComplex z = ExtComplex::at(cplx(static_cast<double>(sign_value(sign)), 0.0));
    const int mp = opt.max_period;
    std::vector<ExtComplex> ring(static_cast<size_t>(mp));
    for (int k = 1; k <= opt.budget; ++k) {
        z = eval_map(p, z);
        ring[static_cast<size_t>(k % mp)] = z;
        if (k <= opt.burn_in + mp || k % mp != 0) continue;
        if (z.infinite || std::abs(z.value) > kFiniteCap) continue;
        for (int q = 1; q <= mp; ++q) {
            const ExtComplex& w = ring[static_cast<size_t>(((k - q) % mp + mp) % mp)];
            if (w.infinite) continue;
            if (std::abs(z.value - w.value) >= opt.eps_cycle) continue;
            // candidate period q: walk the cycle once for multiplier and centroid
            cplx mult{1.0, 0.0}, sum{0.0, 0.0};
            ExtComplex c = z;
            bool finite = true;
            for (int i = 0; i < q; ++i) {
                if (c.infinite || std::abs(c.value) > kFiniteCap) {
                    finite = false;
                    break;
                }
                mult *= map_derivative(p, c.value);
                sum += c.value;
                c = eval_map(p, c);
            }
            if (!finite) continue;
            const double am = std::abs(mult);
            if (am < 1.0 - opt.delta_mult) {
                PixelClass out;
                out.rate = am <= 1e-12 ? 12.0 : std::min(-std::log(am), 12.0);
                out.period = q;
                out.centroid = sum / static_cast<double>(q);
                return out;
            }
            break;  // matched an indifferent/repelling shadow; keep iterating
        }
    }
    return {};
}

}  // namespace

RenderResult render_bifurcation(cplx lambda, const Window& window, int nx, int ny, Sign sign,
                                const RenderOptions& opt) {
    RenderResult r;
    r.rate.window = window;
    r.rate.nx = nx;
    r.rate.ny = ny;
    r.rate.values.assign(static_cast<size_t>(nx) * ny, 0.0);
    r.period.assign(static_cast<size_t>(nx) * ny, 0);
    r.centroid.assign(static_cast<size_t>(nx) * ny, cplx{0.0, 0.0});
    detail::parallel_for(ny, opt.threads, [&](int iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const MapParams p{lambda, r.rate.point(ix, iy)};
            const auto pc = classify_pixel(p, sign, opt);
            const size_t idx = static_cast<size_t>(iy) * nx + ix;
            r.rate.values[idx] = pc.rate;
            r.period[idx] = pc.period;
            r.centroid[idx] = pc.centroid;
        }
    });
    return r;
}

GridField locus_mask(const RenderResult& render, double centroid_jump) {
    const int nx = render.rate.nx, ny = render.rate.ny;
    GridField m = render.rate;
    const auto differs = [&](int ax, int ay, int bx, int by) {
        if (render.period_at(bx, by) == 0) return false;  // the neighbor itself is masked
        if (render.period_at(ax, ay) != render.period_at(bx, by)) return true;
        const cplx ca = render.centroid_at(ax, ay), cb = render.centroid_at(bx, by);
        return std::abs(ca - cb) > centroid_jump * (1.0 + std::abs(ca));
    };
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            bool in_mask = render.period_at(ix, iy) == 0;
            if (!in_mask) {
                if (ix > 0) in_mask = in_mask || differs(ix, iy, ix - 1, iy);
                if (ix + 1 < nx) in_mask = in_mask || differs(ix, iy, ix + 1, iy);
                if (iy > 0) in_mask = in_mask || differs(ix, iy, ix, iy - 1);
                if (iy + 1 < ny) in_mask = in_mask || differs(ix, iy, ix, iy + 1);
            }
            m.at(ix, iy) = in_mask ? 1.0 : 0.0;
        }
    return m;
}

DensityResult measure_density(cplx lambda, const Window& window, int nx, int ny, Sign sign,
                              double tol, int threads) {
    DensityResult out;
    out.potential.window = window;
    out.potential.nx = nx;
    out.potential.ny = ny;
    out.potential.values.assign(static_cast<size_t>(nx) * ny, 0.0);
    GridField& H = out.potential;
    const double sample_tol = std::min(1e-12, tol * H.dx() * H.dy() / 100.0);
    detail::parallel_for(ny, threads, [&](int iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const MapParams p{lambda, H.point(ix, iy)};
            H.at(ix, iy) = escape_rate(p, sign, sample_tol).value;
        }
    });

    out.density = H;
    const double dx2 = H.dx() * H.dx(), dy2 = H.dy() * H.dy();
    constexpr double two_pi = 6.283185307179586476925287;
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            if (ix == 0 || iy == 0 || ix == nx - 1 || iy == ny - 1) {
                out.density.at(ix, iy) = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            const double lap = (H.at(ix + 1, iy) + H.at(ix - 1, iy) - 2.0 * H.at(ix, iy)) / dx2 +
                               (H.at(ix, iy + 1) + H.at(ix, iy - 1) - 2.0 * H.at(ix, iy)) / dy2;
            const double d = lap / two_pi;
            out.density.at(ix, iy) = d;
            out.mass += d * H.dx() * H.dy();
            if (d < -tol) ++out.negative_cells;
        }
    return out;
}

}  // namespace per1
