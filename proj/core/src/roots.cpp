#include "per1/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "per1/detail/qcomplex.hpp"
#include "per1/errors.hpp"

namespace per1 {

using detail::qcomplex;

namespace {

double log2_abs(const GaussRat& c) {
    const BigRat n2 = norm_sq(c);
    long en = 0, ed = 0;
    const double dn = mpz_get_d_2exp(&en, n2.get_num().get_mpz_t());
    const double dd = mpz_get_d_2exp(&ed, n2.get_den().get_mpz_t());
    return 0.5 * (std::log2(dn / dd) + static_cast<double>(en - ed));
}

__float128 quad_from_rat(const BigRat& x, long scale2) {
    if (x == 0) return 0;
    double m;
    long e;
    to_scaled_double(x, m, e);
    return ldexpq(static_cast<__float128>(m), static_cast<int>(e - scale2));
}

// Upper convex hull of (i, L_i); returns indices of hull vertices.
std::vector<size_t> upper_hull(const std::vector<std::pair<double, double>>& pts) {
    std::vector<size_t> h;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (h.size() >= 2) {
            const auto& a = pts[h[h.size() - 2]];
            const auto& b = pts[h[h.size() - 1]];
            const auto& c = pts[i];
            const double cross = (b.first - a.first) * (c.second - a.second) -
                                 (b.second - a.second) * (c.first - a.first);
            if (cross >= 0.0) h.pop_back();
            else break;
        }
        h.push_back(i);
    }
    return h;
}

struct QuadPoly {
    std::vector<qcomplex> c;  // low-to-high

    qcomplex eval(const qcomplex& z) const {
        qcomplex acc{0, 0};
        for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
        return acc;
    }
    void eval_both(const qcomplex& z, qcomplex& pz, qcomplex& dpz) const {
        qcomplex acc{0, 0}, dacc{0, 0};
        for (size_t i = c.size(); i-- > 0;) {
            dacc = dacc * z + acc;
            acc = acc * z + c[i];
        }
        pz = acc;
        dpz = dacc;
    }
    __float128 majorant(const qcomplex& z) const {  // sum |a_i| |z|^i
        const __float128 az = qabs(z);
        __float128 acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * az + qabs(c[i]);
        return acc;
    }
};

}  // namespace

PolyRoots solve_roots(const RatPoly& p, const RootSolveOptions& opt) {
    if (p.is_zero()) throw error("solve_roots: zero polynomial");
    PolyRoots out;
    const long deg = p.degree();
    if (deg == 0) return out;

    size_t k0 = 0;
    while (p[k0].is_zero()) ++k0;
    if (k0 > 0)
        out.roots.push_back(PolyRoot{{0.0, 0.0}, qcomplex{0, 0}, static_cast<int>(k0), 0.0});

    const size_t d = static_cast<size_t>(deg) - k0;
    if (d == 0) return out;

    // Center the coefficient magnitudes with an exact power-of-two scale.
    std::vector<double> L(d + 1, 0.0);
    double lmin = 1e300, lmax = -1e300;
    for (size_t i = 0; i <= d; ++i) {
        if (p[k0 + i].is_zero()) continue;
        L[i] = log2_abs(p[k0 + i]);
        lmin = std::min(lmin, L[i]);
        lmax = std::max(lmax, L[i]);
    }
    const long scale2 = std::lround((lmin + lmax) / 2.0);
    if ((lmax - lmin) / 2.0 > 16000.0)
        throw solver_stall("solve_roots: coefficient spread exceeds binary128 range");

    QuadPoly qp;
    qp.c.resize(d + 1);
    for (size_t i = 0; i <= d; ++i) {
        const GaussRat& g = p[k0 + i];
        qp.c[i] = {quad_from_rat(g.re, scale2), quad_from_rat(g.im, scale2)};
    }

    // Newton-polygon initial guesses.
    std::vector<std::pair<double, double>> pts;
    std::vector<size_t> pt_index;
    for (size_t i = 0; i <= d; ++i) {
        if (!p[k0 + i].is_zero()) {
            pts.push_back({static_cast<double>(i), L[i]});
            pt_index.push_back(i);
        }
    }
    const auto hull = upper_hull(pts);
    std::vector<qcomplex> z;
    z.reserve(d);
    int segment = 0;
    for (size_t h = 0; h + 1 < hull.size(); ++h, ++segment) {
        const auto& a = pts[hull[h]];
        const auto& b = pts[hull[h + 1]];
        const int count = static_cast<int>(b.first - a.first);
        const double log2r = (a.second - b.second) / (b.first - a.first);
        const double r = std::exp2(std::clamp(log2r, -300.0, 300.0));
        for (int j = 0; j < count; ++j) {
            const double th = 2.0 * M_PI * (j + 0.26) / count + 0.53 * segment;
            z.push_back(detail::from_double(std::polar(r, th)));
        }
    }
    while (z.size() < d) z.push_back(detail::from_double({1.0 + 0.1 * z.size(), 0.7}));

    // Aberth-Ehrlich sweeps.
    const __float128 eps_rel = 1e-30Q;
    std::vector<bool> done(d, false);
    for (out.sweeps = 1; out.sweeps <= opt.max_sweeps; ++out.sweeps) {
        bool all = true;
        for (size_t k = 0; k < d; ++k) {
            if (done[k]) continue;
            qcomplex pz, dpz;
            qp.eval_both(z[k], pz, dpz);
            if (qabs(pz) == 0) {
                done[k] = true;
                continue;
            }
            const qcomplex N = pz / dpz;
            qcomplex sum{0, 0};
            for (size_t j = 0; j < d; ++j) {
                if (j == k) continue;
                qcomplex diff = z[k] - z[j];
                if (qabs(diff) == 0) diff = {1e-20Q, 1e-20Q};
                sum = sum + qcomplex{1, 0} / diff;
            }
            const qcomplex w = N / (qcomplex{1, 0} - N * sum);
            z[k] = z[k] - w;
            if (qabs(w) <= eps_rel * qabs(z[k]) + 1e-4000Q) done[k] = true;
            else all = false;
        }
        if (all) break;
    }

    // Newton polish.
    for (size_t k = 0; k < d; ++k) {
        for (int it = 0; it < 4; ++it) {
            qcomplex pz, dpz;
            qp.eval_both(z[k], pz, dpz);
            if (qabs(pz) == 0 || qabs(dpz) == 0) break;
            const qcomplex w = pz / dpz;
            if (qabs(w) > qabs(z[k]) * 0.5Q + 1.0Q) break;  // diverging; keep Aberth value
            z[k] = z[k] - w;
        }
    }

    // Multiplicity clustering, then per-cluster residuals.
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) {
            const double scale = std::max(1.0, static_cast<double>(qabs(z[i])));
            if (static_cast<double>(qabs(z[i] - z[j])) < opt.cluster_radius * scale)
                parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
        }
    std::vector<std::vector<size_t>> clusters(d);
    for (size_t i = 0; i < d; ++i) clusters[static_cast<size_t>(find(static_cast<int>(i)))].push_back(i);

    for (const auto& cl : clusters) {
        if (cl.empty()) continue;
        qcomplex mean{0, 0};
        for (size_t i : cl) mean = mean + z[i];
        mean = mean / qcomplex{static_cast<__float128>(cl.size()), 0};
        const __float128 maj = qp.majorant(mean);
        const double resid = maj == 0 ? 0.0 : static_cast<double>(qabs(qp.eval(mean)) / maj);
        out.roots.push_back(PolyRoot{detail::to_double(mean), mean, static_cast<int>(cl.size()), resid});
        if (resid > opt.residual_target && cl.size() == 1) out.verified = false;
    }
    return out;
}

}  // namespace per1
