#include "per1/pcf.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "per1/detail/qcomplex.hpp"
#include "per1/errors.hpp"
#include "per1/param_poly.hpp"

#include "json.hpp"

namespace per1 {

PcfEquation build_pcf_equation(const GaussRat& lambda, int n, int m, Sign sign, int n_max) {
    if (lambda.is_zero()) throw error("build_pcf_equation: lambda must be nonzero");
    if (!(0 <= m && m < n)) throw error("build_pcf_equation: need 0 <= m < n");
    if (n > n_max) throw budget_exceeded("build_pcf_equation: n exceeds N_max");

    const int s = sign_value(sign);
    const auto [Pn, Qn] = iterate_param_poly(lambda, n, s, n_max);
    RatPoly Pm = RatPoly::constant(GaussRat(BigRat(s)));
    RatPoly Qm = RatPoly::constant(GaussRat(1));
    if (m >= 1) {
        auto pq = iterate_param_poly(lambda, m, s, n_max);
        Pm = std::move(pq.first);
        Qm = std::move(pq.second);
    }
    RatPoly cross = Pn * Qm - Pm * Qn;
    if (cross.is_zero())
        throw degenerate_relation("build_pcf_equation: cross product vanished identically");
    return {lambda, n, m, sign, cross.primitive_part()};
}

double orbit_residual(std::complex<double> lambda, std::complex<double> t, int n, int m, Sign sign) {
    return orbit_residual(lambda, detail::from_double(t), n, m, sign);
}

double orbit_residual(std::complex<double> lambda, const detail::qcomplex& t, int n, int m, Sign sign) {
    using detail::qcomplex;
    const qcomplex lam = detail::from_double(lambda);
    const qcomplex& tt = t;
    qcomplex z1{static_cast<__float128>(sign_value(sign)), 0}, z2{1, 0};
    qcomplex w1, w2;
    for (int k = 0; k <= n; ++k) {
        if (k == m) {
            w1 = z1;
            w2 = z2;
        }
        if (k == n) break;
        const qcomplex a = lam * z1 * z2;
        const qcomplex b = z1 * z1 + tt * z1 * z2 + z2 * z2;
        const __float128 s = std::max(qabs(a), qabs(b));
        if (s == 0) return 1.0;
        z1 = a / qcomplex{s, 0};
        z2 = b / qcomplex{s, 0};
    }
    return static_cast<double>(qabs(z1 * w2 - z2 * w1));
}

RootSet solve_all_roots(const PcfEquation& eq) {
    if (eq.poly.degree() < 1) throw error("solve_all_roots: equation degree must be >= 1");
    const auto pr = solve_roots(eq.poly);
    RootSet out;
    out.verified = pr.verified;
    const std::complex<double> lam = to_complex(eq.lambda);
    for (const auto& r : pr.roots) {
        out.roots.push_back(r.z);
        out.multiplicities.push_back(r.multiplicity);
        out.residuals.push_back(orbit_residual(lam, r.zq, eq.n, eq.m, eq.sign));
    }
    return out;
}

double ell_period3(double t) {
    const double a = 2.0 + t;
    const double b = 8.0 - t * t;
    return 16.0 * a * a + 4.0 * a * a * b + b * b;
}

Period3Witness period3_witness() {
    // l is positive at 2*sqrt(3) (value 16) and negative at 10; bisect, then
    // polish in binary128.
    double lo = 2.0 * std::sqrt(3.0), hi = 10.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ell_period3(mid) > 0.0) lo = mid;
        else hi = mid;
    }
    __float128 t0 = 0.5Q * (static_cast<__float128>(lo) + static_cast<__float128>(hi));
    const auto ell_q = [](__float128 t) {
        const __float128 a = 2.0Q + t;
        const __float128 b = 8.0Q - t * t;
        return 16.0Q * a * a + 4.0Q * a * a * b + b * b;
    };
    const auto dell_q = [](__float128 t) {
        // l'(t) = -12 t^3 - 48 t^2 + 32 t + 192
        return -12.0Q * t * t * t - 48.0Q * t * t + 32.0Q * t + 192.0Q;
    };
    for (int i = 0; i < 6; ++i) t0 = t0 - ell_q(t0) / dell_q(t0);

    Period3Witness w;
    w.t0 = static_cast<double>(t0);
    w.ell_residual = std::fabs(static_cast<double>(ell_q(static_cast<__float128>(w.t0))));
    using detail::qcomplex;
    qcomplex z{1, 0};
    const qcomplex lam{-2, 0};
    const qcomplex tq{static_cast<__float128>(w.t0), 0};
    for (int i = 0; i < 3; ++i) {
        if (i == 1) w.f1 = static_cast<double>(z.re);  // f(1), before the second application
        z = lam * z / (z * z + tq * z + qcomplex{1, 0});
    }
    w.orbit_residual = static_cast<double>(qabs(z - qcomplex{1, 0}));
    return w;
}

void write_csv(std::ostream& os, const RootSet& rs) {
    os << "re,im,multiplicity,residual\n";
    for (size_t i = 0; i < rs.roots.size(); ++i)
        os << rs.roots[i].real() << ',' << rs.roots[i].imag() << ',' << rs.multiplicities[i] << ','
           << rs.residuals[i] << '\n';
}

std::string to_json(const PcfEquation& eq, const RootSet& rs) {
    nlohmann::json j;
    j["lambda"] = to_string(eq.lambda);
    j["n"] = eq.n;
    j["m"] = eq.m;
    j["sign"] = eq.sign == Sign::plus ? "+" : "-";
    j["degree"] = eq.poly.degree();
    j["verified"] = rs.verified;
    auto& arr = j["roots"] = nlohmann::json::array();
    for (size_t i = 0; i < rs.roots.size(); ++i)
        arr.push_back({{"re", rs.roots[i].real()},
                       {"im", rs.roots[i].imag()},
                       {"multiplicity", rs.multiplicities[i]},
                       {"residual", rs.residuals[i]}});
    return j.dump(2);
}

}  // namespace per1
