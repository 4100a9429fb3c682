#include "per1/experiments.hpp"

#include <cmath>
#include <random>

#include "per1/errors.hpp"
#include "per1/mandelbrot.hpp"

namespace per1 {

H12Report verify_H12(cplx lambda, double tol) {
    if (lambda == cplx{0.0, 0.0}) throw error("verify_H12: lambda must be nonzero");
    H12Report r;
    const cplx t = lambda - cplx{2.0, 0.0};
    r.h_plus = escape_rate({lambda, t}, Sign::plus, tol).value;
    r.log_abs_lambda = std::log(std::abs(lambda));
    r.dev_plus = std::fabs(r.h_plus - r.log_abs_lambda);
    r.h_minus = escape_rate({lambda, t}, Sign::minus, tol).value;
    const cplx c = lambda / 2.0 - lambda * lambda / 4.0;
    r.gm_value = mandelbrot_green(c, tol);
    r.rhs_minus = 0.5 * r.gm_value + std::log(2.0);
    r.dev_minus = std::fabs(r.h_minus - r.rhs_minus);
    return r;
}

double claim2_profile(double theta) {
    if (theta < M_PI / 3.0 - 1e-12 || theta > 5.0 * M_PI / 3.0 + 1e-12)
        throw error("claim2_profile: theta outside [pi/3, 5pi/3]");
    const double u = std::cos(theta);
    const double g = 5.0 - 5.0 * u - 4.0 * u * u + 4.0 * u * u * u;
    const double closed = std::sqrt(2.0 * g);
    const cplx lambda = 2.0 * std::polar(1.0, theta);
    const cplx c = lambda / 2.0 - lambda * lambda / 4.0;
    const double direct = std::abs(c * (c + cplx{1.0, 0.0}));
    if (std::fabs(direct - closed) > 1e-10 * std::max(1.0, closed))
        throw error("claim2_profile: closed form disagrees with |c(lambda)(c(lambda)+1)|");
    return closed;
}

DistinctMeasureReport distinct_measure_report(cplx lambda, double tol) {
    if (lambda == cplx{0.0, 0.0} || lambda.real() > 1.0)
        throw error("distinct_measure_report: requires Re lambda <= 1, lambda != 0");
    DistinctMeasureReport r;
    const cplx t = lambda - cplx{2.0, 0.0};
    r.h_plus = escape_rate({lambda, t}, Sign::plus, tol).value;
    r.h_minus = escape_rate({lambda, t}, Sign::minus, tol).value;
    r.gap = r.h_minus - r.h_plus;
    return r;
}

EquidistributionReport equidistribution_experiment(const GaussRat& lambda, Sign sign,
                                                   const std::vector<int>& n_list, int probe_count,
                                                   double probe_radius, unsigned long seed) {
    if (n_list.empty()) throw error("equidistribution_experiment: empty n list");
    EquidistributionReport rep;
    std::mt19937_64 rng(seed);
    const double phase = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
    for (int k = 0; k < probe_count; ++k)
        rep.probes.push_back(std::polar(probe_radius, phase + 2.0 * M_PI * k / probe_count));

    for (int n : n_list) {
        const auto eq = build_pcf_equation(lambda, n, 0, sign);
        const auto roots = solve_all_roots(eq);
        EquidistributionLevel lvl;
        lvl.n = n;
        for (size_t i = 0; i < roots.roots.size(); ++i) {
            lvl.root_count += roots.multiplicities[i];
            lvl.max_residual = std::max(lvl.max_residual, roots.residuals[i]);
            for (int m = 0; m < roots.multiplicities[i]; ++m) lvl.cloud.points.push_back(roots.roots[i]);
        }
        for (const auto& z : rep.probes) {
            double u = 0.0;
            for (size_t i = 0; i < roots.roots.size(); ++i)
                u += roots.multiplicities[i] * std::log(std::abs(z - roots.roots[i]));
            lvl.potentials.push_back(u / lvl.root_count);
        }
        rep.levels.push_back(std::move(lvl));
    }

    for (size_t l = 0; l + 1 < rep.levels.size(); ++l) {
        double diff = 0.0;
        for (size_t k = 0; k < rep.probes.size(); ++k)
            diff = std::max(diff,
                            std::fabs(rep.levels[l + 1].potentials[k] - rep.levels[l].potentials[k]));
        rep.successive_diffs.push_back(diff);
    }

    // Compare the finest level against 2 H^sign with a least-squares offset.
    const auto& last = rep.levels.back();
    const cplx lam = to_complex(lambda);
    std::vector<double> twoH(rep.probes.size());
    double offset = 0.0;
    for (size_t k = 0; k < rep.probes.size(); ++k) {
        twoH[k] = 2.0 * escape_rate({lam, rep.probes[k]}, sign, 1e-11).value;
        offset += twoH[k] - last.potentials[k];
    }
    offset /= static_cast<double>(rep.probes.size());
    rep.fitted_offset = offset;
    for (size_t k = 0; k < rep.probes.size(); ++k) {
        rep.raw_error = std::max(rep.raw_error, std::fabs(last.potentials[k] - twoH[k]));
        rep.corrected_error =
            std::max(rep.corrected_error, std::fabs(last.potentials[k] + offset - twoH[k]));
    }
    return rep;
}

}  // namespace per1
