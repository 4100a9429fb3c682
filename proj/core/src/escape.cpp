#include "per1/escape.hpp"

#include <cmath>

#include "per1/errors.hpp"

namespace per1 {

EscapeRateResult escape_rate(const MapParams& p, Sign sign, double tol, int max_iter) {
    if (!(tol > 0.0)) throw error("escape_rate: tol must be positive");
    const double T = std::max(std::abs(p.t), 1.0);
    const double c = std::min(std::abs(p.lambda) / 2.0, 0.25);
    const double C = std::max(std::abs(p.lambda), 3.0);
    const double B = std::max(std::log(C * T), std::log(T / c));

    ProjPair v{cplx(static_cast<double>(sign_value(sign)), 0.0), cplx(1.0, 0.0)};
    double acc = 0.0;
    for (int n = 1; n <= max_iter; ++n) {
        v = eval_homogeneous(p, v);
        const double s = norm_max(v);
        acc += std::ldexp(std::log(s), -n);
        v.z1 /= s;
        v.z2 /= s;
        const double tail = std::ldexp(B, -n);
        if (tail <= tol) return {acc, n, tail};
    }
    throw non_convergence("escape_rate: iteration budget exhausted before tail bound cleared tol");
}

namespace {

// lambda = 1: terms are 2^{-i-1} log(i+1); tail via log(i+1) <= log(N+2) + (i-N-1)/(N+2).
double gamma_lambda_one(double tol) {
    double acc = 0.0;
    for (int i = 1; i < 1000; ++i) {
        acc += 0.5 * std::ldexp(std::log(static_cast<double>(i + 1)), -i);
        const double tail = 0.5 * std::ldexp(std::log(static_cast<double>(i + 2)) + 1.0 / (i + 2), -i);
        if (tail <= tol) return acc;
    }
    throw non_convergence("gamma_arch: lambda=1 tail did not clear tol");
}

}  // namespace

double gamma_arch(cplx lambda, double tol) {
    if (!(tol > 0.0)) throw error("gamma_arch: tol must be positive");
    if (lambda == cplx{0.0, 0.0}) throw error("gamma_arch: lambda must be nonzero");
    if (lambda == cplx{1.0, 0.0}) return gamma_lambda_one(tol);

    const double r = std::abs(lambda);
    if (r == 1.0) throw gamma_divergence("gamma_arch: |lambda| = 1 with lambda != 1 cannot be certified");

    if (r > 1.0) {
        // log|s_i| = (i+1) log|lambda| - log|lambda-1| + log|1 - lambda^{-(i+1)}|
        const double loglam = std::log(r);
        const double logl1 = std::log(std::abs(lambda - cplx{1.0, 0.0}));
        const cplx ilam = cplx{1.0, 0.0} / lambda;
        double acc = 0.0;
        for (int i = 1; i < 2000; ++i) {
            const cplx small = std::pow(ilam, i + 1);  // -> 0, underflow is fine
            const double term = (i + 1) * loglam - logl1 + std::log(std::abs(cplx{1.0, 0.0} - small));
            acc += 0.5 * std::ldexp(term, -i);
            const double tail = 0.5 * std::ldexp((i + 3) * loglam + std::abs(logl1) + std::log(2.0), -i);
            if (tail <= tol) return acc;
        }
        throw non_convergence("gamma_arch: |lambda|>1 tail did not clear tol");
    }

    // |lambda| < 1: s_i -> 1/(1-lambda); each |log|s_i|| is bounded by B.
    const double d = std::abs(cplx{1.0, 0.0} - lambda);
    const double B = std::max(std::log(2.0 / d), std::abs(std::log((1.0 - r) / d)));
    cplx part{1.0, 0.0}, pw{1.0, 0.0};
    double acc = 0.0;
    for (int i = 1; i < 2000; ++i) {
        pw *= lambda;
        part += pw;
        acc += 0.5 * std::ldexp(std::log(std::abs(part)), -i);
        const double tail = 0.5 * std::ldexp(B, -i);
        if (tail <= tol) return acc;
    }
    throw non_convergence("gamma_arch: |lambda|<1 tail did not clear tol");
}

double green_homogeneous(cplx lambda, const ProjPair& v, Sign sign, double tol) {
    if (v.z1 == cplx{0.0, 0.0} && v.z2 == cplx{0.0, 0.0})
        throw error("green_homogeneous: (0,0) is not in the domain");
    if (v.z2 == cplx{0.0, 0.0}) return std::log(std::abs(v.z1)) + gamma_arch(lambda, tol);
    const MapParams p{lambda, v.z1 / v.z2};
    return 2.0 * escape_rate(p, sign, tol / 2.0).value + std::log(std::abs(v.z2));
}

}  // namespace per1
