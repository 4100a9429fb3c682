#include "per1/adelic.hpp"

#include <cmath>

#include "per1/capacity.hpp"
#include "per1/errors.hpp"
#include "per1/padic.hpp"

namespace per1 {

namespace {

double to_double(const BigRat& x) {
    double m;
    long e;
    to_scaled_double(x, m, e);
    return std::ldexp(m, static_cast<int>(e));
}

// |1 - lambda^i|_v >= (2M)^{-i} at every place where |lambda|_v = 1, with
// M = max(1, |lambda|) * den(lambda); straight from the product formula.
double log_2M(const BigRat& lambda) {
    const double M = std::max(1.0, std::fabs(to_double(lambda))) * to_double(BigRat(lambda.get_den()));
    return std::log(2.0 * M);
}

// c = min{ min_v |lambda|_v / 2, 1/4 } over the places of Q.
double lemma_constant_c(const BigRat& lambda) {
    double min_abs = std::fabs(to_double(lambda));
    for (auto p : support_primes({lambda})) min_abs = std::min(min_abs, abs_at(lambda, Place::prime(p)));
    return std::min(min_abs / 2.0, 0.25);
}

}  // namespace

double gamma_v(const BigRat& lambda, const Place& v, double tol) {
    if (lambda == 0) throw error("gamma_v: lambda must be nonzero");
    if (is_root_of_unity(lambda) && lambda != 1) throw root_of_unity("gamma_v: lambda is a root of unity");
    if (v.archimedean) return gamma_arch(cplx(to_double(lambda), 0.0), tol);

    const long ord = ord_at(lambda, v.p);
    if (ord > 0) return 0.0;                                        // |lambda|_p < 1
    if (ord < 0) return -ord * std::log(static_cast<double>(v.p));  // log|lambda|_p exactly

    // |lambda|_p = 1: termwise exact valuations with the product-formula tail.
    const double logp = std::log(static_cast<double>(v.p));
    const double c_env = log_2M(lambda);
    const double log_l1 = lambda == 1 ? 0.0 : std::fabs(log_abs_at(BigRat(1) - lambda, v));
    double acc = 0.0;
    BigRat s(1), pw(1);
    for (int i = 1; i < 3000; ++i) {
        pw *= lambda;
        s += pw;
        acc += 0.5 * std::ldexp(-static_cast<double>(ord_at(s, v.p)) * logp, -i);
        const double env = lambda == 1 ? (i + 3.0) : ((i + 3.0) * c_env + log_l1);
        const double tail = 0.5 * std::ldexp(env, -i);
        if (tail <= tol) return acc;
    }
    throw non_convergence("gamma_v: tail did not clear tol");
}

double log_capacity_at(const BigRat& lambda, const Place& v, double tol) {
    if (lambda == 0) throw error("log_capacity_at: lambda must be nonzero");
    if (is_root_of_unity(lambda) && lambda != 1)
        throw root_of_unity("log_capacity_at: lambda is a root of unity");
    // |log|s_j|_v| <= (j+2)*slope + off: geometric-slope envelope per place.
    const double slope = std::max(log_abs_at(lambda, v), 0.0) + (v.archimedean ? 0.0 : log_2M(lambda)) + 1.0;
    const double off = lambda == 1 ? 0.0 : std::fabs(log_abs_at(BigRat(1) - lambda, v)) + std::log(4.0);
    double acc = -2.0 * log_abs_at(lambda, v);
    BigRat s(1), pw(1);
    for (int j = 1; j < 3000; ++j) {
        pw *= lambda;
        s += pw;
        acc += -3.0 * std::pow(4.0, -(j + 1)) * log_abs_at(s, v);
        const double tail = std::pow(4.0, -j) * ((j + 3.0) * slope + off);
        if (tail <= tol) return acc;
    }
    throw non_convergence("log_capacity_at: tail did not clear tol");
}

GlobalSum global_gamma_sum(const BigRat& lambda, int truncation) {
    if (lambda == 0) throw error("global_gamma_sum: lambda must be nonzero");
    if (is_root_of_unity(lambda) && lambda != 1)
        throw root_of_unity("global_gamma_sum: lambda is a root of unity");
    GlobalSum out;
    out.terms = truncation;
    BigRat s(1), pw(1);
    constexpr double eps = 2.3e-16;
    for (int i = 1; i <= truncation; ++i) {
        pw *= lambda;
        s += pw;
        const double ln = log_abs(BigInt(s.get_num()));
        const double ld = log_abs(BigInt(s.get_den()));
        const double zero_i = log_abs(s) - ln + ld;  // exactly 0 by the product formula
        out.value += 0.5 * std::ldexp(zero_i, -i);
        out.tail += 0.5 * std::ldexp(4.0 * eps * (std::fabs(ln) + std::fabs(ld) + 1.0), -i);
    }
    return out;
}

GlobalSum global_capacity_sum(const BigRat& lambda, int truncation) {
    if (lambda == 0) throw error("global_capacity_sum: lambda must be nonzero");
    if (is_root_of_unity(lambda) && lambda != 1)
        throw root_of_unity("global_capacity_sum: lambda is a root of unity");
    GlobalSum out;
    out.terms = truncation;
    constexpr double eps = 2.3e-16;
    {
        const double ln = log_abs(BigInt(lambda.get_num()));
        const double ld = log_abs(BigInt(lambda.get_den()));
        out.value += -2.0 * (log_abs(lambda) - ln + ld);
        out.tail += 2.0 * 4.0 * eps * (std::fabs(ln) + std::fabs(ld) + 1.0);
    }
    BigRat s(1), pw(1);
    for (int j = 1; j <= truncation; ++j) {
        pw *= lambda;
        s += pw;
        const double ln = log_abs(BigInt(s.get_num()));
        const double ld = log_abs(BigInt(s.get_den()));
        const double zero_j = log_abs(s) - ln + ld;
        out.value += -3.0 * std::pow(4.0, -(j + 1)) * zero_j;
        out.tail += 3.0 * std::pow(4.0, -(j + 1)) * 4.0 * eps * (std::fabs(ln) + std::fabs(ld) + 1.0);
    }
    return out;
}

LocalHeight local_height(const BigRat& lambda, const BigRat& t, const Place& v, Sign sign,
                         double tol) {
    if (lambda == 0) throw error("local_height: lambda must be nonzero");
    if (v.archimedean) {
        const MapParams p{cplx(to_double(lambda), 0.0), cplx(to_double(t), 0.0)};
        const auto r = escape_rate(p, sign, tol);
        return {v, r.value, r.tail_bound, false};
    }

    const long ord_lam = lambda == 0 ? 0 : ord_at(lambda, v.p);
    const long ord_t = t == 0 ? 1 : ord_at(t, v.p);  // |0|_p = 0 <= 1
    if (ord_lam == 0 && ord_t >= 0) return {v, 0.0, 0.0, true};  // good reduction

    const double logp = std::log(static_cast<double>(v.p));
    const double log_abs_lam = -ord_lam * logp;
    const double log_T = std::max(t == 0 ? 0.0 : -ord_t * logp, 0.0);
    const double logC = std::max(log_abs_lam, 0.0);
    const double logc = std::min(log_abs_lam, 0.0);
    const double B = std::max(logC + log_T, log_T - logc);
    if (B == 0.0) return {v, 0.0, 0.0, true};

    for (int digits = 64; digits <= 4096; digits *= 4) {
        try {
            PadicContext ctx(v.p, digits);
            const Padic lam = Padic::from_rational(ctx, lambda);
            const Padic tt = Padic::from_rational(ctx, t);
            Padic z1 = Padic::from_rational(ctx, BigRat(sign_value(sign)));
            Padic z2 = Padic::from_rational(ctx, BigRat(1));
            double acc = 0.0;
            for (int n = 1; n <= 600; ++n) {
                const Padic a = padic_mul(ctx, lam, padic_mul(ctx, z1, z2));
                Padic b = padic_add(ctx, padic_mul(ctx, z1, z1), padic_mul(ctx, z2, z2));
                b = padic_add(ctx, b, padic_mul(ctx, tt, padic_mul(ctx, z1, z2)));
                z1 = a;
                z2 = b;
                long m;
                if (z1.zero && z2.zero) throw error("local_height: iterate collapsed to (0,0)");
                if (z1.zero) m = z2.val;
                else if (z2.zero) m = z1.val;
                else m = std::min(z1.val, z2.val);
                acc += std::ldexp(-static_cast<double>(m) * logp, -n);
                if (!z1.zero) z1.val -= m;
                if (!z2.zero) z2.val -= m;
                const double tail = std::ldexp(B, -n);
                if (tail <= tol) return {v, acc, tail, false};
            }
            throw non_convergence("local_height: iteration budget exhausted");
        } catch (const precision_exhausted&) {
            continue;  // raise the working precision and retry
        }
    }
    throw precision_exhausted("local_height: cancellation persisted at maximum working precision");
}

HeightReport height_report(const BigRat& lambda, const BigRat& t, Sign sign, double tol) {
    if (lambda == 0) throw error("height_report: lambda must be nonzero");
    if (is_root_of_unity(lambda) && lambda != 1)
        throw root_of_unity("height_report: lambda is a root of unity");
    HeightReport rep;
    rep.lambda = lambda;
    rep.t = t;
    rep.sign = sign;

    const auto pre = is_preperiodic(lambda, t, sign_value(sign));
    rep.preperiodic = pre.kind == PreperiodicityResult::Preperiodic;
    rep.period = pre.period;
    rep.preperiod = pre.preperiod;

    std::vector<Place> places{Place::arch()};
    for (auto p : support_primes({lambda, t})) places.push_back(Place::prime(p));
    const double per_place_tol = tol / static_cast<double>(places.size() + 1);

    double total = 0.0, total_tail = 0.0;
    for (const auto& v : places) {
        HeightPlaceEntry e;
        e.place = v;
        e.cls = v.archimedean ? PlaceClass{PlaceClass::exceptional, 0, 0} : classify_place(lambda, v.p);
        e.gamma_v = gamma_v(lambda, v, per_place_tol);
        const auto lh = local_height(lambda, t, v, sign, per_place_tol);
        e.local_height = lh.value;
        e.tail = lh.certified_tail;
        if (e.cls.is_Mn()) {
            // r(K_v) <= e^{-2 gamma_v - log(c)/2^{n-1}}, c from Lemma "constant c".
            const double c = lemma_constant_c(lambda);
            e.outer_radius_bound = std::exp(-2.0 * e.gamma_v - std::ldexp(std::log(c), -(e.cls.n - 1)));
        }
        total += lh.value;
        total_tail += lh.certified_tail;
        rep.places.push_back(std::move(e));
    }
    rep.canonical_height = rep.preperiodic ? 0.0 : total;
    rep.tail = total_tail;
    rep.global_gamma_sum = global_gamma_sum(lambda, 60).value;
    return rep;
}

double canonical_height(const BigRat& lambda, const BigRat& t, Sign sign, double tol) {
    return height_report(lambda, t, sign, tol).canonical_height;
}

double arakelov_green_arch(const ExtComplex& x, const ExtComplex& y, cplx lambda, Sign sign,
                           double tol) {
    const auto lift = [](const ExtComplex& z) {
        return z.infinite ? ProjPair{cplx{1.0, 0.0}, cplx{0.0, 0.0}} : ProjPair{z.value, cplx{1.0, 0.0}};
    };
    if ((x.infinite && y.infinite) || (!x.infinite && !y.infinite && x.value == y.value))
        throw coincident_points("arakelov_green_arch: x == y");
    const ProjPair xt = lift(x), yt = lift(y);
    const cplx wedge = xt.z1 * yt.z2 - xt.z2 * yt.z1;
    const double log_cap = capacity_closed_form(lambda, tol).log_value;
    return -std::log(std::abs(wedge)) + green_homogeneous(lambda, xt, sign, tol) +
           green_homogeneous(lambda, yt, sign, tol) + log_cap;
}

double quasi_adelic_height(const std::vector<BigRat>& S, const BigRat& lambda, Sign sign,
                           double tol) {
    if (S.empty()) throw error("quasi_adelic_height: S must be nonempty");
    double mean = 0.0;
    for (const auto& t : S) mean += canonical_height(lambda, t, sign, tol / static_cast<double>(S.size()));
    mean /= static_cast<double>(S.size());
    return 2.0 * mean;  // 2 [k:Q] with k = Q
}

double pairwise_energy_height(const std::vector<BigRat>& S, const BigRat& lambda, Sign sign,
                              double tol) {
    if (S.size() < 2) throw error("pairwise_energy_height: need |S| >= 2");
    // Places where a wedge or a local height can be non-trivial: archimedean,
    // plus every prime where lambda, an element, or a difference x - y is a
    // non-unit.  The log Cap(K_v) column is nonzero at infinitely many places
    // but sums to exactly 0 over all of them (the global capacity sum), so it
    // enters through that certified total instead of place-by-place.
    std::vector<BigRat> gens{lambda};
    for (const auto& x : S) gens.push_back(x);
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = i + 1; j < S.size(); ++j) gens.push_back(S[i] - S[j]);
    std::vector<Place> places{Place::arch()};
    for (auto p : support_primes(gens)) places.push_back(Place::prime(p));

    const double n = static_cast<double>(S.size());
    double total = 0.0;
    for (const auto& v : places) {
        double energy = 0.0;
        std::vector<double> G(S.size());
        for (size_t i = 0; i < S.size(); ++i)
            G[i] = 2.0 * local_height(lambda, S[i], v, sign, tol).value;
        for (size_t i = 0; i < S.size(); ++i)
            for (size_t j = 0; j < S.size(); ++j) {
                if (i == j) continue;
                const BigRat wedge = S[i] - S[j];
                if (wedge == 0) throw coincident_points("pairwise_energy_height: repeated element");
                energy += -log_abs_at(wedge, v) + G[i] + G[j];
            }
        total += energy / (2.0 * n * n);
    }
    total += (n - 1.0) / (2.0 * n) * global_capacity_sum(lambda, 60).value;
    return n / (n - 1.0) * total;
}

}  // namespace per1
