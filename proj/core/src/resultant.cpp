#include "per1/resultant.hpp"

#include <vector>

#include "per1/errors.hpp"

namespace per1 {

namespace {

// Gaussian integer; Bareiss only needs ring operations plus the exact
// divisions guaranteed by the algorithm.
struct GaussInt {
    BigInt re, im;

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
};

GaussInt div_exact(const GaussInt& a, const GaussInt& b) {
    const BigInt n = b.re * b.re + b.im * b.im;
    GaussInt num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
    GaussInt out;
    mpz_divexact(out.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(out.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
    return out;
}

// Fraction-free determinant; destroys m.  Returns zero on a singular matrix.
GaussInt bareiss_det(std::vector<std::vector<GaussInt>>& m) {
    const size_t n = m.size();
    if (n == 0) return GaussInt{BigInt(1), BigInt(0)};
    int sign = 1;
    GaussInt prev{BigInt(1), BigInt(0)};
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return GaussInt{BigInt(0), BigInt(0)};
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = GaussInt{BigInt(0), BigInt(0)};
        }
        prev = m[k][k];
    }
    GaussInt det = m[n - 1][n - 1];
    if (sign < 0) det = GaussInt{BigInt(0), BigInt(0)} - det;
    return det;
}

// Clear denominators: returns integer coefficient list (descending degree,
// padded to the declared degree) and the common scale factor L.
std::vector<GaussInt> integer_coeffs_desc(const RatPoly& p, long declared_deg, BigInt& L) {
    L = 1;
    for (long i = 0; i <= p.degree(); ++i) {
        const GaussRat& c = p[static_cast<size_t>(i)];
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.re.get_den().get_mpz_t());
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.im.get_den().get_mpz_t());
    }
    std::vector<GaussInt> out(static_cast<size_t>(declared_deg) + 1, GaussInt{BigInt(0), BigInt(0)});
    for (long i = 0; i <= p.degree(); ++i) {
        const GaussRat& c = p[static_cast<size_t>(i)];
        BigRat re = c.re * L, im = c.im * L;
        out[static_cast<size_t>(declared_deg - i)] = GaussInt{BigInt(re.get_num()), BigInt(im.get_num())};
    }
    return out;
}

}  // namespace

GaussRat sylvester_resultant(const RatPoly& P, const RatPoly& Q, long declared_deg_p,
                             long declared_deg_q) {
    if (P.is_zero() && Q.is_zero()) throw error("sylvester_resultant: both polynomials are zero");
    const long dp = declared_deg_p >= 0 ? declared_deg_p : std::max(P.degree(), 0L);
    const long dq = declared_deg_q >= 0 ? declared_deg_q : std::max(Q.degree(), 0L);
    if (P.degree() > dp || Q.degree() > dq)
        throw error("sylvester_resultant: declared degree below actual degree");
    if (dp == 0 && dq == 0) return GaussRat(1);

    BigInt Lp, Lq;
    const auto a = integer_coeffs_desc(P, dp, Lp);
    const auto b = integer_coeffs_desc(Q, dq, Lq);

    const size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<GaussInt>> m(n, std::vector<GaussInt>(n, GaussInt{BigInt(0), BigInt(0)}));
    for (long r = 0; r < dq; ++r)
        for (long j = 0; j <= dp; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = a[static_cast<size_t>(j)];
    for (long r = 0; r < dp; ++r)
        for (long j = 0; j <= dq; ++j) m[static_cast<size_t>(dq + r)][static_cast<size_t>(r + j)] = b[static_cast<size_t>(j)];

    const GaussInt det = bareiss_det(m);

    // Res(Lp*P, Lq*Q) = Lp^dq * Lq^dp * Res(P, Q)
    BigInt denom_p, denom_q;
    mpz_pow_ui(denom_p.get_mpz_t(), Lp.get_mpz_t(), static_cast<unsigned long>(dq));
    mpz_pow_ui(denom_q.get_mpz_t(), Lq.get_mpz_t(), static_cast<unsigned long>(dp));
    BigRat re(det.re), im(det.im);
    re /= BigRat(denom_p * denom_q);
    im /= BigRat(denom_p * denom_q);
    re.canonicalize();
    im.canonicalize();
    return GaussRat(re, im);
}

GaussRat resultant_of_iterate(const GaussRat& lambda, int n, int n_max) {
    auto [P, Q] = iterate_param_poly(lambda, n, +1, n_max);
    const long d = 1L << (n - 1);
    // First coordinate of F_n is t2 * hom(P_n): declared degree d with the
    // extra factor of t2 carried by the homogenization of a degree d-1 poly.
    return sylvester_resultant(P, Q, d, d);
}

GaussRat resultant_recursive(const GaussRat& lambda, int n, int n_max) {
    if (lambda.is_zero()) throw error("resultant_recursive: lambda must be nonzero");
    if (n < 1) throw error("resultant_recursive: n must be >= 1");
    if (n > n_max) throw budget_exceeded("resultant_recursive: n exceeds N_max");

    auto closed = [&](int k) -> GaussRat {
        if (k == 1) return -lambda;
        GaussRat r = pow_gauss(lambda, 2L * (1L << (2 * (k - 1))) - (1L << (k - 1)));
        r *= partial_sum(lambda, k - 1);
        for (int j = 1; j <= k - 2; ++j)
            r *= pow_gauss(partial_sum(lambda, j), 3L * (1L << (2 * (k - 2 - j))));
        return r;
    };

    const GaussRat res = closed(n);
    if (n >= 2) {
        const GaussRat prev = closed(n - 1);
        const GaussRat s_prev = n >= 3 ? partial_sum(lambda, n - 2) : GaussRat(1);
        const GaussRat step =
            partial_sum(lambda, n - 1) / s_prev * pow_gauss(lambda, 1L << (n - 1)) * pow_gauss(prev, 4);
        if (!(step == res)) throw error("resultant_recursive: recursion check failed");
    }
    return res;
}

}  // namespace per1
