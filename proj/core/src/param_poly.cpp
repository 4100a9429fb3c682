#include "per1/param_poly.hpp"

#include "per1/errors.hpp"

namespace per1 {

std::pair<RatPoly, RatPoly> iterate_param_poly(const GaussRat& lambda, int n, int sign, int n_max) {
    if (lambda.is_zero()) throw error("iterate_param_poly: lambda must be nonzero");
    if (n < 1) throw error("iterate_param_poly: n must be >= 1");
    if (n > n_max) throw budget_exceeded("iterate_param_poly: n exceeds N_max");

    RatPoly P = RatPoly::constant(GaussRat(BigRat(sign)));
    RatPoly Q = RatPoly::constant(GaussRat(1));
    const RatPoly t = RatPoly::monomial(GaussRat(1), 1);
    for (int k = 0; k < n; ++k) {
        RatPoly PQ = P * Q;
        RatPoly newP = PQ.scaled(lambda);
        RatPoly newQ = P * P + t * PQ + Q * Q;
        P = std::move(newP);
        Q = std::move(newQ);
    }
    const long d = (1L << (n - 1));
    if (P.degree() != d - 1 || Q.degree() != d)
        throw error("iterate_param_poly: degree bookkeeping violated");
    return {std::move(P), std::move(Q)};
}

GaussRat partial_sum(const GaussRat& lambda, long j) {
    GaussRat s(1), pw(1);
    for (long i = 1; i <= j; ++i) {
        pw *= lambda;
        s += pw;
    }
    return s;
}

GaussRat closed_form_B(const GaussRat& lambda, int n) {
    if (n < 3) throw error("closed_form_B: valid for n >= 3 only");
    GaussRat b = pow_gauss(lambda, n);
    for (int i = 1; i <= n - 2; ++i) b *= pow_gauss(partial_sum(lambda, i), 1L << (n - 2 - i));
    return b;
}

GaussRat closed_form_C(const GaussRat& lambda, int n) {
    if (n < 1) throw error("closed_form_C: n must be >= 1");
    if (n == 1) return GaussRat(1);
    if (n == 2) return partial_sum(lambda, 1);
    return closed_form_B(lambda, n) * partial_sum(lambda, n - 1) / pow_gauss(lambda, n);
}

CoeffSeq coeff_sequences(const GaussRat& lambda, int n) {
    if (n < 1) throw error("coeff_sequences: n must be >= 1");
    CoeffSeq seq;
    seq.n = n;
    seq.B = {lambda};
    seq.C = {GaussRat(1)};
    seq.A = {GaussRat(0)};
    seq.D = {GaussRat(2)};
    seq.Astar = {GaussRat(0)};
    seq.Dstar = {GaussRat(2)};
    for (int k = 1; k < n; ++k) {
        const GaussRat B = seq.B.back(), C = seq.C.back(), A = seq.A.back(), D = seq.D.back();
        const GaussRat As = seq.Astar.back(), Ds = seq.Dstar.back();
        seq.B.push_back(lambda * B * C);
        seq.C.push_back(C * (B + C));
        seq.A.push_back(lambda * (B * D + C * A));
        seq.D.push_back(C * (GaussRat(2) * D + A) + D * B);
        // A*_{k+1} = lambda^{k+1} D*_k + (lambda + ... + lambda^k) A*_k
        // D*_{k+1} = (2(1+...+lambda^{k-1}) + lambda^k) D*_k + (1+...+lambda^{k-1}) A*_k
        const GaussRat s_k = partial_sum(lambda, k);
        const GaussRat s_km1 = partial_sum(lambda, k - 1);
        const GaussRat lam_k = pow_gauss(lambda, k);
        seq.Astar.push_back(lam_k * lambda * Ds + (s_k - GaussRat(1)) * As);
        seq.Dstar.push_back((GaussRat(2) * s_km1 + lam_k) * Ds + s_km1 * As);
    }
    for (int k = 3; k <= n; ++k) {
        if (!(seq.B_at(k) == closed_form_B(lambda, k)) || !(seq.C_at(k) == closed_form_C(lambda, k)))
            throw error("coeff_sequences: closed forms disagree with the recursion");
    }
    return seq;
}

}  // namespace per1
