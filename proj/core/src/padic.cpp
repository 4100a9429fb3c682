#include "per1/padic.hpp"

#include "per1/errors.hpp"

namespace per1 {

PadicContext::PadicContext(unsigned long p, int digits) : p_(p), digits_(digits) {
    powers_.reserve(digits + 1);
    BigInt pw = 1;
    for (int k = 0; k <= digits; ++k) {
        powers_.push_back(pw);
        pw *= static_cast<long>(p);
    }
}

const BigInt& PadicContext::p_pow(int k) const { return powers_.at(static_cast<size_t>(k)); }

Padic Padic::from_rational(const PadicContext& ctx, const BigRat& x) {
    if (x == 0) return Padic{};
    Padic out;
    out.zero = false;
    BigInt num = x.get_num(), den = x.get_den();
    BigInt pz(static_cast<long>(ctx.p()));
    long v = 0;
    while (mpz_divisible_p(num.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
        --v;
    }
    out.val = v;
    out.prec = ctx.digits();
    const BigInt& mod = ctx.p_pow(out.prec);
    BigInt dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw error("Padic: denominator not invertible");
    out.unit = ((num % mod) * dinv) % mod;
    if (out.unit < 0) out.unit += mod;
    return out;
}

Padic padic_mul(const PadicContext& ctx, const Padic& a, const Padic& b) {
    if (a.zero || b.zero) return Padic{};
    Padic out;
    out.zero = false;
    out.val = a.val + b.val;
    out.prec = std::min(a.prec, b.prec);
    const BigInt& mod = ctx.p_pow(out.prec);
    out.unit = (a.unit * b.unit) % mod;
    return out;
}

Padic padic_add(const PadicContext& ctx, const Padic& a, const Padic& b) {
    if (a.zero) return b;
    if (b.zero) return a;
    const long v = std::min(a.val, b.val);
    // absolute precision of each operand is val + prec; the sum is trusted to
    // the weaker of the two.
    const long abs_prec = std::min(a.val + a.prec, b.val + b.prec);
    const int rel = static_cast<int>(abs_prec - v);
    if (rel <= 0) throw precision_exhausted("padic_add: no shared digits");
    const BigInt& mod = ctx.p_pow(rel);
    const long da = a.val - v, db = b.val - v;
    BigInt u = 0;
    if (da < rel) u += a.unit * ctx.p_pow(static_cast<int>(da));
    if (db < rel) u += b.unit * ctx.p_pow(static_cast<int>(db));
    u %= mod;
    if (u == 0) throw precision_exhausted("padic_add: cancellation beyond working precision");
    BigInt pz(static_cast<long>(ctx.p()));
    int w = 0;
    while (mpz_divisible_p(u.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), pz.get_mpz_t());
        ++w;
    }
    Padic out;
    out.zero = false;
    out.val = v + w;
    out.prec = rel - w;
    if (out.prec <= 0) throw precision_exhausted("padic_add: unit fully consumed");
    out.unit = u % ctx.p_pow(out.prec);
    return out;
}

}  // namespace per1
