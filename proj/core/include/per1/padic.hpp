#pragma once

#include "per1/rational.hpp"

namespace per1 {

/// Truncated p-adic scalar: x = p^val * unit with the unit known modulo
/// p^prec.  Additions that cancel every known digit raise
/// precision_exhausted; callers retry with a larger working precision.
class PadicContext {
  public:
    PadicContext(unsigned long p, int digits);

    unsigned long p() const { return p_; }
    int digits() const { return digits_; }
    const BigInt& p_pow(int k) const;  // p^k, 0 <= k <= digits

  private:
    unsigned long p_;
    int digits_;
    std::vector<BigInt> powers_;
};

struct Padic {
    bool zero = true;
    long val = 0;
    BigInt unit;   // in (0, p^prec), not divisible by p
    int prec = 0;  // digits of the unit that are trusted

    static Padic from_rational(const PadicContext& ctx, const BigRat& x);
};

Padic padic_mul(const PadicContext& ctx, const Padic& a, const Padic& b);
Padic padic_add(const PadicContext& ctx, const Padic& a, const Padic& b);

}  // namespace per1
