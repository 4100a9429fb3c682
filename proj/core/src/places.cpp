#include "per1/places.hpp"

#include <algorithm>
#include <cmath>

#include "per1/errors.hpp"

namespace per1 {

std::string to_string(const Place& v) {
    return v.archimedean ? "inf" : std::to_string(v.p);
}

double abs_at(const BigRat& x, const Place& v) {
    if (x == 0) return 0.0;
    if (v.archimedean) {
        double m;
        long e;
        to_scaled_double(x, m, e);
        return std::ldexp(std::fabs(m), static_cast<int>(e));
    }
    return std::pow(static_cast<double>(v.p), static_cast<double>(-ord_at(x, v.p)));
}

double log_abs_at(const BigRat& x, const Place& v) {
    if (x == 0) throw error("log_abs_at: zero argument");
    if (v.archimedean) return log_abs(x);
    return -static_cast<double>(ord_at(x, v.p)) * std::log(static_cast<double>(v.p));
}

PlaceClass classify_place(const BigRat& lambda, unsigned long p, int n_max) {
    if (lambda == 0) throw error("classify_place: lambda must be nonzero");
    if (ord_at(lambda, p) != 0) return {PlaceClass::exceptional, 0, 0};
    // Work mod p: lambda is a p-unit, so the partial sums reduce mod p.
    BigInt pz(p);
    BigInt num = lambda.get_num() % pz;
    BigInt den = lambda.get_den() % pz;
    BigInt den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw error("classify_place: denominator not invertible mod p");
    const BigInt lam_mod = (num * den_inv) % pz;
    BigInt s = 1, pw = 1;
    for (int n = 1; n <= n_max; ++n) {
        pw = (pw * lam_mod) % pz;
        s = (s + pw) % pz;
        if (s == 0) return {PlaceClass::Mn, n, n};
    }
    return {PlaceClass::M0_so_far, 0, n_max};
}

std::vector<unsigned long> support_primes(const std::vector<BigRat>& xs) {
    std::vector<unsigned long> out;
    for (const auto& x : xs) {
        if (x == 0) continue;
        for (auto p : prime_factors(BigInt(x.get_num()))) out.push_back(p);
        for (auto p : prime_factors(BigInt(x.get_den()))) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_root_of_unity(const BigRat& lambda) { return lambda == 1 || lambda == -1; }

}  // namespace per1
