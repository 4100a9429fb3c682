#include "per1/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>

#include "per1/errors.hpp"

namespace per1 {

std::optional<BigRat> parse_rational(const std::string& raw) {
    std::string s = raw;
    if (!s.empty() && s[0] == '+') s = s.substr(1);  // gmp rejects a leading plus
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) return std::nullopt;
            BigRat r(num, den);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    const auto dot = s.find('.');
    std::string digits = s;
    long frac_len = 0;
    if (dot != std::string::npos) {
        frac_len = static_cast<long>(s.size() - dot - 1);
        digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
    }
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) return std::nullopt;
    }
    try {
        BigInt num(digits);
        BigInt den = 1;
        for (long i = 0; i < frac_len; ++i) den *= 10;
        BigRat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

BigRat pow_rat(const BigRat& x, long e) {
    if (e == 0) return BigRat(1);
    if (x == 0 && e < 0) throw error("pow_rat: zero to a negative power");
    const unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), ue);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), ue);
    if (e < 0) mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    r.canonicalize();
    return r;
}

double log_abs(const BigInt& x) {
    if (x == 0) throw error("log_abs: zero argument");
    long e2 = 0;
    const double m = mpz_get_d_2exp(&e2, x.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e2) * std::log(2.0);
}

double log_abs(const BigRat& x) {
    return log_abs(BigInt(x.get_num())) - log_abs(BigInt(x.get_den()));
}

void to_scaled_double(const BigRat& x, double& mantissa, long& e2) {
    if (x == 0) {
        mantissa = 0.0;
        e2 = 0;
        return;
    }
    long en = 0, ed = 0;
    const double dn = mpz_get_d_2exp(&en, x.get_num().get_mpz_t());
    const double dd = mpz_get_d_2exp(&ed, x.get_den().get_mpz_t());
    mantissa = dn / dd;
    e2 = en - ed;
    int adj = 0;
    mantissa = std::frexp(mantissa, &adj);
    e2 += adj;
}

double weil_height(const BigRat& x) {
    if (x == 0) return 0.0;
    const BigInt num = x.get_num();
    const BigInt den = x.get_den();
    return std::max(log_abs(num), log_abs(den));
}

long ord_at(const BigRat& x, unsigned long p) {
    if (x == 0) throw error("ord_at: zero argument");
    BigInt pz(p);
    mpz_class tmp;
    long v = 0;
    BigInt n = x.get_num();
    while (mpz_divisible_p(n.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
        ++v;
    }
    BigInt d = x.get_den();
    while (mpz_divisible_p(d.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
        --v;
    }
    return v;
}

namespace {

// Pollard rho with Brent cycling; inputs here are human-scale, this is belt
// and braces for the occasional large cofactor.
BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return BigInt(2);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xb5297a4dUL);
    while (true) {
        BigInt y = rng.get_z_range(n - 3) + 2;
        BigInt c = rng.get_z_range(n - 2) + 1;
        BigInt x = y, d = 1;
        auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            BigInt diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 0 && d != n && d > 1) return d;
    }
}

void factor_into(BigInt n, std::vector<unsigned long>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        if (!n.fits_ulong_p()) throw error("prime_factors: prime factor exceeds unsigned long");
        out.push_back(n.get_ui());
        return;
    }
    const BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<unsigned long> prime_factors(BigInt n) {
    std::vector<unsigned long> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.push_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace per1
