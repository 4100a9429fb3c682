#include "per1/gaussian.hpp"

#include <cmath>

#include "per1/errors.hpp"

namespace per1 {

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (b.is_zero()) throw error("GaussRat: division by zero");
    const BigRat n = norm_sq(b);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

BigRat norm_sq(const GaussRat& x) { return x.re * x.re + x.im * x.im; }

GaussRat conj(const GaussRat& x) { return {x.re, -x.im}; }

GaussRat pow_gauss(const GaussRat& x, long e) {
    if (e == 0) return GaussRat(1);
    if (x.is_zero()) {
        if (e < 0) throw error("pow_gauss: zero to a negative power");
        return GaussRat(0);
    }
    if (x.is_real()) return GaussRat(pow_rat(x.re, e));
    GaussRat base = e < 0 ? GaussRat(1) / x : x;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    GaussRat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

double log_abs(const GaussRat& x) {
    if (x.is_zero()) throw error("log_abs: zero argument");
    return 0.5 * log_abs(norm_sq(x));
}

std::complex<double> to_complex(const GaussRat& x) {
    double mr, mi;
    long er, ei;
    to_scaled_double(x.re, mr, er);
    to_scaled_double(x.im, mi, ei);
    return {std::ldexp(mr, static_cast<int>(er)), std::ldexp(mi, static_cast<int>(ei))};
}

std::optional<GaussRat> parse_gauss(const std::string& s) {
    if (s.empty()) return std::nullopt;
    // Split off a trailing imaginary part.  Scan for a '+'/'-' that is not a
    // leading sign and not part of an exponent (no exponents in this grammar).
    if (s.back() == 'i' || s.back() == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        size_t split = std::string::npos;
        for (size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/' && body[i - 1] != '+' &&
                body[i - 1] != '-') {
                split = i;
                break;
            }
        }
        std::string re_part, im_part;
        if (split == std::string::npos) {
            re_part = "0";
            im_part = body;
        } else {
            re_part = body.substr(0, split);
            im_part = body.substr(split);
        }
        if (im_part.empty() || im_part == "+") im_part = "1";
        if (im_part == "-") im_part = "-1";
        auto re = parse_rational(re_part);
        auto im = parse_rational(im_part);
        if (!re || !im) return std::nullopt;
        return GaussRat(*re, *im);
    }
    auto re = parse_rational(s);
    if (!re) return std::nullopt;
    return GaussRat(*re);
}

std::string to_string(const GaussRat& x) {
    const std::string re = x.re.get_str();
    if (x.im == 0) return re;
    std::string im = x.im.get_str();
    if (!im.empty() && im[0] != '-') im = "+" + im;
    return re + im + "i";
}

}  // namespace per1
