#include "per1/poly.hpp"

#include <algorithm>

#include "per1/errors.hpp"

namespace per1 {

RatPoly::RatPoly(std::vector<GaussRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(GaussRat c) { return RatPoly(std::vector<GaussRat>{std::move(c)}); }

RatPoly RatPoly::monomial(GaussRat c, size_t deg) {
    std::vector<GaussRat> v(deg + 1, GaussRat(0));
    v[deg] = std::move(c);
    return RatPoly(std::move(v));
}

const GaussRat& RatPoly::leading() const {
    if (is_zero()) throw error("RatPoly: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussRat RatPoly::eval(const GaussRat& x) const {
    GaussRat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::complex<double> RatPoly::eval(std::complex<double> x) const {
    std::complex<double> acc{0.0, 0.0};
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + to_complex(coeffs_[i]);
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return RatPoly();
    std::vector<GaussRat> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * GaussRat(BigRat(static_cast<long>(i)));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::reversed(size_t declared_degree) const {
    if (degree() > static_cast<long>(declared_degree))
        throw error("RatPoly::reversed: declared degree below actual degree");
    std::vector<GaussRat> r(declared_degree + 1, GaussRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[declared_degree - i] = coeffs_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::primitive_part() const {
    if (is_zero()) return *this;
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& c : coeffs_) {
        for (const BigRat* part : {&c.re, &c.im}) {
            if (*part == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), part->get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), part->get_den().get_mpz_t());
        }
    }
    BigRat content(num_gcd, den_lcm);
    content.canonicalize();
    if (content == 0) return *this;
    std::vector<GaussRat> out(coeffs_.size());
    const GaussRat inv(BigRat(1) / content);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * inv;
    return RatPoly(std::move(out));
}

RatPoly RatPoly::rem(const RatPoly& monic_divisor) const {
    if (monic_divisor.is_zero() || !(monic_divisor.leading() == GaussRat(1)))
        throw error("RatPoly::rem: divisor must be monic");
    std::vector<GaussRat> r = coeffs_;
    const long dd = monic_divisor.degree();
    while (static_cast<long>(r.size()) - 1 >= dd) {
        const GaussRat q = r.back();
        const size_t shift = r.size() - 1 - dd;
        if (!q.is_zero())
            for (long i = 0; i <= dd; ++i) r[shift + i] -= q * monic_divisor[i];
        r.pop_back();
        while (!r.empty() && r.back().is_zero() && static_cast<long>(r.size()) - 1 >= dd) r.pop_back();
    }
    return RatPoly(std::move(r));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<GaussRat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), GaussRat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<GaussRat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), GaussRat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<GaussRat> out(a.coeffs_.size() + b.coeffs_.size() - 1, GaussRat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::scaled(const GaussRat& c) const {
    if (c.is_zero()) return RatPoly();
    std::vector<GaussRat> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return RatPoly(std::move(out));
}

size_t RatPoly::max_coeff_bits() const {
    size_t bits = 0;
    for (const auto& c : coeffs_)
        for (const BigRat* part : {&c.re, &c.im}) {
            if (*part == 0) continue;
            bits = std::max(bits, mpz_sizeinbase(part->get_num().get_mpz_t(), 2));
            bits = std::max(bits, mpz_sizeinbase(part->get_den().get_mpz_t(), 2));
        }
    return bits;
}

}  // namespace per1
