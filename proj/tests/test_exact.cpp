#include <cmath>
#include <complex>

#include "doctest.h"
#include "per1/capacity.hpp"
#include "per1/errors.hpp"
#include "per1/escape.hpp"
#include "per1/param_poly.hpp"
#include "per1/resultant.hpp"

using namespace per1;

namespace {

GaussRat grat(long num, long den = 1) { return GaussRat(BigRat(num, den)); }

}  // namespace

TEST_CASE("rational parsing and helpers") {
    CHECK(*parse_rational("5/3") == BigRat(5, 3));
    CHECK(*parse_rational("-1.25") == BigRat(-5, 4));
    CHECK(*parse_rational("17") == 17);
    CHECK(!parse_rational("x"));
    CHECK(!parse_rational("1/0"));
    CHECK(pow_rat(BigRat(2, 3), -2) == BigRat(9, 4));
    CHECK(std::fabs(log_abs(BigRat(1, 8)) + 3.0 * std::log(2.0)) < 1e-14);
    CHECK(ord_at(BigRat(12), 2) == 2);
    CHECK(ord_at(BigRat(3, 5), 5) == -1);
    const auto pf = prime_factors(BigInt(540));
    CHECK(pf == std::vector<unsigned long>{2, 3, 5});
}

TEST_CASE("gaussian rationals") {
    const auto i = *parse_gauss("i");
    CHECK(i == GaussRat(BigRat(0), BigRat(1)));
    CHECK(*parse_gauss("3/2+1/2i") == GaussRat(BigRat(3, 2), BigRat(1, 2)));
    CHECK(*parse_gauss("1.1i") == GaussRat(BigRat(0), BigRat(11, 10)));
    CHECK(*parse_gauss("-4") == grat(-4));
    CHECK(i * i == grat(-1));
    CHECK(pow_gauss(i, 3) == GaussRat(BigRat(0), BigRat(-1)));
    const GaussRat z(BigRat(3), BigRat(4));
    CHECK(z / z == grat(1));
    CHECK(std::fabs(log_abs(z) - std::log(5.0)) < 1e-14);
}

TEST_CASE("parameter polynomials P_n, Q_n") {
    SUBCASE("n = 1: (P1, Q1) = (lambda, t + 2)") {
        auto [P, Q] = iterate_param_poly(grat(2), 1);
        CHECK(P == RatPoly::constant(grat(2)));
        CHECK(Q == RatPoly({grat(2), grat(1)}));
    }
    SUBCASE("degree bookkeeping for n <= 6") {
        for (int n = 1; n <= 6; ++n) {
            auto [P, Q] = iterate_param_poly(grat(5, 3), n);
            CHECK(P.degree() == (1L << (n - 1)) - 1);
            CHECK(Q.degree() == (1L << (n - 1)));
        }
    }
    SUBCASE("evaluation matches floating iteration (lambda=2, n=3, t=1)") {
        auto [P, Q] = iterate_param_poly(grat(2), 3);
        ProjPair v{{1.0, 0.0}, {1.0, 0.0}};
        const MapParams p{{2.0, 0.0}, {1.0, 0.0}};
        for (int k = 0; k < 3; ++k) v = eval_homogeneous(p, v);
        const auto pe = P.eval(std::complex<double>{1.0, 0.0});
        const auto qe = Q.eval(std::complex<double>{1.0, 0.0});
        CHECK(std::abs(pe - v.z1) < 1e-9 * std::abs(v.z1));
        CHECK(std::abs(qe - v.z2) < 1e-9 * std::abs(v.z2));
    }
    SUBCASE("leading coefficients are B_n and C_n (constant terms of F_n^+(1,s))") {
        for (const auto& lambda : {grat(2), grat(-2), grat(1, 2), grat(5, 3)}) {
            const auto seq = coeff_sequences(lambda, 6);
            for (int n = 1; n <= 6; ++n) {
                auto [P, Q] = iterate_param_poly(lambda, n);
                CHECK(P.leading() == seq.B_at(n));
                CHECK(Q.leading() == seq.C_at(n));
                CHECK(Q.leading() == closed_form_C(lambda, n));
            }
        }
    }
    SUBCASE("full expansion of F_n^+(1,s): second-highest coefficients are A_n, D_n") {
        const auto lambda = grat(5, 3);
        const auto seq = coeff_sequences(lambda, 6);
        for (int n = 2; n <= 6; ++n) {
            auto [P, Q] = iterate_param_poly(lambda, n);
            // F_n^+(1,s) = (s * rev(P_n)(s), rev(Q_n)(s))
            const auto p_rev = P.reversed(static_cast<size_t>(P.degree()));
            const auto q_rev = Q.reversed(static_cast<size_t>(Q.degree()));
            CHECK(p_rev[0] == seq.B_at(n));
            if (p_rev.degree() >= 1) CHECK(p_rev[1] == seq.A_at(n));
            CHECK(q_rev[0] == seq.C_at(n));
            CHECK(q_rev[1] == seq.D_at(n));
        }
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(iterate_param_poly(grat(2), 15), budget_exceeded);
    }
}

TEST_CASE("coefficient sequences") {
    SUBCASE("C2 = 1 + lambda") {
        const auto seq = coeff_sequences(grat(7, 5), 2);
        CHECK(seq.C_at(2) == grat(12, 5));
    }
    SUBCASE("B4(2) = 1008") {
        const auto seq = coeff_sequences(grat(2), 4);
        CHECK(seq.B_at(4) == grat(1008));
    }
    SUBCASE("A*_n, D*_n bound 2(2+2|lambda|)^{n(n+1)/2} at lambda = 1/2, n = 5") {
        const auto seq = coeff_sequences(grat(1, 2), 5);
        const double bound = 2.0 * std::pow(3.0, 15.0);
        CHECK(std::fabs(to_complex(seq.Astar_at(5)).real()) <= bound);
        CHECK(std::fabs(to_complex(seq.Dstar_at(5)).real()) <= bound);
    }
    SUBCASE("log|C_n|/2^{n-1} converges to gamma(lambda) at the archimedean place") {
        const auto seq = coeff_sequences(grat(2), 26);
        const double last = log_abs(seq.C_at(26)) / std::ldexp(1.0, 25);
        CHECK(std::fabs(last - gamma_arch({2.0, 0.0}, 1e-12)) < 1e-6);
    }
    SUBCASE("|C_n|_v is non-increasing at unit finite places and log|C_n|_v/2^{n-1} -> gamma_v") {
        const auto seq = coeff_sequences(grat(2), 16);
        for (unsigned long p : {7ul, 3ul, 5ul}) {
            long prev_ord = 0;
            for (int n = 1; n <= 16; ++n) {
                const BigRat c = seq.C_at(n).re;
                const long ord = c == 0 ? 0 : ord_at(c, p);
                CHECK(ord >= prev_ord);  // |C_{n+1}|_v = |C_n|_v |B_n + C_n|_v <= |C_n|_v
                prev_ord = ord;
            }
            const double last = -static_cast<double>(prev_ord) * std::log(static_cast<double>(p)) /
                                std::ldexp(1.0, 15);
            double gv = 0.0;  // gamma_v truncation, exact valuations
            BigRat s(1), pw(1);
            for (int i = 1; i <= 40; ++i) {
                pw *= 2;
                s += pw;
                gv += 0.5 * std::ldexp(-static_cast<double>(ord_at(s, p)) * std::log(static_cast<double>(p)), -i);
            }
            CHECK(std::fabs(last - gv) < 1e-3);
        }
    }
}

TEST_CASE("sylvester resultant") {
    SUBCASE("shared root gives zero") {
        const RatPoly a({grat(-1), grat(0), grat(1)});  // x^2 - 1
        const RatPoly b({grat(-1), grat(1)});           // x - 1
        CHECK(sylvester_resultant(a, b) == grat(0));
    }
    SUBCASE("Res(F_1) = -lambda") {
        for (const auto& lambda : {grat(2), grat(-7, 3)})
            CHECK(resultant_of_iterate(lambda, 1) == -lambda);
    }
    SUBCASE("gaussian-rational entries") {
        const GaussRat i(BigRat(0), BigRat(1));
        const RatPoly a({i, grat(1)});   // x + i
        const RatPoly b({-i, grat(1)});  // x - i
        // Res(f, g) = lc(f)^{deg g} * g(root of f) = g(-i) = -2i
        CHECK(sylvester_resultant(a, b) == grat(-2) * i);
    }
}

TEST_CASE("resultant closed form and recursion") {
    SUBCASE("Res(F_2) = lambda^6 (1 + lambda)") {
        const auto lambda = grat(5, 3);
        CHECK(resultant_recursive(lambda, 2) ==
              pow_gauss(lambda, 6) * (grat(1) + lambda));
    }
    SUBCASE("exact equality with the Sylvester determinant, n <= 5") {
        for (const auto& lambda : {grat(2), grat(-2), grat(1, 2), grat(5, 3)})
            for (int n = 1; n <= 5; ++n)
                CHECK(resultant_of_iterate(lambda, n) == resultant_recursive(lambda, n));
    }
    SUBCASE("P_n, Q_n never share a root (nonzero resultant)") {
        for (int n = 1; n <= 5; ++n) CHECK(!resultant_of_iterate(grat(-2), n).is_zero());
    }
}

TEST_CASE("capacity") {
    SUBCASE("frozen closed-form values") {
        const auto c2 = capacity_closed_form({2.0, 0.0}, 1e-12);
        CHECK(std::fabs(c2.log_value - (-1.72956804397129062)) < 1e-10);
        CHECK(std::fabs(c2.value - 0.17736100558133758) < 1e-10);
        const auto c1 = capacity_closed_form({1.0, 0.0}, 1e-12);
        CHECK(std::fabs(c1.value - 0.81528200986477776) < 1e-10);
    }
    SUBCASE("two modes agree at lambda = 2, n = 12") {
        const auto closed = capacity_closed_form({2.0, 0.0}, 1e-9);
        const auto limit = capacity_resultant_limit(grat(2), 12);
        CHECK(std::fabs(closed.log_value - limit.log_value) < 1e-3);
    }
    SUBCASE("uncertifiable lambda") {
        CHECK_THROWS_AS(capacity_closed_form(std::polar(1.0, 1.1), 1e-10), gamma_divergence);
    }
}
