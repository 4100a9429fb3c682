#include <cmath>

#include "doctest.h"
#include "per1/errors.hpp"
#include "per1/experiments.hpp"
#include "per1/render.hpp"

using namespace per1;

TEST_CASE("H12 verification") {
    SUBCASE("lambda = 2 and -4: both identities tight") {
        for (const cplx lambda : {cplx{2.0, 0.0}, cplx{-4.0, 0.0}}) {
            const auto r = verify_H12(lambda, 1e-11);
            CHECK(r.dev_plus < 1e-8);
            CHECK(r.dev_minus < 1e-6);
        }
    }
    SUBCASE("lambda = -2 equality case: H^+ = H^- = log 2") {
        const auto r = verify_H12({-2.0, 0.0}, 1e-11);
        CHECK(std::fabs(r.h_plus - std::log(2.0)) < 1e-9);
        CHECK(std::fabs(r.h_minus - std::log(2.0)) < 1e-9);
    }
}

TEST_CASE("claim 2 profile") {
    SUBCASE("anchors") {
        CHECK(std::fabs(claim2_profile(M_PI) - 2.0) < 1e-12);            // u = -1
        CHECK(std::fabs(claim2_profile(M_PI / 3.0) - 2.0) < 1e-9);       // u = 1/2
        CHECK(std::fabs(claim2_profile(M_PI / 2.0) - std::sqrt(10.0)) < 1e-12);  // u = 0
    }
    SUBCASE("internal closed-form assertion holds across the arc") {
        for (int k = 0; k <= 100; ++k) {
            const double theta = M_PI / 3.0 + (5.0 * M_PI / 3.0 - M_PI / 3.0) * k / 100.0;
            CHECK(claim2_profile(theta) >= 2.0 - 1e-12);
        }
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(claim2_profile(0.1), error);
    }
}

TEST_CASE("distinct measure report") {
    SUBCASE("lambda = -4: strict gap") {
        const auto r = distinct_measure_report({-4.0, 0.0});
        CHECK(r.gap > 1e-3);
    }
    SUBCASE("lambda = -2: equality case") {
        const auto r = distinct_measure_report({-2.0, 0.0});
        CHECK(std::fabs(r.gap) < 1e-8);
    }
    SUBCASE("lambda = i/2: strict gap inside the unit disk") {
        const auto r = distinct_measure_report({0.0, 0.5});
        CHECK(r.gap > 0.0);
    }
    SUBCASE("domain guard") {
        CHECK_THROWS_AS(distinct_measure_report({2.0, 0.0}), error);
    }
}

TEST_CASE("measure density") {
    const Window w{{0.0, 0.0}, 8.0, 8.0};
    const auto plus = measure_density({2.0, 0.0}, w, 129, 129, Sign::plus, 1e-4);
    SUBCASE("harmonic far field: density ~ 0 in the unbounded stable region") {
        // corner cells sit deep in the unbounded component
        CHECK(std::fabs(plus.density.at(2, 2)) < 1e-4);
        CHECK(std::fabs(plus.density.at(126, 126)) < 1e-4);
    }
    SUBCASE("reflection symmetry with the minus field") {
        const auto minus = measure_density({2.0, 0.0}, w, 129, 129, Sign::minus, 1e-4);
        for (int iy = 1; iy < 128; iy += 7)
            for (int ix = 1; ix < 128; ix += 7) {
                const double a = minus.density.at(ix, iy);
                const double b = plus.density.at(128 - ix, 128 - iy);
                CHECK(std::fabs(a - b) < 1e-6);
            }
    }
    SUBCASE("mass: the probability-normalized field 2H integrates to ~1") {
        CHECK(std::fabs(2.0 * plus.mass - 1.0) < 0.1);
    }
    SUBCASE("negative cells are confined to the locus neighborhood (flagged)") {
        CHECK(plus.negative_cells < 129 * 129 / 20);
    }
}

TEST_CASE("render masks") {
    RenderOptions opt;
    opt.budget = 1500;
    opt.max_period = 48;
    const Window w{{0.0, 0.0}, 6.0, 6.0};
    SUBCASE("lambda = 0.5: plus and minus masks are disjoint") {
        const auto plus = locus_mask(render_bifurcation({0.5, 0.0}, w, 128, 128, Sign::plus, opt));
        const auto minus = locus_mask(render_bifurcation({0.5, 0.0}, w, 128, 128, Sign::minus, opt));
        int overlap = 0, plus_cells = 0;
        for (size_t i = 0; i < plus.values.size(); ++i) {
            plus_cells += plus.values[i] > 0.5;
            overlap += (plus.values[i] > 0.5 && minus.values[i] > 0.5);
        }
        CHECK(plus_cells > 0);
        CHECK(overlap == 0);
    }
    SUBCASE("mask reflection: minus mask equals the t -> -t image of plus") {
        const auto plus = locus_mask(render_bifurcation({0.5, 0.0}, w, 65, 65, Sign::plus, opt));
        const auto minus = locus_mask(render_bifurcation({0.5, 0.0}, w, 65, 65, Sign::minus, opt));
        int mism = 0;
        for (int iy = 0; iy < 65; ++iy)
            for (int ix = 0; ix < 65; ++ix)
                mism += plus.at(ix, iy) != minus.at(64 - ix, 64 - iy);
        CHECK(mism == 0);
    }
    SUBCASE("render determinism across thread counts") {
        RenderOptions seq = opt;
        seq.threads = 1;
        RenderOptions par = opt;
        par.threads = 4;
        const auto a = render_bifurcation({0.5, 0.0}, w, 32, 32, Sign::plus, seq);
        const auto b = render_bifurcation({0.5, 0.0}, w, 32, 32, Sign::plus, par);
        for (size_t i = 0; i < a.rate.values.size(); ++i) {
            if (std::isnan(a.rate.values[i])) CHECK(std::isnan(b.rate.values[i]));
            else CHECK(a.rate.values[i] == b.rate.values[i]);
            CHECK(a.period[i] == b.period[i]);
        }
    }
}

TEST_CASE("equidistribution experiment (small levels)") {
    const auto rep = equidistribution_experiment(GaussRat(BigRat(-4)), Sign::plus, {4, 6}, 8, 8.0, 1);
    REQUIRE(rep.levels.size() == 2);
    CHECK(rep.levels[0].root_count == 8);
    CHECK(rep.levels[1].root_count == 32);
    CHECK(rep.levels[0].max_residual < 1e-8);
    CHECK(rep.levels[1].max_residual < 1e-8);
    REQUIRE(rep.successive_diffs.size() == 1);
    CHECK(rep.successive_diffs[0] < 0.5);
    // the fitted offset tracks gamma(lambda): u_S ~ 2H - gamma as n grows
    CHECK(std::fabs(rep.fitted_offset - gamma_arch({-4.0, 0.0}, 1e-10)) < 0.2);
    CHECK(rep.corrected_error <= rep.raw_error + 1e-12);
}

TEST_CASE("sign symmetry of clouds") {
    const auto plus = equidistribution_experiment(GaussRat(BigRat(-4)), Sign::plus, {5}, 4, 8.0, 2);
    const auto minus = equidistribution_experiment(GaussRat(BigRat(-4)), Sign::minus, {5}, 4, 8.0, 2);
    for (const auto& z : plus.levels[0].cloud.points) {
        double best = 1e300;
        for (const auto& s : minus.levels[0].cloud.points) best = std::min(best, std::abs(s + z));
        CHECK(best < 1e-8);
    }
}
