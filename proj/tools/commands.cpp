#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "per1/adelic.hpp"
#include "per1/capacity.hpp"
#include "per1/errors.hpp"
#include "per1/experiments.hpp"
#include "per1/pcf.hpp"
#include "per1/render.hpp"
#include "per1/resultant.hpp"
#include "run_config.hpp"

namespace per1::cli {

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

int usage(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return kUsage;
}

int resolve_threads(const RunConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("PER1_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 0;
}

bool parse_sign(const std::string& s, Sign& out) {
    if (s == "+") out = Sign::plus;
    else if (s == "-") out = Sign::minus;
    else return false;
    return true;
}

int cmd_render(const RunConfig& cfg) {
    double x0, x1, y0, y1;
    if (!parse_window(cfg.window, x0, x1, y0, y1)) return usage("invalid window (use xmin:xmax:ymin:ymax with min < max)");
    if (cfg.res < 2 || cfg.res > 8192) return usage("resolution out of range [2, 8192]");
    const auto lam = parse_gauss(cfg.lambda);
    if (!lam || lam->is_zero()) return usage("invalid or zero lambda");
    const cplx lambda = to_complex(*lam);
    const Window w{{(x0 + x1) / 2.0, (y0 + y1) / 2.0}, x1 - x0, y1 - y0};
    const int threads = resolve_threads(cfg);

    if (cfg.mode == "density") {
        Sign sg;
        if (!parse_sign(cfg.sign, sg)) return usage("density mode needs --sign + or -");
        const auto d = measure_density(lambda, w, cfg.res, cfg.res, sg, cfg.tol, threads);
        write_pgm(cfg.out + "_density.pgm", d.density);
        write_sidecar(cfg);
        nlohmann::json j;
        j["mass"] = d.mass;
        j["negative_cells"] = d.negative_cells;
        std::ofstream(cfg.out + "_density.json") << j.dump(2) << '\n';
        std::cout << "density mass over window: " << d.mass << " (negative cells "
                  << d.negative_cells << ")\n";
        return 0;
    }
    if (cfg.mode != "bif") return usage("render mode must be bif or density");

    RenderOptions opt;
    opt.max_period = cfg.max_period;
    opt.budget = cfg.budget;
    opt.threads = threads;
    const auto emit = [&](Sign sg, const std::string& tag) {
        const auto field = render_bifurcation(lambda, w, cfg.res, cfg.res, sg, opt);
        write_pgm(cfg.out + tag + ".pgm", field.rate, 0.0, 12.0);
        return field;
    };
    if (cfg.sign == "both") {
        const auto plus = emit(Sign::plus, "_plus");
        const auto minus = emit(Sign::minus, "_minus");
        write_overlay_ppm(cfg.out + "_overlay.ppm", plus.rate, minus.rate);
    } else {
        Sign sg;
        if (!parse_sign(cfg.sign, sg)) return usage("sign must be +, - or both");
        emit(sg, "");
    }
    write_sidecar(cfg);
    return 0;
}

int cmd_pcf(const RunConfig& cfg) {
    if (cfg.n < 1 || cfg.m < 0 || cfg.m >= cfg.n) return usage("need 0 <= m < n and n >= 1");
    Sign sg;
    if (!parse_sign(cfg.sign, sg)) return usage("sign must be + or -");
    const auto lambda = parse_gauss(cfg.lambda);
    if (!lambda || lambda->is_zero()) return usage("invalid or zero lambda");
    try {
        const auto eq = build_pcf_equation(*lambda, cfg.n, cfg.m, sg);
        const auto roots = solve_all_roots(eq);
        std::ofstream csv(cfg.out + ".csv");
        write_csv(csv, roots);
        std::ofstream(cfg.out + ".json") << to_json(eq, roots) << '\n';
        write_sidecar(cfg);
        double worst = 0.0;
        for (double r : roots.residuals) worst = std::max(worst, r);
        std::cout << "degree " << eq.poly.degree() << ", " << roots.roots.size()
                  << " distinct roots, worst residual " << worst << '\n';
        return roots.verified ? 0 : kFailure;
    } catch (const budget_exceeded& e) {
        return usage(e.what());
    }
}

int cmd_heights(const RunConfig& cfg) {
    const auto lambda = parse_rational(cfg.lambda);
    const auto t = parse_rational(cfg.t);
    if (!lambda || *lambda == 0) return usage("heights needs a nonzero rational lambda (p/q)");
    if (!t) return usage("heights needs a rational t (p/q)");
    Sign sg;
    if (!parse_sign(cfg.sign, sg)) return usage("sign must be + or -");
    const auto rep = height_report(*lambda, *t, sg, cfg.tol);

    nlohmann::json j;
    j["lambda"] = cfg.lambda;
    j["t"] = cfg.t;
    j["sign"] = cfg.sign;
    auto& places = j["places"] = nlohmann::json::array();
    for (const auto& e : rep.places) {
        nlohmann::json pe;
        pe["place"] = to_string(e.place);
        pe["class"] = e.cls.kind == PlaceClass::exceptional ? "exceptional"
                      : e.cls.is_Mn() ? ("M" + std::to_string(e.cls.n))
                                      : ("M0(<=" + std::to_string(e.cls.search_bound) + ")");
        pe["gamma_v"] = e.gamma_v;
        pe["local_height"] = e.local_height;
        pe["tail"] = e.tail;
        if (e.outer_radius_bound > 0.0) pe["outer_radius_bound"] = e.outer_radius_bound;
        places.push_back(pe);
    }
    j["preperiodic"] = rep.preperiodic;
    if (rep.preperiodic) {
        j["period"] = rep.period;
        j["preperiod"] = rep.preperiod;
    }
    j["canonical_height"] = rep.canonical_height;
    j["global_gamma_sum"] = rep.global_gamma_sum;
    const std::string text = j.dump(2);
    std::ofstream(cfg.out + ".json") << text << '\n';
    write_sidecar(cfg);
    std::cout << text << '\n';
    return 0;
}

int cmd_gamma(const RunConfig& cfg) {
    const auto lambda = parse_rational(cfg.lambda);
    if (!lambda || *lambda == 0) return usage("gamma needs a nonzero rational lambda (p/q)");
    nlohmann::json j;
    j["lambda"] = cfg.lambda;
    auto& table = j["places"] = nlohmann::json::array();
    std::istringstream is(cfg.places);
    std::string tok;
    try {
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) continue;
            const Place v = (tok == "inf") ? Place::arch() : Place::prime(std::stoul(tok));
            const double g = gamma_v(*lambda, v, cfg.tol);
            table.push_back({{"place", to_string(v)}, {"gamma_v", g}});
            std::cout << "gamma_" << to_string(v) << " = " << g << '\n';
        }
    } catch (const std::invalid_argument&) {
        return usage("places must be a comma list of primes or inf");
    } catch (const root_of_unity& e) {
        std::cerr << e.what() << '\n';
        return kFailure;
    }
    const auto total = global_gamma_sum(*lambda, cfg.terms);
    j["global_sum"] = total.value;
    j["global_sum_tail"] = total.tail;
    std::cout << "global sum (" << cfg.terms << " terms): " << total.value << "  [tail "
              << total.tail << "]\n";
    std::ofstream(cfg.out + ".json") << j.dump(2) << '\n';
    write_sidecar(cfg);
    return std::fabs(total.value) <= std::max(total.tail, 1e-10) ? 0 : kFailure;
}

int cmd_capacity(const RunConfig& cfg) {
    const auto lambda = parse_gauss(cfg.lambda);
    if (!lambda || lambda->is_zero()) return usage("invalid or zero lambda");
    nlohmann::json j;
    j["lambda"] = cfg.lambda;
    try {
        double closed_log = 0.0, limit_log = 0.0;
        if (cfg.mode == "closed" || cfg.mode == "both") {
            const auto c = capacity_closed_form(to_complex(*lambda), cfg.tol);
            closed_log = c.log_value;
            j["closed_form"] = {{"value", c.value}, {"log", c.log_value}, {"tail", c.tail}};
            std::cout << "closed form:      " << c.value << "  (log " << c.log_value << ")\n";
        }
        if (cfg.mode == "resultant" || cfg.mode == "both") {
            if (!lambda->is_real())
                return usage("resultant mode needs rational lambda");
            const auto c = capacity_resultant_limit(lambda->re, cfg.n);
            limit_log = c.log_value;
            j["resultant_limit"] = {{"value", c.value}, {"log", c.log_value}, {"n", c.n_used}};
            std::cout << "resultant limit:  " << c.value << "  (log " << c.log_value << ", n "
                      << c.n_used << ")\n";
        }
        if (cfg.mode == "both") {
            j["log_gap"] = std::fabs(closed_log - limit_log);
            std::cout << "log gap:          " << std::fabs(closed_log - limit_log) << '\n';
        } else if (cfg.mode != "closed" && cfg.mode != "resultant") {
            return usage("capacity mode must be closed, resultant or both");
        }
    } catch (const gamma_divergence& e) {
        std::cerr << e.what() << '\n';
        return kFailure;
    } catch (const budget_exceeded& e) {
        return usage(e.what());
    }
    std::ofstream(cfg.out + ".json") << j.dump(2) << '\n';
    write_sidecar(cfg);
    return 0;
}

struct CheckOutcome {
    int pass = 0;
    int fail = 0;

    void report(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << '\n';
        ++(ok ? pass : fail);
    }
};

int cmd_verify(const RunConfig& cfg) {
    CheckOutcome out;
    const bool all = cfg.check == "all";
    std::vector<cplx> lambdas{{2.0, 0.0}, {-4.0, 0.0}, {3.0, 0.0}, {0.0, 1.1}, {-2.0, 0.0}};
    if (!cfg.lambda.empty()) {
        const auto l = parse_gauss(cfg.lambda);
        if (!l || l->is_zero()) return usage("invalid or zero lambda");
        lambdas = {to_complex(*l)};
    }

    try {
        if (all || cfg.check == "h12") {
            for (const auto& lambda : lambdas) {
                const auto r = verify_H12(lambda, 1e-11);
                std::ostringstream d;
                d << "lambda=" << lambda << " dev+=" << r.dev_plus << " dev-=" << r.dev_minus;
                out.report("h12", r.dev_plus < 1e-8 && r.dev_minus < 1e-6, d.str());
            }
        }
        if (all || cfg.check == "symmetry") {
            std::mt19937_64 rng(cfg.seed);
            std::uniform_real_distribution<double> mod(0.2, 5.0), arg(0.0, 2.0 * M_PI), tm(0.0, 6.0);
            double worst = 0.0;
            for (int i = 0; i < 20; ++i) {
                cplx lambda = std::polar(mod(rng), arg(rng));
                if (std::fabs(std::abs(lambda) - 1.0) < 0.05) lambda *= 1.1;
                const cplx t = std::polar(tm(rng), arg(rng));
                const double hm = escape_rate({lambda, t}, Sign::minus, 1e-11).value;
                const double hp = escape_rate({lambda, -t}, Sign::plus, 1e-11).value;
                worst = std::max(worst, std::fabs(hm - hp));
            }
            out.report("symmetry", worst < 1e-9, "worst |H^-(t) - H^+(-t)| = " + std::to_string(worst));
        }
        if (all || cfg.check == "resultant") {
            bool ok = true;
            for (const BigRat lambda : {BigRat(2), BigRat(-2), BigRat(1, 2), BigRat(5, 3)})
                for (int n = 1; n <= 4; ++n)
                    ok = ok && (resultant_of_iterate(GaussRat(lambda), n) ==
                                resultant_recursive(GaussRat(lambda), n));
            out.report("resultant", ok, "sylvester == closed form for n <= 4");
        }
        if (all || cfg.check == "gamma") {
            for (const BigRat lambda : {BigRat(1), BigRat(2), BigRat(3, 2)}) {
                const auto g = global_gamma_sum(lambda, cfg.terms);
                out.report("gamma", std::fabs(g.value) <= std::max(g.tail, 1e-10),
                           "lambda=" + lambda.get_str() + " |sum|=" + std::to_string(std::fabs(g.value)));
            }
        }
        if (all || cfg.check == "period3") {
            const auto w = period3_witness();
            std::ostringstream d;
            d << "t0=" << w.t0 << " |l(t0)|=" << w.ell_residual << " |f^3(1)-1|=" << w.orbit_residual;
            out.report("period3",
                       w.t0 > 2.0 * std::sqrt(3.0) && w.ell_residual < 1e-10 &&
                           w.orbit_residual < 1e-8 && std::fabs(w.f1 - 1.0) > 1e-3,
                       d.str());
        }
        if (all || cfg.check == "claim2") {
            double min_val = 1e300;
            for (int k = 0; k <= 2000; ++k) {
                const double theta = M_PI / 3.0 + (4.0 * M_PI / 3.0) * k / 2000.0;
                min_val = std::min(min_val, claim2_profile(theta));
            }
            out.report("claim2", std::fabs(min_val - 2.0) < 1e-6,
                       "min over the arc = " + std::to_string(min_val));
        }
    } catch (const error& e) {
        std::cerr << "verification aborted: " << e.what() << '\n';
        return kFailure;
    }
    if (out.pass + out.fail == 0) return usage("unknown check: " + cfg.check);
    std::cout << out.pass << " passed, " << out.fail << " failed\n";
    return out.fail == 0 ? 0 : kFailure;
}

}  // namespace

int run_command(const RunConfig& cfg) {
    if (cfg.subcommand == "render") return cmd_render(cfg);
    if (cfg.subcommand == "pcf") return cmd_pcf(cfg);
    if (cfg.subcommand == "heights") return cmd_heights(cfg);
    if (cfg.subcommand == "gamma") return cmd_gamma(cfg);
    if (cfg.subcommand == "capacity") return cmd_capacity(cfg);
    if (cfg.subcommand == "verify") return cmd_verify(cfg);
    return usage("unknown subcommand: " + cfg.subcommand);
}

}  // namespace per1::cli
