#include <iostream>

#include "CLI11.hpp"
#include "run_config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"per1 - escape rates, bifurcation measures, PCF parameters and arithmetic"
                 " heights for the family f(z) = lambda z / (z^2 + t z + 1)"};
    app.require_subcommand(1);

    per1::cli::RunConfig cfg;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "output path prefix");
        sub->add_option("--tol", cfg.tol, "tolerance for certified tails");
        sub->add_option("--threads", cfg.threads, "worker threads (0: PER1_THREADS or hardware)");
        sub->add_option("--seed", cfg.seed, "seed for randomized checks/probes");
    };

    auto* render = app.add_subcommand("render", "bifurcation locus / measure-density images");
    render->add_option("--lambda", cfg.lambda, "lambda (rational p/q, decimal, or a+bi)")->required();
    render->add_option("--window", cfg.window, "xmin:xmax:ymin:ymax");
    render->add_option("--res", cfg.res, "grid resolution per axis");
    render->add_option("--sign", cfg.sign, "+, - or both");
    render->add_option("--max-period", cfg.max_period, "attracting-cycle period bound");
    render->add_option("--budget", cfg.budget, "orbit iterations per pixel");
    render->add_option("--mode", cfg.mode, "bif or density");
    add_common(render);

    auto* pcf = app.add_subcommand("pcf", "roots of f_t^n(sign 1) = f_t^m(sign 1)");
    pcf->add_option("--lambda", cfg.lambda)->required();
    pcf->add_option("--n", cfg.n, "outer iterate")->required();
    pcf->add_option("--m", cfg.m, "inner iterate (default 0)");
    pcf->add_option("--sign", cfg.sign, "+ or -");
    add_common(pcf);

    auto* verify = app.add_subcommand("verify", "paper-anchored identity suite");
    verify->add_option("--check", cfg.check, "all|h12|symmetry|resultant|gamma|period3|claim2");
    verify->add_option("--lambda", cfg.lambda, "restrict h12 to one lambda");
    verify->add_option("--terms", cfg.terms, "truncation for global sums");
    add_common(verify);

    auto* heights = app.add_subcommand("heights", "local and canonical heights (lambda, t in Q)");
    heights->add_option("--lambda", cfg.lambda)->required();
    heights->add_option("--t", cfg.t)->required();
    heights->add_option("--sign", cfg.sign, "+ or -");
    add_common(heights);

    auto* gamma = app.add_subcommand("gamma", "gamma_v table and the global product-formula sum");
    gamma->add_option("--lambda", cfg.lambda)->required();
    gamma->add_option("--places", cfg.places, "comma list of primes and inf");
    gamma->add_option("--terms", cfg.terms, "truncation for the global sum");
    add_common(gamma);

    auto* capacity = app.add_subcommand("capacity", "homogeneous capacity of K_lambda");
    capacity->add_option("--lambda", cfg.lambda)->required();
    capacity->add_option("--mode", cfg.mode, "closed, resultant or both");
    capacity->add_option("--n", cfg.n, "resultant level");
    add_common(capacity);
    cfg.n = 12;

    cfg.lambda = "";  // verify: empty selects the built-in lambda list
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (auto* sub : {render, pcf, verify, heights, gamma, capacity})
        if (sub->parsed()) cfg.subcommand = sub->get_name();
    if (cfg.subcommand == "capacity" && cfg.mode == "bif") cfg.mode = "closed";

    try {
        return per1::cli::run_command(cfg);
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << '\n';
        return 1;
    }
}
