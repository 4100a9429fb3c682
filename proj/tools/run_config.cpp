#include "run_config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace per1::cli {

std::string to_json(const RunConfig& c) {
    nlohmann::json j;
    j["subcommand"] = c.subcommand;
    j["lambda"] = c.lambda;
    j["t"] = c.t;
    j["window"] = c.window;
    j["res"] = c.res;
    j["n"] = c.n;
    j["m"] = c.m;
    j["sign"] = c.sign;
    j["tol"] = c.tol;
    j["max_period"] = c.max_period;
    j["budget"] = c.budget;
    j["mode"] = c.mode;
    j["check"] = c.check;
    j["places"] = c.places;
    j["terms"] = c.terms;
    j["out"] = c.out;
    j["threads"] = c.threads;
    j["seed"] = c.seed;
    return j.dump(2);
}

RunConfig config_from_json(const std::string& json) {
    const auto j = nlohmann::json::parse(json);
    RunConfig c;
    c.subcommand = j.at("subcommand").get<std::string>();
    c.lambda = j.at("lambda").get<std::string>();
    c.t = j.at("t").get<std::string>();
    c.window = j.at("window").get<std::string>();
    c.res = j.at("res").get<int>();
    c.n = j.at("n").get<int>();
    c.m = j.at("m").get<int>();
    c.sign = j.at("sign").get<std::string>();
    c.tol = j.at("tol").get<double>();
    c.max_period = j.at("max_period").get<int>();
    c.budget = j.at("budget").get<int>();
    c.mode = j.at("mode").get<std::string>();
    c.check = j.at("check").get<std::string>();
    c.places = j.at("places").get<std::string>();
    c.terms = j.at("terms").get<int>();
    c.out = j.at("out").get<std::string>();
    c.threads = j.at("threads").get<int>();
    c.seed = j.at("seed").get<unsigned long>();
    return c;
}

void write_sidecar(const RunConfig& cfg) {
    std::ofstream os(cfg.out + ".config.json");
    if (os) os << to_json(cfg) << '\n';
}

bool parse_window(const std::string& s, double& x0, double& x1, double& y0, double& y1) {
    std::istringstream is(s);
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(is >> x0 >> c1 >> x1 >> c2 >> y0 >> c3 >> y1)) return false;
    if (c1 != ':' || c2 != ':' || c3 != ':') return false;
    std::string rest;
    if (is >> rest) return false;
    return x0 < x1 && y0 < y1;
}

}  // namespace per1::cli
