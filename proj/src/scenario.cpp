#include "hsrlink/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hsrlink/errors.hpp"
#include "json.hpp"

namespace hsrlink {

namespace {

void require(bool ok, const std::string& field, const std::string& bound) {
    if (!ok) throw invalid_input("scenario field '" + field + "' violates " + bound);
}

} // namespace

void validate_scenario(const Scenario& s) {
    require(std::isfinite(s.d0) && s.d0 > 0, "d0", "d0 > 0");
    require(std::isfinite(s.h0) && s.h0 > 0, "h0", "h0 > 0");
    require(std::isfinite(s.l) && s.l > 0, "l", "l > 0");
    require(std::isfinite(s.v0) && s.v0 > 0, "v0", "v0 > 0");
    require(std::isfinite(s.alpha) && s.alpha >= 1, "alpha", "alpha >= 1");
    require(std::isfinite(s.b) && s.b > 0, "b", "b > 0");
    require(std::isfinite(s.kappa) && s.kappa > 0, "kappa", "kappa > 0");
    require(s.panels >= 2 && s.panels % 2 == 0, "panels", "even and >= 2");
    require(std::isfinite(s.rate_tol) && s.rate_tol > 0 && s.rate_tol < 1,
            "rate_tol", "0 < rate_tol < 1");
    require(std::isfinite(s.power_tol) && s.power_tol > 0 && s.power_tol < 1,
            "power_tol", "0 < power_tol < 1");
}

Scenario default_scenario() {
    return Scenario{
        .d0 = 2.0,
        .h0 = 10.0,
        .l = 500.0,
        .v0 = 100.0,
        .alpha = 2.0,
        .b = 20e6,
        .kappa = 10.0,
        .panels = 4096,
        .rate_tol = 1e-6,
        .power_tol = 1e-9,
    };
}

Scenario scenario_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("scenario parse failure: ") + e.what());
    }
    if (!j.is_object()) throw invalid_input("scenario file is not a JSON object");

    static const char* known[] = {"d0", "h0", "l", "v0", "alpha", "b",
                                  "kappa", "panels", "rate_tol", "power_tol"};
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw invalid_input("unknown scenario key '" + key + "'");
    }

    auto num = [&](const char* key) -> double {
        if (!j.contains(key)) throw invalid_input(std::string("missing scenario key '") + key + "'");
        if (!j[key].is_number()) throw invalid_input(std::string("scenario key '") + key + "' is not a number");
        return j[key].get<double>();
    };

    Scenario s;
    s.d0 = num("d0");
    s.h0 = num("h0");
    s.l = num("l");
    s.v0 = num("v0");
    s.alpha = num("alpha");
    s.b = num("b");
    s.kappa = num("kappa");
    if (!j["panels"].is_number_integer())
        throw invalid_input("scenario key 'panels' is not an integer");
    s.panels = j["panels"].get<int>();
    s.rate_tol = num("rate_tol");
    s.power_tol = num("power_tol");
    validate_scenario(s);
    return s;
}

std::string scenario_to_json(const Scenario& s) {
    nlohmann::json j;
    j["d0"] = s.d0;
    j["h0"] = s.h0;
    j["l"] = s.l;
    j["v0"] = s.v0;
    j["alpha"] = s.alpha;
    j["b"] = s.b;
    j["kappa"] = s.kappa;
    j["panels"] = s.panels;
    j["rate_tol"] = s.rate_tol;
    j["power_tol"] = s.power_tol;
    return j.dump(2) + "\n";
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json(buf.str());
}

void save_scenario(const Scenario& s, const std::string& path) {
    validate_scenario(s);
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot write scenario file '" + path + "'");
    out << scenario_to_json(s);
}

} // namespace hsrlink
