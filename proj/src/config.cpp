// SPDX-License-Identifier: Apache-2.0
#include "fockdyn/config.hpp"

#include <cmath>
#include <cstdio>

namespace fockdyn {

using nlohmann::json;
using nlohmann::ordered_json;

cplx parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError(where + ": expected a complex number as [re, im]");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

ordered_json complex_json(cplx v) {
    double re = v.real() == 0.0 ? 0.0 : v.real();
    double im = v.imag() == 0.0 ? 0.0 : v.imag();
    return ordered_json::array({re, im});
}

namespace {

double get_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + ": expected a number");
    return j.get<double>();
}

ExpPoly parse_expoly(const json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object {alpha, coeffs}");
    ExpPoly f;
    f.alpha = j.contains("alpha") ? parse_complex(j.at("alpha"), where + ".alpha") : cplx(0.0);
    if (j.contains("coeffs")) {
        if (!j.at("coeffs").is_array() || j.at("coeffs").empty())
            throw ConfigError(where + ".coeffs: expected a nonempty array");
        f.coeffs.clear();
        int k = 0;
        for (const auto& e : j.at("coeffs"))
            f.coeffs.push_back(parse_complex(e, where + ".coeffs[" + std::to_string(k++) + "]"));
    }
    return f;
}

ordered_json expoly_json(const ExpPoly& f) {
    ordered_json j;
    j["alpha"] = complex_json(f.alpha);
    ordered_json cs = ordered_json::array();
    for (const auto& c : f.coeffs) cs.push_back(complex_json(c));
    j["coeffs"] = std::move(cs);
    return j;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be an object");

    RunConfig cfg;
    if (!root.contains("params") || !root.at("params").is_object())
        throw ConfigError("config.params: required object missing");
    const json& p = root.at("params");

    double pp = p.contains("p") ? get_number(p.at("p"), "params.p") : 2.0;
    cplx a = p.contains("a") ? parse_complex(p.at("a"), "params.a") : cplx(0.0);
    cplx b = p.contains("b") ? parse_complex(p.at("b"), "params.b") : cplx(0.0);
    cplx c = p.contains("c") ? parse_complex(p.at("c"), "params.c") : cplx(0.0);
    if (!p.contains("u0")) throw ConfigError("params.u0: required field missing");
    cplx u0 = parse_complex(p.at("u0"), "params.u0");
    for (const auto& [key, _] : p.items())
        if (key != "p" && key != "a" && key != "b" && key != "c" && key != "u0")
            throw ConfigError("params." + key + ": unknown field");
    try {
        cfg.params = OperatorParams(pp, a, b, c, u0);
    } catch (const std::invalid_argument& e) {
        throw ParamsError(e.what());
    }

    for (const auto& [key, val] : root.items()) {
        if (key == "params") continue;
        if (key == "n_dim") {
            cfg.n_dim = static_cast<int>(get_number(val, "n_dim"));
        } else if (key == "n_max") {
            cfg.n_max = static_cast<int>(get_number(val, "n_max"));
        } else if (key == "seed") {
            double s = get_number(val, "seed");
            if (s < 0) throw ConfigError("seed: must be nonnegative");
            cfg.seed = val.get<std::uint64_t>();
        } else if (key == "output") {
            if (!val.is_string()) throw ConfigError("output: expected a string");
            cfg.output = val.get<std::string>();
        } else if (key == "format") {
            if (!val.is_string()) throw ConfigError("format: expected a string");
            cfg.format = val.get<std::string>();
            if (cfg.format != "json" && cfg.format != "csv")
                throw ConfigError("format: must be \"json\" or \"csv\"");
        } else if (key == "scan") {
            if (!val.is_string()) throw ConfigError("scan: expected a string");
            cfg.scan = val.get<std::string>();
            if (cfg.scan != "ritt" && cfg.scan != "kreiss")
                throw ConfigError("scan: must be \"ritt\" or \"kreiss\"");
        } else if (key == "grid") {
            if (!val.is_object()) throw ConfigError("grid: expected an object");
            ScanGrid g;
            if (!val.contains("rho_values") || !val.contains("theta_values"))
                throw ConfigError("grid: rho_values and theta_values are required");
            for (const auto& e : val.at("rho_values")) {
                double rho = get_number(e, "grid.rho_values[]");
                if (rho <= 0) throw ConfigError("grid.rho_values[]: must be positive");
                g.rho_values.push_back(rho);
            }
            for (const auto& e : val.at("theta_values")) {
                double th = get_number(e, "grid.theta_values[]");
                if (th <= -M_PI || th > M_PI)
                    throw ConfigError("grid.theta_values[]: must lie in (-pi, pi]");
                g.theta_values.push_back(th);
            }
            if (g.rho_values.empty() || g.theta_values.empty())
                throw ConfigError("grid: empty rho or theta list");
            cfg.grid = std::move(g);
        } else if (key == "probe_f") {
            cfg.probe_f = parse_expoly(val, "probe_f");
        } else if (key == "probe_targets") {
            if (!val.is_array()) throw ConfigError("probe_targets: expected an array");
            int k = 0;
            for (const auto& e : val)
                cfg.probe_targets.push_back(
                    parse_expoly(e, "probe_targets[" + std::to_string(k++) + "]"));
        } else {
            throw ConfigError(key + ": unknown field");
        }
    }
    if (cfg.n_dim < 1) throw ParamsError("n_dim: must be >= 1");
    if (cfg.n_max < 1) throw ParamsError("n_max: must be >= 1");
    return cfg;
}

std::string serialize_run_config(const RunConfig& cfg) {
    ordered_json j;
    ordered_json p;
    p["p"] = cfg.params.p;
    p["a"] = complex_json(cfg.params.a);
    p["b"] = complex_json(cfg.params.b);
    p["c"] = complex_json(cfg.params.c);
    p["u0"] = complex_json(cfg.params.u0);
    j["params"] = std::move(p);
    j["n_dim"] = cfg.n_dim;
    j["n_max"] = cfg.n_max;
    if (cfg.grid) {
        ordered_json g;
        g["rho_values"] = cfg.grid->rho_values;
        g["theta_values"] = cfg.grid->theta_values;
        j["grid"] = std::move(g);
    }
    j["seed"] = cfg.seed;
    if (!cfg.output.empty()) j["output"] = cfg.output;
    if (!cfg.format.empty()) j["format"] = cfg.format;
    j["scan"] = cfg.scan;
    if (cfg.probe_f) j["probe_f"] = expoly_json(*cfg.probe_f);
    if (!cfg.probe_targets.empty()) {
        ordered_json ts = ordered_json::array();
        for (const auto& t : cfg.probe_targets) ts.push_back(expoly_json(t));
        j["probe_targets"] = std::move(ts);
    }
    return json_dump_17(j);
}

std::string format_double_17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void dump_rec(const ordered_json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string pad1(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad1;
                out += ordered_json(k).dump();
                out += ": ";
                dump_rec(v, out, indent + 1);
            }
            out += '\n';
            out += pad;
            out += '}';
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Flat arrays of numbers stay on one line.
            bool scalars = true;
            for (const auto& v : j)
                if (v.is_structured()) scalars = false;
            out += '[';
            if (!scalars) out += '\n';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += scalars ? ", " : ",\n";
                first = false;
                if (!scalars) out += pad1;
                dump_rec(v, out, indent + 1);
            }
            if (!scalars) {
                out += '\n';
                out += pad;
            }
            out += ']';
            return;
        }
        case ordered_json::value_t::number_float: {
            double v = j.get<double>();
            if (std::isnan(v) || std::isinf(v)) {
                out += '"';
                out += format_double_17(v);
                out += '"';
            } else {
                out += format_double_17(v);
            }
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string json_dump_17(const ordered_json& j) {
    std::string out;
    dump_rec(j, out, 0);
    out += '\n';
    return out;
}

}  // namespace fockdyn
