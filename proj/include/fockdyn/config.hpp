// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockdyn/scan.hpp"
#include "fockdyn/types.hpp"

namespace fockdyn {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParamsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Run configuration, parsed from JSON.  Complex numbers are [re, im]
/// two-element arrays.  Defaults: p=2, n_dim=128, n_max=50, seed=20240001.
struct RunConfig {
    OperatorParams params;
    int n_dim = 128;
    int n_max = 50;
    std::optional<ScanGrid> grid;
    std::uint64_t seed = 20240001;
    std::string output;             // empty: stdout
    std::string format;             // "json" | "csv" | "" (per-command default)
    std::string scan = "ritt";      // scan subcommand: "ritt" | "kreiss"
    std::optional<ExpPoly> probe_f;  // probe subcommand: default K_1
    std::vector<ExpPoly> probe_targets;  // default e_0, e_1, e_2
};

/// Parses and validates; throws ConfigError with a field diagnostic on any
/// malformed input, ParamsError for structurally valid but unusable params
/// (u0 = 0, p < 1, n_dim < 1).
RunConfig parse_run_config(const std::string& text);

/// Inverse of parse_run_config; a serialized config re-parses identically.
std::string serialize_run_config(const RunConfig& cfg);

// JSON helpers shared by the report writers.
nlohmann::ordered_json complex_json(cplx v);
cplx parse_complex(const nlohmann::json& j, const std::string& where);

/// Deterministic JSON text: 2-space indent, doubles at 17 significant
/// digits, negative zero normalized, non-finite values as "inf"/"-inf" strings.
std::string json_dump_17(const nlohmann::ordered_json& j);

/// "%.17g" with -0 normalized; "inf"/"-inf"/"nan" for non-finite.
std::string format_double_17(double v);

}  // namespace fockdyn
