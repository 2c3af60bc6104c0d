// SPDX-License-Identifier: Apache-2.0
//
// fockdyn: classify and numerically verify the dynamics of weighted
// composition operators f -> u0 e^{cz} f(az + b) on the Fock space.
//
// Exit codes: 0 success/consistent, 1 numeric inconsistency, 2 config parse
// error, 3 invalid parameters, 4 unbounded operator.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fockdyn/classify.hpp"
#include "fockdyn/config.hpp"
#include "fockdyn/matrix_rep.hpp"
#include "fockdyn/probe.hpp"
#include "fockdyn/scan.hpp"
#include "fockdyn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitUnbounded = 4;

struct Options {
    std::string config_path;
    std::string out_path;
    int n_dim = -1;
    long long seed = -1;
};

int write_output(const fockdyn::RunConfig& cfg, const Options& opt, const std::string& text) {
    std::string path = !opt.out_path.empty() ? opt.out_path : cfg.output;
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "fockdyn: cannot open output file: " << path << "\n";
        return kExitInvalid;
    }
    out << text;
    return kExitOk;
}

int load_config(const Options& opt, fockdyn::RunConfig& cfg) {
    std::ifstream in(opt.config_path, std::ios::binary);
    if (!in) {
        std::cerr << "fockdyn: cannot read config file: " << opt.config_path << "\n";
        return kExitParse;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        cfg = fockdyn::parse_run_config(ss.str());
    } catch (const fockdyn::ConfigError& e) {
        std::cerr << "fockdyn: " << e.what() << "\n";
        return kExitParse;
    } catch (const fockdyn::ParamsError& e) {
        std::cerr << "fockdyn: " << e.what() << "\n";
        return kExitInvalid;
    }
    if (opt.n_dim > 0) cfg.n_dim = opt.n_dim;
    if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
    return kExitOk;
}

int check_format(const fockdyn::RunConfig& cfg, const std::string& natural) {
    if (!cfg.format.empty() && cfg.format != natural) {
        std::cerr << "fockdyn: this command writes " << natural << " output (config asks for "
                  << cfg.format << ")\n";
        return kExitParse;
    }
    return kExitOk;
}

int cmd_classify(const fockdyn::RunConfig& cfg, const Options& opt) {
    if (int rc = check_format(cfg, "json")) return rc;
    fockdyn::ClassificationReport rep = fockdyn::classify(cfg.params);
    return write_output(cfg, opt, fockdyn::json_dump_17(fockdyn::classification_json(rep)));
}

int cmd_verify(const fockdyn::RunConfig& cfg, const Options& opt) {
    if (int rc = check_format(cfg, "json")) return rc;
    try {
        fockdyn::VerifyOutcome out = fockdyn::verify_run(cfg);
        int rc = write_output(cfg, opt, fockdyn::json_dump_17(out.report));
        if (rc != kExitOk) return rc;
        return out.consistent ? kExitOk : kExitInconsistent;
    } catch (const fockdyn::UnboundedError& e) {
        std::cerr << "fockdyn: unbounded operator: " << e.what() << "\n";
        return kExitUnbounded;
    }
}

int cmd_matrix(const fockdyn::RunConfig& cfg, const Options& opt) {
    if (int rc = check_format(cfg, "csv")) return rc;
    fockdyn::MatrixRep rep = fockdyn::build_matrix(cfg.params, cfg.n_dim);
    if (!rep.bounded_params)
        std::cerr << "fockdyn: warning: unbounded parameters, truncation will not converge\n";
    return write_output(cfg, opt, fockdyn::matrix_csv(rep));
}

int cmd_scan(const fockdyn::RunConfig& cfg, const Options& opt) {
    if (int rc = check_format(cfg, "csv")) return rc;
    fockdyn::ClassificationReport cls = fockdyn::classify(cfg.params);
    if (!cls.bounded) {
        std::cerr << "fockdyn: unbounded operator: " << cls.bounded_reason << "\n";
        return kExitUnbounded;
    }
    if (cfg.scan == "kreiss" && !cls.power_bounded) {
        std::cerr << "fockdyn: kreiss scan requires a power-bounded operator\n";
        return kExitInvalid;
    }
    fockdyn::ScanGrid grid = cfg.grid ? *cfg.grid : fockdyn::default_grid();
    fockdyn::ScanKind kind =
        cfg.scan == "kreiss" ? fockdyn::ScanKind::Kreiss : fockdyn::ScanKind::Ritt;
    fockdyn::CMatrix T = fockdyn::build_matrix(cfg.params, cfg.n_dim).entries;
    fockdyn::CMatrix Th = fockdyn::build_matrix(cfg.params, std::max(1, cfg.n_dim / 2)).entries;
    fockdyn::ScanResult full = fockdyn::scan_matrices(T, Th, kind, grid);
    std::vector<fockdyn::ScanPoint> half = fockdyn::scan_points(Th, kind, grid);
    return write_output(cfg, opt, fockdyn::scan_csv(full, half));
}

int cmd_probe(const fockdyn::RunConfig& cfg, const Options& opt) {
    if (int rc = check_format(cfg, "csv")) return rc;
    fockdyn::ClassificationReport cls = fockdyn::classify(cfg.params);
    if (!cls.bounded) {
        std::cerr << "fockdyn: unbounded operator: " << cls.bounded_reason << "\n";
        return kExitUnbounded;
    }
    fockdyn::ExpPoly f = cfg.probe_f ? *cfg.probe_f : fockdyn::ExpPoly::kernel(fockdyn::cplx(1.0));
    std::vector<fockdyn::ExpPoly> targets = cfg.probe_targets;
    if (targets.empty())
        targets = {fockdyn::ExpPoly::basis(0), fockdyn::ExpPoly::basis(1),
                   fockdyn::ExpPoly::basis(2)};
    fockdyn::ProbeResult pr =
        fockdyn::supercyclic_probe(cfg.params, f, targets, cfg.n_max, cfg.n_dim);
    return write_output(cfg, opt, fockdyn::probe_csv(pr));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral and dynamical checks for weighted composition operators on Fock space"};
    app.require_subcommand(1);

    Options opt;
    const char* names[] = {"classify", "verify", "matrix", "scan", "probe"};
    const char* descs[] = {
        "symbolic classification report (JSON)",
        "run the numeric suite and cross-check the symbolic verdicts (JSON)",
        "dump the truncated matrix representation (CSV)",
        "resolvent functional scan over a lambda grid (CSV)",
        "supercyclicity probe: orbit distances and value ratios (CSV)"};
    for (int k = 0; k < 5; ++k) {
        CLI::App* sub = app.add_subcommand(names[k], descs[k]);
        sub->add_option("--config", opt.config_path, "JSON run configuration")->required();
        sub->add_option("--out", opt.out_path, "output path (overrides config)");
        sub->add_option("--n-dim", opt.n_dim, "truncation dimension override");
        sub->add_option("--seed", opt.seed, "PRNG seed override");
    }

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();

    fockdyn::RunConfig cfg;
    if (int rc = load_config(opt, cfg)) return rc;

    try {
        if (cmd == "classify") return cmd_classify(cfg, opt);
        if (cmd == "verify") return cmd_verify(cfg, opt);
        if (cmd == "matrix") return cmd_matrix(cfg, opt);
        if (cmd == "scan") return cmd_scan(cfg, opt);
        if (cmd == "probe") return cmd_probe(cfg, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "fockdyn: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "fockdyn: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitParse;
}
