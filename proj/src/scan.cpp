// SPDX-License-Identifier: Apache-2.0
#include "fockdyn/scan.hpp"

#include <algorithm>
#include <cmath>

#include "fockdyn/classify.hpp"
#include "fockdyn/config.hpp"
#include "fockdyn/rng.hpp"
#include "fockdyn/symbol.hpp"
#include "fockdyn/threading.hpp"

namespace fockdyn {

namespace {

constexpr double kCircleEps = 1e-9;

cplx grid_lambda(ScanKind kind, double rho, double theta) {
    cplx dir = std::polar(1.0, theta);
    return kind == ScanKind::Ritt ? 1.0 + rho * dir : (1.0 + rho) * dir;
}

double functional(ScanKind kind, const CMatrix& T, cplx lambda) {
    double r = resolvent_norm(T, lambda);
    return kind == ScanKind::Ritt ? std::abs(lambda - 1.0) * r : (std::abs(lambda) - 1.0) * r;
}

}  // namespace

ScanGrid default_grid() {
    ScanGrid g;
    const int nr = 25, nt = 64;
    for (int k = 0; k < nr; ++k)
        g.rho_values.push_back(1e-4 * std::pow(2.0 / 1e-4, static_cast<double>(k) / (nr - 1)));
    for (int j = 1; j <= nt; ++j) g.theta_values.push_back(-M_PI + j * (2.0 * M_PI / nt));
    return g;
}

std::vector<ScanPoint> scan_points(const CMatrix& T, ScanKind kind, const ScanGrid& grid,
                                   std::vector<cplx>* skipped) {
    std::vector<cplx> lambdas;
    for (double rho : grid.rho_values)
        for (double theta : grid.theta_values) {
            cplx lam = grid_lambda(kind, rho, theta);
            if (std::abs(lam) > 1.0 + kCircleEps) lambdas.push_back(lam);
        }
    if (lambdas.empty()) throw std::invalid_argument("scan: empty grid after filtering");

    std::vector<double> values(lambdas.size(), -1.0);  // -1 marks a skipped point
    const auto eval_one = [&](std::size_t k) {
        try {
            values[k] = functional(kind, T, lambdas[k]);
        } catch (const SingularMatrixError&) {
            values[k] = -1.0;
        }
    };
    if (threading::parallel_enabled()) {
        const int count = static_cast<int>(lambdas.size());
#pragma omp parallel for schedule(dynamic) num_threads(threading::thread_count())
        for (int k = 0; k < count; ++k) eval_one(static_cast<std::size_t>(k));
    } else {
        for (std::size_t k = 0; k < lambdas.size(); ++k) eval_one(k);
    }

    std::vector<ScanPoint> out;
    out.reserve(lambdas.size());
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        if (values[k] < 0.0) {
            if (skipped) skipped->push_back(lambdas[k]);
            continue;
        }
        out.push_back(ScanPoint{lambdas[k], values[k]});
    }
    return out;
}

ScanResult scan_matrices(const CMatrix& T, const CMatrix& T_half, ScanKind kind,
                         const ScanGrid& grid) {
    ScanResult r;
    r.kind = kind;
    r.n_dim = T.n;
    r.n_dim_half = T_half.n;
    r.points = scan_points(T, kind, grid, &r.skipped);
    for (const auto& p : r.points) {
        if (p.value > r.supremum) {
            r.supremum = p.value;
            r.argmax = p.lambda;
        }
    }
    for (const auto& p : scan_points(T_half, kind, grid, nullptr))
        r.supremum_half = std::max(r.supremum_half, p.value);
    double hi = std::max(r.supremum, r.supremum_half);
    r.verdict_hint =
        (std::abs(r.supremum - r.supremum_half) <= 0.10 * hi) ? "Bounded" : "Diverging";
    return r;
}

ScanResult ritt_functional_scan(const OperatorParams& P, int N, const ScanGrid& grid) {
    if (!classify(P).bounded)
        throw std::invalid_argument("ritt_functional_scan: operator is unbounded");
    CMatrix T = build_matrix(P, N).entries;
    CMatrix Th = build_matrix(P, std::max(1, N / 2)).entries;
    return scan_matrices(T, Th, ScanKind::Ritt, grid);
}

ScanResult kreiss_functional_scan(const OperatorParams& P, int N, const ScanGrid& grid) {
    ClassificationReport rep = classify(P);
    if (!rep.bounded)
        throw std::invalid_argument("kreiss_functional_scan: operator is unbounded");
    if (!rep.power_bounded)
        throw std::invalid_argument("kreiss_functional_scan: operator is not power bounded");
    CMatrix T = build_matrix(P, N).entries;
    CMatrix Th = build_matrix(P, std::max(1, N / 2)).entries;
    return scan_matrices(T, Th, ScanKind::Kreiss, grid);
}

std::string scan_csv(const ScanResult& full, const std::vector<ScanPoint>& half_points) {
    std::string out = "lambda_re,lambda_im,functional,n_dim\n";
    auto emit = [&](const std::vector<ScanPoint>& pts, int n_dim) {
        for (const auto& p : pts) {
            out += format_double_17(p.lambda.real());
            out += ',';
            out += format_double_17(p.lambda.imag());
            out += ',';
            out += format_double_17(p.value);
            out += ',';
            out += std::to_string(n_dim);
            out += '\n';
        }
    };
    emit(full.points, full.n_dim);
    emit(half_points, full.n_dim_half);
    return out;
}

std::vector<NzPoint> nagy_zemanek_sequence(const OperatorParams& P, int N, int n_max) {
    ClassificationReport rep = classify(P);
    if (!rep.bounded)
        throw std::invalid_argument("nagy_zemanek_sequence: operator is unbounded");
    CMatrix T = build_matrix(P, N).entries;
    double w = 0.0;
    double wgap = 0.0;
    bool has_lb = rep.has_fixed_point;
    if (has_lb) {
        w = std::abs(rep.weight_at_z0);
        wgap = std::abs(rep.weight_at_z0 - 1.0);
    }
    std::vector<NzPoint> out;
    CMatrix Pn = T;
    double wn = has_lb ? w : 0.0;
    for (int n = 1; n <= n_max; ++n) {
        CMatrix Pn1 = matmul(Pn, T);
        double d = op_norm(sub(Pn1, Pn));
        NzPoint pt;
        pt.n = n;
        pt.diff_norm = d;
        pt.scaled = n * d;
        pt.lower_bound = has_lb ? n * wn * wgap : std::nan("");
        out.push_back(pt);
        Pn = std::move(Pn1);
        if (has_lb) wn *= w;
    }
    return out;
}

UncondEstimate uncond_estimate_matrix(const CMatrix& T, int n_terms, int trials,
                                      std::uint64_t seed) {
    UncondEstimate r;
    r.n_terms = n_terms;
    r.trials = trials;
    r.seed = seed;

    std::vector<CMatrix> diffs;
    diffs.reserve(static_cast<std::size_t>(n_terms));
    CMatrix prev = CMatrix::identity(T.n);
    for (int n = 1; n <= n_terms; ++n) {
        CMatrix cur = matmul(prev, T);
        diffs.push_back(sub(cur, prev));
        prev = std::move(cur);
    }
    for (const auto& D : diffs) r.triangle_sum += op_norm(D);

    // Signs drawn up front so trial evaluation order cannot matter.
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> signs(static_cast<std::size_t>(trials));
    for (auto& row : signs) {
        row.resize(static_cast<std::size_t>(n_terms));
        for (auto& s : row) s = rng.sign();
    }
    std::vector<double> trial_norm(static_cast<std::size_t>(trials), 0.0);
    const auto run_trial = [&](int t) {
        CMatrix S(T.n);
        for (int n = 0; n < n_terms; ++n)
            axpy(cplx(static_cast<double>(signs[static_cast<std::size_t>(t)][static_cast<std::size_t>(n)]), 0.0),
                 diffs[static_cast<std::size_t>(n)], S);
        trial_norm[static_cast<std::size_t>(t)] = op_norm(S);
    };
    if (threading::parallel_enabled() && trials > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threading::thread_count())
        for (int t = 0; t < trials; ++t) run_trial(t);
    } else {
        for (int t = 0; t < trials; ++t) run_trial(t);
    }
    for (double v : trial_norm) r.random_max = std::max(r.random_max, v);

    {
        CMatrix S(T.n);
        for (const auto& D : diffs) axpy(cplx(1.0), D, S);
        r.all_ones = op_norm(S);
    }
    {
        // Greedy adversarial signs: each step keeps the larger partial sum,
        // which never decreases the norm.
        CMatrix S(T.n);
        double prev_norm = 0.0;
        for (const auto& D : diffs) {
            CMatrix plus = add(S, D);
            CMatrix minus = sub(S, D);
            double np = op_norm(plus), nm = op_norm(minus);
            double cur = std::max(np, nm);
            S = np >= nm ? std::move(plus) : std::move(minus);
            if (cur < prev_norm * (1.0 - 1e-9)) r.greedy_monotone = false;
            prev_norm = cur;
        }
        r.greedy = prev_norm;
    }
    r.estimate = std::max({r.random_max, r.all_ones, r.greedy});
    return r;
}

UncondEstimate unconditional_ritt_estimate(const OperatorParams& P, int N, int n_terms,
                                           int trials, std::uint64_t seed) {
    if (!classify(P).bounded)
        throw std::invalid_argument("unconditional_ritt_estimate: operator is unbounded");
    CMatrix T = build_matrix(P, N).entries;
    return uncond_estimate_matrix(T, n_terms, trials, seed);
}

}  // namespace fockdyn
