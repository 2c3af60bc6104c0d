// SPDX-License-Identifier: Apache-2.0
#include "fockdyn/matrix_rep.hpp"

#include <cmath>
#include <cstdio>

#include "fockdyn/classify.hpp"
#include "fockdyn/threading.hpp"

namespace fockdyn {

namespace {

struct LogParts {
    bool zero;    // base is exactly 0, so any positive power kills the term
    double logmag;
    double arg;
};

LogParts log_parts(cplx x) {
    if (x == cplx(0.0)) return {true, 0.0, 0.0};
    return {false, std::log(std::abs(x)), std::arg(x)};
}

void build_row(const OperatorParams& P, int N, int n, const LogParts& la, const LogParts& lb,
               const LogParts& lc, CMatrix& T) {
    const double lg_n = std::lgamma(n + 1.0);
    for (int m = 0; m < N; ++m) {
        const double lg_m = std::lgamma(m + 1.0);
        const int jmax = std::min(m, n);
        // Pass 1: log-magnitudes of the admissible terms.
        double logs[2048];
        double args[2048];
        int count = 0;
        double maxlog = -1e308;
        for (int j = 0; j <= jmax; ++j) {
            if (la.zero && j > 0) continue;
            if (lb.zero && m - j > 0) continue;
            if (lc.zero && n - j > 0) continue;
            double lm = 0.5 * (lg_n + lg_m) - std::lgamma(j + 1.0) -
                        std::lgamma(static_cast<double>(m - j) + 1.0) -
                        std::lgamma(static_cast<double>(n - j) + 1.0) + j * la.logmag +
                        (m - j) * lb.logmag + (n - j) * lc.logmag;
            logs[count] = lm;
            args[count] = j * la.arg + (m - j) * lb.arg + (n - j) * lc.arg;
            ++count;
            if (lm > maxlog) maxlog = lm;
        }
        if (count == 0) {
            T.at(n, m) = 0.0;
            continue;
        }
        // Pass 2: sum, dropping terms 60 e-folds below the peak.
        cplx s = 0.0;
        for (int t = 0; t < count; ++t) {
            if (logs[t] < maxlog - 60.0) continue;
            s += std::exp(logs[t] - maxlog) * std::polar(1.0, args[t]);
        }
        T.at(n, m) = P.u0 * std::exp(maxlog) * s;
    }
}

}  // namespace

MatrixRep build_matrix(const OperatorParams& P, int N) {
    if (N < 1) throw std::invalid_argument("build_matrix: N must be >= 1");
    if (P.p != 2.0)
        throw std::invalid_argument("build_matrix: matrix representation requires p = 2");
    if (N > 2048) throw std::invalid_argument("build_matrix: N > 2048 unsupported");
    MatrixRep rep;
    rep.n_dim = N;
    rep.params = P;
    rep.bounded_params = classify(P).bounded;
    rep.entries = CMatrix(N);

    const LogParts la = log_parts(P.a), lb = log_parts(P.b), lc = log_parts(P.c);
    CMatrix& T = rep.entries;
    if (threading::parallel_enabled()) {
#pragma omp parallel for schedule(static) num_threads(threading::thread_count())
        for (int n = 0; n < N; ++n) build_row(P, N, n, la, lb, lc, T);
    } else {
        for (int n = 0; n < N; ++n) build_row(P, N, n, la, lb, lc, T);
    }
    return rep;
}

std::string format_complex_j(cplx v) {
    double re = v.real(), im = v.imag();
    if (re == 0.0) re = 0.0;  // normalize -0
    if (im == 0.0) im = 0.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%s%.17gj", re, std::signbit(im) ? "-" : "+",
                  std::abs(im));
    return buf;
}

std::string matrix_csv(const MatrixRep& M) {
    std::string out;
    out.reserve(static_cast<std::size_t>(M.n_dim) * M.n_dim * 8);
    for (int i = 0; i < M.n_dim; ++i) {
        for (int j = 0; j < M.n_dim; ++j) {
            if (j) out += ',';
            out += format_complex_j(M.entries.at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace fockdyn
