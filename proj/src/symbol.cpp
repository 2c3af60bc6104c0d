// SPDX-License-Identifier: Apache-2.0
#include "fockdyn/symbol.hpp"

#include <cmath>
#include <limits>

namespace fockdyn {

namespace {

// |x|^k * phase(x)^k as (log-magnitude, unit phase); k == 0 is exactly 1.
struct LogPow {
    double logmag;
    double arg;
};

LogPow log_pow(cplx x, int k) {
    if (k == 0) return {0.0, 0.0};
    return {k * std::log(std::abs(x)), k * std::arg(x)};
}

}  // namespace

ExpPoly ExpPoly::basis(int m) {
    if (m < 0) throw std::invalid_argument("basis: m must be >= 0");
    std::vector<cplx> c(static_cast<std::size_t>(m) + 1, cplx(0.0));
    c[static_cast<std::size_t>(m)] = std::exp(-0.5 * std::lgamma(m + 1.0));
    return ExpPoly{cplx(0.0), std::move(c)};
}

IterateParams iterate_params(const OperatorParams& P, int n) {
    if (n < 1) throw std::invalid_argument("iterate_params: n must be >= 1");
    IterateParams it;
    it.n = n;
    const cplx a = P.a, b = P.b, c = P.c;
    if (approx_eq(a, 1.0)) {
        // psi^n(z) = z + n b; the exponent sum telescopes to c b n(n-1)/2.
        it.a_n = 1.0;
        it.b_n = static_cast<double>(n) * b;
        it.c_n = static_cast<double>(n) * c;
        cplx u0n = 1.0;
        for (int k = 0; k < n; ++k) u0n *= P.u0;
        it.u0_n = u0n * std::exp(c * b * (static_cast<double>(n) * (n - 1.0) / 2.0));
        return it;
    }
    cplx an = 1.0;
    cplx sum_b = 0.0;  // sum of b_j over j = 0..n-1, with b_j = b (1-a^j)/(1-a)
    for (int j = 0; j < n; ++j) {
        sum_b += b * (1.0 - an) / (1.0 - a);
        an *= a;
    }
    it.a_n = an;
    it.b_n = b * (1.0 - an) / (1.0 - a);
    it.c_n = c * (1.0 - an) / (1.0 - a);
    cplx u0n = 1.0;
    for (int k = 0; k < n; ++k) u0n *= P.u0;
    it.u0_n = u0n * std::exp(c * sum_b);
    return it;
}

IterateParams compose(const IterateParams& outer, const IterateParams& inner) {
    // (W_out W_in) f = u_out * (u_in o psi_out) * f(psi_in o psi_out)
    IterateParams r;
    r.n = outer.n + inner.n;
    r.a_n = inner.a_n * outer.a_n;
    r.b_n = inner.a_n * outer.b_n + inner.b_n;
    r.c_n = outer.c_n + inner.c_n * outer.a_n;
    r.u0_n = outer.u0_n * inner.u0_n * std::exp(inner.c_n * outer.b_n);
    return r;
}

cplx fixed_point(const OperatorParams& P) {
    if (approx_eq(P.a, 1.0))
        throw std::invalid_argument("fixed_point: no finite fixed point (a = 1)");
    return P.b / (1.0 - P.a);
}

cplx weight_at_fixed_point(const OperatorParams& P) {
    return P.u0 * std::exp(P.c * fixed_point(P));
}

double bound_constant(const OperatorParams& P) {
    const double abs_a = std::abs(P.a);
    const cplx d = P.c + P.a * std::conj(P.b);
    if (abs_a < 1.0) {
        return std::abs(P.u0) *
               std::exp(std::norm(P.b) / 2.0 + std::norm(d) / (2.0 * (1.0 - abs_a * abs_a)));
    }
    if (std::abs(abs_a - 1.0) <= kEqTol && std::abs(d) <= kEqTol)
        return std::abs(P.u0) * std::exp(std::norm(P.b) / 2.0);
    return std::numeric_limits<double>::infinity();
}

ExpPoly apply(const OperatorParams& P, const ExpPoly& f) {
    const cplx a = P.a, b = P.b;
    const cplx scale = P.u0 * std::exp(f.alpha * b);
    const std::size_t deg = f.coeffs.size();
    std::vector<cplx> out(deg, cplx(0.0));
    // p(az + b) expanded by binomials; C(k, j) through lgamma.
    for (std::size_t k = 0; k < deg; ++k) {
        if (f.coeffs[k] == cplx(0.0)) continue;
        for (std::size_t j = 0; j <= k; ++j) {
            if (a == cplx(0.0) && j > 0) continue;
            if (b == cplx(0.0) && k != j) continue;
            double lbin = std::lgamma(static_cast<double>(k) + 1.0) -
                          std::lgamma(static_cast<double>(j) + 1.0) -
                          std::lgamma(static_cast<double>(k - j) + 1.0);
            LogPow pa = log_pow(a, static_cast<int>(j));
            LogPow pb = log_pow(b, static_cast<int>(k - j));
            double mag = std::exp(lbin + pa.logmag + pb.logmag);
            cplx phase = std::polar(1.0, pa.arg + pb.arg);
            out[j] += f.coeffs[k] * mag * phase;
        }
    }
    for (auto& v : out) v *= scale;
    return ExpPoly{P.c + f.alpha * a, std::move(out)};
}

ExpPoly apply(const IterateParams& I, const ExpPoly& f, double p) {
    return apply(OperatorParams(p, I.a_n, I.b_n, I.c_n, I.u0_n), f);
}

std::vector<cplx> expoly_coeffs(const ExpPoly& f, int N) {
    if (N < 1) throw std::invalid_argument("expoly_coeffs: N must be >= 1");
    const cplx alpha = f.alpha;
    std::vector<cplx> out(static_cast<std::size_t>(N), cplx(0.0));
    for (int m = 0; m < N; ++m) {
        const double half_lg_m = 0.5 * std::lgamma(m + 1.0);
        cplx sum = 0.0;
        const int kmax = std::min<int>(m, static_cast<int>(f.coeffs.size()) - 1);
        for (int k = 0; k <= kmax; ++k) {
            if (f.coeffs[static_cast<std::size_t>(k)] == cplx(0.0)) continue;
            if (alpha == cplx(0.0) && m != k) continue;
            LogPow pw = log_pow(alpha, m - k);
            double mag = std::exp(half_lg_m - std::lgamma(static_cast<double>(m - k) + 1.0) +
                                  pw.logmag);
            sum += f.coeffs[static_cast<std::size_t>(k)] * mag * std::polar(1.0, pw.arg);
        }
        out[static_cast<std::size_t>(m)] = sum;
    }
    return out;
}

namespace {

// Grows the truncation until ten consecutive coefficients contribute less
// than tol^2 times the running squared norm.
int auto_truncation(const ExpPoly& f, double tol) {
    const int deg = f.degree();
    int n = std::max(deg + 1, 16);
    const int hard_cap = 1 << 16;
    double norm_sq = 0.0;
    std::vector<cplx> cs = expoly_coeffs(f, n);
    for (const auto& c : cs) norm_sq += std::norm(c);
    while (n < hard_cap) {
        std::vector<cplx> block = expoly_coeffs(f, n + 10);
        double tail = 0.0;
        for (int m = n; m < n + 10; ++m) tail += std::norm(block[static_cast<std::size_t>(m)]);
        if (tail <= tol * tol * std::max(norm_sq, 1e-300)) return n + 10;
        norm_sq += tail;
        n += 10;
    }
    return hard_cap;
}

}  // namespace

double expoly_norm_sq(const ExpPoly& f, double tol) {
    int n = auto_truncation(f, tol);
    double s = 0.0;
    for (const auto& c : expoly_coeffs(f, n)) s += std::norm(c);
    return s;
}

cplx expoly_inner(const ExpPoly& f, const ExpPoly& g, double tol) {
    int n = std::max(auto_truncation(f, tol), auto_truncation(g, tol));
    std::vector<cplx> cf = expoly_coeffs(f, n);
    std::vector<cplx> cg = expoly_coeffs(g, n);
    cplx s = 0.0;
    for (int m = 0; m < n; ++m)
        s += cf[static_cast<std::size_t>(m)] * std::conj(cg[static_cast<std::size_t>(m)]);
    return s;
}

double poly_norm_sq(const std::vector<cplx>& coeffs) {
    double s = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s += std::norm(coeffs[k]) * std::exp(std::lgamma(static_cast<double>(k) + 1.0));
    return s;
}

}  // namespace fockdyn
