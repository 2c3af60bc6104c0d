// SPDX-License-Identifier: Apache-2.0
#include "fockdyn/probe.hpp"

#include <algorithm>
#include <cmath>

#include "fockdyn/classify.hpp"
#include "fockdyn/config.hpp"
#include "fockdyn/matrix_rep.hpp"
#include "fockdyn/symbol.hpp"
#include "fockdyn/threading.hpp"

namespace fockdyn {

double projective_distance(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    double nx = 0.0, ny = 0.0;
    cplx ip = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        nx += std::norm(x[k]);
        ny += std::norm(y[k]);
        ip += x[k] * std::conj(y[k]);
    }
    if (nx == 0.0 || ny == 0.0) return 1.0;
    double cos2 = std::norm(ip) / (nx * ny);
    return std::sqrt(std::max(0.0, 1.0 - std::min(1.0, cos2)));
}

namespace {

// Rescales the polynomial part so orbit elements stay representable; the
// projective distance is unaffected.
void rescale(ExpPoly& f) {
    double m = 0.0;
    for (const auto& c : f.coeffs) m = std::max(m, std::abs(c));
    if (m > 0.0 && (m > 1e100 || m < 1e-100))
        for (auto& c : f.coeffs) c /= m;
}

}  // namespace

ProbeResult supercyclic_probe(const OperatorParams& P, const ExpPoly& f,
                              const std::vector<ExpPoly>& targets, int n_max, int N) {
    ClassificationReport rep = classify(P);
    if (!rep.bounded) throw std::invalid_argument("supercyclic_probe: operator is unbounded");
    if (targets.empty()) throw std::invalid_argument("supercyclic_probe: no targets");

    ProbeResult r;
    r.n_max = n_max;
    r.targets_tested = static_cast<int>(targets.size());

    std::vector<std::vector<cplx>> target_coeffs;
    target_coeffs.reserve(targets.size());
    for (const auto& g : targets) target_coeffs.push_back(expoly_coeffs(g, N));

    // Exact orbit, expanded at truncation N for the distance part.
    r.distances.assign(targets.size(), std::vector<double>(static_cast<std::size_t>(n_max) + 1));
    ExpPoly orbit = f;
    std::vector<ExpPoly> orbit_elems;
    orbit_elems.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        orbit_elems.push_back(orbit);
        if (n < n_max) {
            orbit = apply(P, orbit);
            rescale(orbit);
        }
    }
    const auto distances_for = [&](int n) {
        std::vector<cplx> cs = expoly_coeffs(orbit_elems[static_cast<std::size_t>(n)], N);
        for (std::size_t t = 0; t < targets.size(); ++t)
            r.distances[t][static_cast<std::size_t>(n)] = projective_distance(cs, target_coeffs[t]);
    };
    if (threading::parallel_enabled()) {
#pragma omp parallel for schedule(dynamic) num_threads(threading::thread_count())
        for (int n = 0; n <= n_max; ++n) distances_for(n);
    } else {
        for (int n = 0; n <= n_max; ++n) distances_for(n);
    }

    r.min_projective_distance = 1.0;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        ProbeResult::TargetStat st{2.0, -1};
        for (int n = 0; n <= n_max; ++n) {
            double d = r.distances[t][static_cast<std::size_t>(n)];
            if (d < st.min_distance) {
                st.min_distance = d;
                st.argmin_n = n;
            }
        }
        r.per_target.push_back(st);
        r.min_projective_distance = std::min(r.min_projective_distance, st.min_distance);
    }

    // Ratio part: orbit value ratios at z with |z - z0| = 1 stay below the
    // boundary bound C as long as u and f are zero free on the disc.
    if (approx_eq(P.a, 1.0)) {
        r.ratio_skip_reason = "no finite fixed point (a = 1); distance part only";
        return r;
    }
    if (!f.zero_free()) {
        r.ratio_skip_reason = "f has zeros; the ratio argument needs a zero-free f";
        return r;
    }
    const cplx z0 = fixed_point(P);
    const auto u_at = [&](cplx z) { return P.u0 * std::exp(P.c * z); };

    const int samples = 4096;
    double max_u = 0.0, min_u = 1e308, max_f = 0.0, min_f = 1e308;
    // max/min reductions over boundary samples are order independent.
#pragma omp parallel for schedule(static) num_threads(threading::thread_count()) \
    reduction(max : max_u, max_f) reduction(min : min_u, min_f) \
    if (threading::parallel_enabled())
    for (int k = 0; k < samples; ++k) {
        cplx z = z0 + std::polar(1.0, 2.0 * M_PI * k / samples);
        double uu = std::abs(u_at(z));
        double ff = std::abs(f.eval(z));
        max_u = std::max(max_u, uu);
        min_u = std::min(min_u, uu);
        max_f = std::max(max_f, ff);
        min_f = std::min(min_f, ff);
    }
    r.ratio_bound_C = (max_u * max_f) / (min_u * min_f);
    r.ratio_evaluated = true;

    const cplx z = z0 + 1.0;
    cplx pn = P.a * z + P.b;  // psi(z)
    for (int n = 1; n <= n_max; ++n) {
        cplx pn1 = P.a * pn + P.b;  // psi^{n+1}(z)
        cplx num = u_at(z) * f.eval(pn);
        cplx den = u_at(pn) * f.eval(pn1);
        double ratio = std::abs(num) / std::abs(den);
        r.ratios.push_back(ratio);
        r.ratio_max = std::max(r.ratio_max, ratio);
        pn = pn1;
    }
    return r;
}

double isometry_check(const OperatorParams& P, int N, int K) {
    if (K >= N) throw std::invalid_argument("isometry_check: K must be < N");
    const double u0_expect = std::exp(-std::norm(P.b) / 2.0);
    if (!approx_eq(P.a, 1.0) || !approx_eq(P.c, -std::conj(P.b)) ||
        !approx_eq(P.u0, cplx(u0_expect, 0.0)))
        throw std::invalid_argument("isometry_check: not the normalized-translation family");
    CMatrix T = build_matrix(P, N).entries;
    CMatrix G = matmul(T.adjoint(), T);
    for (int i = 0; i < N; ++i) G.at(i, i) -= 1.0;
    return op_norm(G.leading_block(K));
}

std::string probe_csv(const ProbeResult& r) {
    std::string out = "record,target_index,n,value\n";
    for (std::size_t t = 0; t < r.distances.size(); ++t)
        for (int n = 0; n <= r.n_max; ++n) {
            out += "distance,";
            out += std::to_string(t);
            out += ',';
            out += std::to_string(n);
            out += ',';
            out += format_double_17(r.distances[t][static_cast<std::size_t>(n)]);
            out += '\n';
        }
    for (std::size_t k = 0; k < r.ratios.size(); ++k) {
        out += "ratio,-1,";
        out += std::to_string(k + 1);
        out += ',';
        out += format_double_17(r.ratios[k]);
        out += '\n';
    }
    if (r.ratio_evaluated) {
        out += "ratio_bound,-1,-1,";
        out += format_double_17(r.ratio_bound_C);
        out += '\n';
    }
    return out;
}

}  // namespace fockdyn
