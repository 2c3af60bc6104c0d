// SPDX-License-Identifier: Apache-2.0
#include "fockdyn/verify.hpp"

#include <algorithm>
#include <cmath>

#include "fockdyn/inequality.hpp"
#include "fockdyn/matrix_rep.hpp"
#include "fockdyn/probe.hpp"
#include "fockdyn/scan.hpp"
#include "fockdyn/symbol.hpp"

namespace fockdyn {

using nlohmann::ordered_json;

namespace {

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["value"] = Verdict::name(v.value);
    j["reason"] = v.reason;
    j["margin"] = v.margin;
    return j;
}

ordered_json number_or_inf(double v) {
    if (std::isinf(v) || std::isnan(v)) return ordered_json(format_double_17(v));
    return ordered_json(v);
}

ordered_json params_json(const OperatorParams& P) {
    ordered_json j;
    j["p"] = P.p;
    j["a"] = complex_json(P.a);
    j["b"] = complex_json(P.b);
    j["c"] = complex_json(P.c);
    j["u0"] = complex_json(P.u0);
    return j;
}

// Spectrum points at or outside the unit circle, away from 1; these are the
// directions along which a Ritt failure must show up in the resolvent.
std::vector<cplx> contact_points(const SpectrumDescriptor& d) {
    std::vector<cplx> out;
    for (cplx z : d.sample_points()) {
        if (std::abs(z) < 1.0 - 1e-9) continue;
        if (std::abs(z - 1.0) <= 1e-9) continue;
        out.push_back(z);
    }
    // Keep at most four, preferring the points farthest from 1.
    std::sort(out.begin(), out.end(),
              [](cplx x, cplx y) { return std::abs(x - 1.0) > std::abs(y - 1.0); });
    if (out.size() > 4) out.resize(4);
    return out;
}

double refine_sup(const CMatrix& T, const std::vector<cplx>& contacts, double s) {
    double best = 0.0;
    for (cplx zeta : contacts) {
        double rho = std::abs(zeta - 1.0) * (1.0 + s);
        cplx lam = 1.0 + std::polar(rho, std::arg(zeta - 1.0));
        if (std::abs(lam) <= 1.0 + 1e-9) continue;
        try {
            best = std::max(best, std::abs(lam - 1.0) * resolvent_norm(T, lam));
        } catch (const SingularMatrixError&) {
        }
    }
    return best;
}

}  // namespace

ordered_json classification_json(const ClassificationReport& r) {
    ordered_json j;
    j["bounded"] = r.bounded;
    j["compact"] = r.compact;
    j["power_bounded"] = r.power_bounded;
    j["supercyclic"] = r.supercyclic;
    j["ritt"] = verdict_json(r.ritt);
    j["unconditional_ritt"] = verdict_json(r.unconditional_ritt);
    if (r.spectrum) {
        const SpectrumDescriptor& d = *r.spectrum;
        ordered_json s;
        s["kind"] = SpectrumDescriptor::name(d.kind);
        s["base"] = complex_json(d.base);
        s["ratio"] = complex_json(d.ratio);
        if (d.kind == SpectrumDescriptor::Kind::FullCircle) s["radius"] = d.radius;
        if (d.kind == SpectrumDescriptor::Kind::FinitePoints) {
            ordered_json pts = ordered_json::array();
            for (cplx z : d.points) pts.push_back(complex_json(z));
            s["points"] = std::move(pts);
        }
        s["reason"] = d.reason;
        j["spectrum"] = std::move(s);
    } else {
        j["spectrum"] = "undefined (unbounded)";
    }
    j["m_constant"] = number_or_inf(r.m_constant);
    j["norm_upper"] = number_or_inf(r.norm_upper);
    return j;
}

VerifyOutcome verify_run(const RunConfig& cfg) {
    const OperatorParams& P = cfg.params;
    ClassificationReport cls = classify(P);
    if (!cls.bounded) throw UnboundedError(cls.bounded_reason);

    const int N = cfg.n_dim;
    const int Nh = std::max(1, N / 2);
    const ScanGrid grid = cfg.grid ? *cfg.grid : default_grid();

    CMatrix T = build_matrix(P, N).entries;
    CMatrix Th = build_matrix(P, Nh).entries;

    ordered_json rep;
    rep["command"] = "verify";
    rep["params"] = params_json(P);
    rep["n_dim"] = N;
    rep["n_dim_half"] = Nh;
    rep["n_max"] = cfg.n_max;
    rep["seed"] = cfg.seed;
    rep["classification"] = classification_json(cls);
    bool all_ok = true;

    // --- Ritt scan: stability across truncations for Yes verdicts,
    // divergence evidence (radial refinement toward a spectrum contact point
    // or growth in N) for No verdicts.
    ScanResult ritt = scan_matrices(T, Th, ScanKind::Ritt, grid);
    {
        ordered_json s;
        s["supremum"] = ritt.supremum;
        s["argmax"] = complex_json(ritt.argmax);
        s["supremum_half"] = ritt.supremum_half;
        s["skipped_points"] = static_cast<int>(ritt.skipped.size());
        bool stable = ritt.verdict_hint == "Bounded";
        s["stable"] = stable;
        s["verdict_hint"] = ritt.verdict_hint;

        std::vector<cplx> contacts = contact_points(*cls.spectrum);
        bool doubled = false;
        if (!contacts.empty()) {
            double s1 = refine_sup(T, contacts, 1e-4);
            double s2 = refine_sup(T, contacts, 0.5e-4);
            doubled = s2 >= 1.8 * s1 && s1 > 0.0;
            ordered_json rj;
            rj["evaluated"] = true;
            rj["contact"] = complex_json(contacts.front());
            rj["sup"] = s1;
            rj["sup_half_step"] = s2;
            rj["doubled"] = doubled;
            s["refinement"] = std::move(rj);
        } else {
            s["refinement"] = ordered_json{{"evaluated", false}};
        }

        bool consistent = true;
        if (cls.ritt.yes()) consistent = stable && !doubled;
        if (cls.ritt.no()) consistent = doubled || !stable;
        s["consistent"] = consistent;
        all_ok = all_ok && consistent;
        rep["ritt_scan"] = std::move(s);
    }

    // --- Kreiss scan against the power-norm constant (power-bounded only).
    {
        ordered_json s;
        if (cls.power_bounded) {
            ScanResult kr = scan_matrices(T, Th, ScanKind::Kreiss, grid);
            double pmax = power_norm_max(T, 64);
            bool ok = kr.supremum <= pmax + 1e-6;
            s["evaluated"] = true;
            s["supremum"] = kr.supremum;
            s["supremum_half"] = kr.supremum_half;
            s["power_norm_max"] = pmax;
            s["bound_ok"] = ok;
            s["consistent"] = ok;
            all_ok = all_ok && ok;
        } else {
            s["evaluated"] = false;
            s["reason"] = "operator is not power bounded";
            s["consistent"] = true;
        }
        rep["kreiss_scan"] = std::move(s);
    }

    // --- Nagy-Zemanek sequence: pointwise kernel lower bound, and for
    // compositions the geometric decay slope of the difference norms.
    {
        std::vector<NzPoint> seq = nagy_zemanek_sequence(P, N, cfg.n_max);
        ordered_json s;
        s["n_max"] = cfg.n_max;
        ordered_json vals = ordered_json::array();
        bool lb_ok = true;
        for (const auto& pt : seq) {
            vals.push_back(ordered_json::array({pt.n, pt.scaled}));
            if (!std::isnan(pt.lower_bound) && pt.scaled < pt.lower_bound * (1.0 - 1e-6))
                lb_ok = false;
        }
        s["values"] = std::move(vals);
        s["lower_bound_ok"] = lb_ok;

        bool slope_applicable = P.weight_is_one() && std::abs(P.a) > kEqTol &&
                                std::abs(P.a) < 1.0 && cfg.n_max >= 25;
        ordered_json slope_j;
        bool slope_ok = true;
        if (slope_applicable) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            int cnt = 0;
            for (const auto& pt : seq) {
                if (pt.n < 5 || pt.n > 25 || pt.diff_norm <= 0.0) continue;
                double x = pt.n, y = std::log(pt.diff_norm);
                sx += x; sy += y; sxx += x * x; sxy += x * y;
                ++cnt;
            }
            if (cnt >= 2) {
                double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
                double target = std::log(std::abs(P.a));
                slope_ok = std::abs(slope - target) <= 0.10 * std::abs(target);
                slope_j["evaluated"] = true;
                slope_j["value"] = slope;
                slope_j["target"] = target;
                slope_j["ok"] = slope_ok;
            } else {
                slope_j["evaluated"] = false;
            }
        } else {
            slope_j["evaluated"] = false;
        }
        s["slope"] = std::move(slope_j);
        bool consistent = lb_ok && slope_ok;
        s["consistent"] = consistent;
        all_ok = all_ok && consistent;
        rep["nz_sequence"] = std::move(s);
    }

    // --- Signed sums of iterate differences.
    {
        const int n_terms = std::min(cfg.n_max, 20);
        const int trials = 16;
        UncondEstimate ue = uncond_estimate_matrix(T, n_terms, trials, cfg.seed);
        UncondEstimate uh = uncond_estimate_matrix(Th, n_terms, trials, cfg.seed);
        ordered_json s;
        s["n_terms"] = n_terms;
        s["trials"] = trials;
        s["estimate"] = ue.estimate;
        s["estimate_half"] = uh.estimate;
        s["random_max"] = ue.random_max;
        s["all_ones"] = ue.all_ones;
        s["greedy"] = ue.greedy;
        s["triangle_sum"] = ue.triangle_sum;
        bool tri_ok = ue.estimate <= ue.triangle_sum * (1.0 + 1e-9) + 1e-12;
        s["bounded_by_triangle"] = tri_ok;
        s["greedy_monotone"] = ue.greedy_monotone;
        bool stable = true;
        if (cls.unconditional_ritt.yes()) {
            double hi = std::max(ue.estimate, uh.estimate);
            stable = hi == 0.0 || std::abs(ue.estimate - uh.estimate) <= 0.10 * hi;
            s["stable"] = stable;
        }
        bool consistent = tri_ok && ue.greedy_monotone && stable;
        s["consistent"] = consistent;
        all_ok = all_ok && consistent;
        rep["uncond_estimate"] = std::move(s);
    }

    // --- Supercyclicity probe.  Non-density evidence requires some target
    // to stay at projective distance >= 0.01 from the whole orbit; the
    // global minimum can legitimately approach 0 when the orbit converges
    // to a target direction.
    {
        ExpPoly f = cfg.probe_f ? *cfg.probe_f : ExpPoly::kernel(cplx(1.0, 0.0));
        std::vector<ExpPoly> targets = cfg.probe_targets;
        if (targets.empty())
            targets = {ExpPoly::basis(0), ExpPoly::basis(1), ExpPoly::basis(2)};
        ProbeResult pr = supercyclic_probe(P, f, targets, cfg.n_max, N);
        ordered_json s;
        s["n_max"] = pr.n_max;
        s["targets_tested"] = pr.targets_tested;
        s["min_projective_distance"] = pr.min_projective_distance;
        ordered_json per = ordered_json::array();
        double best_target = 0.0;
        for (const auto& st : pr.per_target) {
            per.push_back(ordered_json{{"min_distance", st.min_distance},
                                       {"argmin_n", st.argmin_n}});
            best_target = std::max(best_target, st.min_distance);
        }
        s["per_target"] = std::move(per);
        bool nondense = best_target >= 0.01;
        s["evidence_nondense"] = nondense;
        s["ratio_evaluated"] = pr.ratio_evaluated;
        bool ratio_ok = true;
        if (pr.ratio_evaluated) {
            s["ratio_max"] = pr.ratio_max;
            s["ratio_bound"] = pr.ratio_bound_C;
            ratio_ok = pr.ratio_max <= pr.ratio_bound_C * (1.0 + 1e-9);
            s["ratio_ok"] = ratio_ok;
        } else {
            s["ratio_skip_reason"] = pr.ratio_skip_reason;
        }
        bool consistent = nondense && ratio_ok;
        s["consistent"] = consistent;
        all_ok = all_ok && consistent;
        rep["probe"] = std::move(s);
    }

    // --- Isometry block, only for the normalized-translation family.
    {
        double u0_expect = std::exp(-std::norm(P.b) / 2.0);
        bool shape = approx_eq(P.a, 1.0) && approx_eq(P.c, -std::conj(P.b)) &&
                     approx_eq(P.u0, cplx(u0_expect, 0.0)) && N > 16;
        if (shape) {
            double block = isometry_check(P, N, 16);
            bool ok = block <= 1e-6;
            ordered_json s;
            s["K"] = 16;
            s["block_norm"] = block;
            s["consistent"] = ok;
            all_ok = all_ok && ok;
            rep["isometry"] = std::move(s);
        }
    }

    // --- Pointwise growth / derivative inequalities and Stolz containment.
    {
        std::optional<double> mhat;
        if (cls.ritt.yes()) mhat = ritt.supremum;
        InequalityReport iq = inequality_suite(P, 200, cfg.seed, mhat);
        ordered_json s;
        s["samples"] = iq.samples;
        s["point_violations"] = iq.point_violations;
        s["derivative_violations"] = iq.derivative_violations;
        ordered_json st;
        st["evaluated"] = iq.stolz.evaluated;
        if (iq.stolz.evaluated) {
            st["m_hat"] = iq.stolz.m_hat;
            st["sin_theta"] = iq.stolz.sin_theta;
            st["max_dist"] = iq.stolz.max_dist;
            st["pass"] = iq.stolz.pass;
            st["note"] =
                "m_hat is a grid supremum (a lower bound on the best constant); "
                "the tested hull is conservative";
        }
        s["stolz"] = std::move(st);
        s["consistent"] = iq.pass;
        all_ok = all_ok && iq.pass;
        rep["inequalities"] = std::move(s);
    }

    rep["consistent"] = all_ok;
    return VerifyOutcome{std::move(rep), all_ok};
}

}  // namespace fockdyn
