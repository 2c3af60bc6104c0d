// SPDX-License-Identifier: Apache-2.0
#include "fockdyn/inequality.hpp"

#include <cmath>

#include "fockdyn/rng.hpp"
#include "fockdyn/symbol.hpp"

namespace fockdyn {

double stolz_hull_distance(cplx z, double s) {
    // Distance to {t mu + (1 - t) : mu in D(0, s), t in [0, 1]}; the gap
    // function below is convex in t, so a ternary search suffices.
    auto gap = [&](double t) { return std::max(0.0, std::abs(z - (1.0 - t)) - t * s); };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        double m1 = lo + (hi - lo) / 3.0;
        double m2 = hi - (hi - lo) / 3.0;
        if (gap(m1) <= gap(m2))
            hi = m2;
        else
            lo = m1;
    }
    return gap(0.5 * (lo + hi));
}

InequalityReport inequality_suite(const OperatorParams& P, int sample_count, std::uint64_t seed,
                                  std::optional<double> ritt_sup) {
    InequalityReport rep;
    rep.samples = sample_count;
    SplitMix64 rng(seed);
    const double deriv_const = std::sqrt(2.0 * M_PI) + 1.0;
    const int degree = 8;
    const int points_per_poly = 50;

    for (int s = 0; s < sample_count; ++s) {
        std::vector<cplx> coeffs(degree + 1);
        for (auto& c : coeffs) c = cplx(rng.symmetric(), rng.symmetric());
        double norm2 = std::sqrt(poly_norm_sq(coeffs));
        // Derivative coefficients: (k+1) c_{k+1}.
        std::vector<cplx> dcoeffs(degree);
        for (int k = 0; k < degree; ++k)
            dcoeffs[static_cast<std::size_t>(k)] =
                static_cast<double>(k + 1) * coeffs[static_cast<std::size_t>(k + 1)];
        auto eval = [](const std::vector<cplx>& cs, cplx z) {
            cplx v = 0.0;
            for (std::size_t k = cs.size(); k-- > 0;) v = v * z + cs[k];
            return v;
        };
        for (int q = 0; q < points_per_poly; ++q) {
            cplx z = rng.disc(3.0);
            double lhs = std::abs(eval(coeffs, z));
            double rhs = std::exp(std::norm(z) / 2.0) * norm2;
            if (lhs > rhs * (1.0 + 1e-12)) ++rep.point_violations;

            cplx w = rng.disc(3.0);
            double dl = std::abs(eval(dcoeffs, w));
            double dr = deriv_const * (1.0 + std::abs(w)) * std::exp(std::norm(w) / 2.0) * norm2;
            if (dl > dr * (1.0 + 1e-12)) ++rep.derivative_violations;
        }
    }

    ClassificationReport cls = classify(P);
    if (cls.bounded && cls.ritt.yes() && ritt_sup.has_value()) {
        rep.stolz.evaluated = true;
        rep.stolz.m_hat = *ritt_sup;
        double m = std::max(1.0, *ritt_sup);
        rep.stolz.sin_theta = std::sqrt(std::max(0.0, 1.0 - 1.0 / (m * m)));
        double worst = 0.0;
        for (cplx z : cls.spectrum->sample_points())
            worst = std::max(worst, stolz_hull_distance(z, rep.stolz.sin_theta));
        rep.stolz.max_dist = worst;
        rep.stolz.pass = worst <= 1e-9;
    }
    rep.pass = rep.point_violations == 0 && rep.derivative_violations == 0 &&
               (!rep.stolz.evaluated || rep.stolz.pass);
    return rep;
}

}  // namespace fockdyn
