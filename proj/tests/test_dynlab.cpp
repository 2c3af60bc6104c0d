// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fockdyn/inequality.hpp"
#include "fockdyn/probe.hpp"
#include "fockdyn/rng.hpp"
#include "fockdyn/scan.hpp"
#include "fockdyn/symbol.hpp"

using namespace fockdyn;

namespace {
OperatorParams params(cplx a, cplx b, cplx c, cplx u0) {
    return OperatorParams(2.0, a, b, c, u0);
}
}  // namespace

TEST_CASE("default grid shape") {
    ScanGrid g = default_grid();
    CHECK(g.rho_values.size() == 25);
    CHECK(g.rho_values.front() == doctest::Approx(1e-4));
    CHECK(g.rho_values.back() == doctest::Approx(2.0));
    CHECK(g.theta_values.size() == 64);
    CHECK(g.theta_values.back() == doctest::Approx(M_PI));
}

TEST_CASE("ritt scan on the identity is constant 1") {
    ScanResult r = ritt_functional_scan(params(1, 0, 0, 1), 16, default_grid());
    for (const auto& p : r.points) CHECK(p.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.supremum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.verdict_hint == "Bounded");
}

TEST_CASE("ritt scan blows up near the rank-one spectrum point") {
    ScanGrid g;
    g.rho_values = {2.0 + 1e-3};
    g.theta_values = {M_PI};
    ScanResult r = ritt_functional_scan(params(0, 0, 0, -1), 16, g);
    // lambda = -1 - 1e-3: functional |lambda-1| / dist(lambda, -1)
    CHECK(r.supremum >= 2.0 * (1.0 - 1e-3) * 1000.0 * 0.99);
}

TEST_CASE("ritt scan is truncation-stable for a Ritt-Yes operator") {
    ScanResult r = ritt_functional_scan(params(0.5, 0, 0, 0.9), 64, default_grid());
    CHECK(std::abs(r.supremum - r.supremum_half) <= 0.10 * std::max(r.supremum, r.supremum_half));
    CHECK(r.verdict_hint == "Bounded");
}

TEST_CASE("kreiss scan") {
    SUBCASE("identity functional at most 1") {
        ScanResult r = kreiss_functional_scan(params(1, 0, 0, 1), 16, default_grid());
        CHECK(r.supremum <= 1.0 + 1e-9);
    }
    SUBCASE("diagonal contraction bounded by power norms (= 1)") {
        ScanResult r = kreiss_functional_scan(params(0.5, 0, 0, 1), 32, default_grid());
        CHECK(r.supremum <= 1.0 + 1e-6);
    }
    SUBCASE("weighted translation bounded by its power-norm constant") {
        OperatorParams P = params(1, 1, -1, std::exp(-0.6));
        ScanResult r = kreiss_functional_scan(P, 64, default_grid());
        CMatrix T = build_matrix(P, 64).entries;
        CHECK(r.supremum <= power_norm_max(T, 64) + 1e-6);
    }
    SUBCASE("rejects non-power-bounded parameters") {
        CHECK_THROWS_AS((void)kreiss_functional_scan(params(0.5, 0, 0, 2), 16, default_grid()),
                        std::invalid_argument);
    }
}

TEST_CASE("nagy-zemanek sequence") {
    SUBCASE("identity: all zero") {
        for (const auto& pt : nagy_zemanek_sequence(params(1, 0, 0, 1), 16, 10))
            CHECK(pt.scaled == 0.0);
    }
    SUBCASE("rank-one flip grows like 2n") {
        std::vector<NzPoint> seq = nagy_zemanek_sequence(params(0, 0, 0, -1), 8, 12);
        for (const auto& pt : seq)
            CHECK(pt.scaled == doctest::Approx(2.0 * pt.n).epsilon(1e-9));
    }
    SUBCASE("kernel lower bound for the weighted dilation") {
        std::vector<NzPoint> seq = nagy_zemanek_sequence(params(0.5, 1, 0, 0.9), 128, 40);
        for (const auto& pt : seq) {
            CHECK(pt.scaled >= pt.lower_bound * (1.0 - 1e-6));
            CHECK(pt.diff_norm >= pt.n * 0.0);  // sanity
        }
    }
    SUBCASE("geometric decay slope for a compact composition") {
        std::vector<NzPoint> seq = nagy_zemanek_sequence(params(0.5, 1, 0, 1), 128, 26);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int cnt = 0;
        for (const auto& pt : seq) {
            if (pt.n < 5 || pt.n > 25) continue;
            double x = pt.n, y = std::log(pt.diff_norm);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
            ++cnt;
        }
        double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        CHECK(std::abs(slope - std::log(0.5)) <= 0.10 * std::abs(std::log(0.5)));
    }
}

TEST_CASE("unconditional ritt estimate") {
    SUBCASE("identity: exactly zero") {
        UncondEstimate ue = unconditional_ritt_estimate(params(1, 0, 0, 1), 16, 20, 8, 1);
        CHECK(ue.estimate == 0.0);
    }
    SUBCASE("compact composition: bounded by the triangle sum, stable in N") {
        UncondEstimate u64 = unconditional_ritt_estimate(params(0.5, 0, 0, 1), 64, 20, 8, 1);
        UncondEstimate u32 = unconditional_ritt_estimate(params(0.5, 0, 0, 1), 32, 20, 8, 1);
        CHECK(u64.estimate <= u64.triangle_sum * (1.0 + 1e-9));
        CHECK(std::abs(u64.estimate - u32.estimate) <= 0.10 * std::max(u64.estimate, u32.estimate));
    }
    SUBCASE("rank-one flip: adversarial signs reach 2 * n_terms") {
        UncondEstimate ue = unconditional_ritt_estimate(params(0, 0, 0, -1), 8, 20, 8, 1);
        CHECK(ue.estimate >= 20.0);
        CHECK(ue.greedy_monotone);
        CHECK(ue.estimate <= ue.triangle_sum * (1.0 + 1e-9));
    }
    SUBCASE("deterministic in the seed") {
        UncondEstimate a = unconditional_ritt_estimate(params(0.5, 1, 0, 0.9), 32, 12, 6, 42);
        UncondEstimate b = unconditional_ritt_estimate(params(0.5, 1, 0, 0.9), 32, 12, 6, 42);
        CHECK(a.estimate == b.estimate);
        CHECK(a.random_max == b.random_max);
    }
}

TEST_CASE("projective distance properties") {
    SplitMix64 rng(13);
    for (int t = 0; t < 30; ++t) {
        std::vector<cplx> x(8), y(8);
        for (auto& v : x) v = cplx(rng.symmetric(), rng.symmetric());
        for (auto& v : y) v = cplx(rng.symmetric(), rng.symmetric());
        double d = projective_distance(x, y);
        CHECK(d >= 0.0);
        CHECK(d <= 1.0);
        cplx lam = rng.disc(3.0) + cplx(0.5, 0.5);
        std::vector<cplx> xs = x;
        for (auto& v : xs) v *= lam;
        CHECK(std::abs(projective_distance(xs, y) - d) <= 1e-12);
    }
}

TEST_CASE("supercyclic probe") {
    SUBCASE("constant orbit stays orthogonal to e_1") {
        ProbeResult r = supercyclic_probe(params(0.5, 0, 0, 1), ExpPoly::one(),
                                          {ExpPoly::basis(1)}, 20, 32);
        for (double d : r.distances[0]) CHECK(d == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.min_projective_distance == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("ratio bounded by the boundary constant") {
        ProbeResult r = supercyclic_probe(params(0.5, 0, 0, 1), ExpPoly::kernel(1.0),
                                          {ExpPoly::basis(0)}, 50, 64);
        CHECK(r.ratio_evaluated);
        CHECK(r.ratio_max <= r.ratio_bound_C * (1.0 + 1e-9));
    }
    SUBCASE("rotation family keeps its distance from the basis targets") {
        OperatorParams P = params(cplx(0, 1), cplx(1, -1), cplx(1, -1), 0.7);
        ProbeResult r = supercyclic_probe(
            P, ExpPoly::kernel(1.0),
            {ExpPoly::basis(0), ExpPoly::basis(1), ExpPoly::basis(2)}, 50, 96);
        CHECK(r.min_projective_distance >= 0.01);
        CHECK(r.ratio_evaluated);
        CHECK(r.ratio_max <= r.ratio_bound_C * (1.0 + 1e-9));
    }
    SUBCASE("a = 1 branch skips the ratio part") {
        ProbeResult r = supercyclic_probe(params(1, 1, -1, 0.3), ExpPoly::kernel(1.0),
                                          {ExpPoly::basis(1)}, 10, 48);
        CHECK(!r.ratio_evaluated);
        CHECK(!r.ratio_skip_reason.empty());
    }
    SUBCASE("f with zeros skips the ratio part") {
        ExpPoly f{cplx(0.0), {cplx(0.0), cplx(1.0)}};
        ProbeResult r = supercyclic_probe(params(0.5, 0, 0, 1), f, {ExpPoly::basis(0)}, 10, 32);
        CHECK(!r.ratio_evaluated);
    }
}

TEST_CASE("isometry block check") {
    SUBCASE("b = 0 is the identity") {
        CHECK(isometry_check(params(1, 0, 0, 1), 32, 8) <= 1e-14);
    }
    SUBCASE("b = 1 at N = 96") {
        OperatorParams P = params(1, 1, -1, std::exp(-0.5));
        CHECK(isometry_check(P, 96, 16) <= 1e-6);
    }
    SUBCASE("wrong shape throws") {
        CHECK_THROWS_AS((void)isometry_check(params(1, 1, -1, 0.3), 64, 16),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)isometry_check(params(0.5, 1, -1, std::exp(-0.5)), 64, 16),
                        std::invalid_argument);
    }
}

TEST_CASE("inequality suite") {
    SUBCASE("200 seeded samples, zero violations") {
        InequalityReport r = inequality_suite(params(0.5, 0, 0, 1), 200, 1);
        CHECK(r.samples == 200);
        CHECK(r.point_violations == 0);
        CHECK(r.derivative_violations == 0);
        CHECK(r.pass);
        CHECK(!r.stolz.evaluated);  // no scan supremum supplied
    }
    SUBCASE("stolz containment for a compact contraction") {
        ScanResult scan = ritt_functional_scan(params(0.5, 0, 0, 0.9), 64, default_grid());
        InequalityReport r = inequality_suite(params(0.5, 0, 0, 0.9), 50, 1, scan.supremum);
        CHECK(r.stolz.evaluated);
        CHECK(r.stolz.pass);
    }
    SUBCASE("hull distance sanity") {
        CHECK(stolz_hull_distance(cplx(1.0), 0.0) <= 1e-12);
        CHECK(stolz_hull_distance(cplx(0.5), 0.1) <= 1e-12);
        CHECK(stolz_hull_distance(cplx(0, 0.5), 0.25) > 0.1);
    }
}
