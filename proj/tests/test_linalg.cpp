// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fockdyn/dense.hpp"
#include "fockdyn/matrix_rep.hpp"
#include "fockdyn/rng.hpp"
#include "fockdyn/symbol.hpp"
#include "support/gauss_hermite.hpp"

using namespace fockdyn;

namespace {

OperatorParams params(cplx a, cplx b, cplx c, cplx u0) {
    return OperatorParams(2.0, a, b, c, u0);
}

CMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    CMatrix M(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (cplx v : row) M.at(i, j++) = v;
        ++i;
    }
    return M;
}

const OperatorParams kOracleSets[] = {
    params(0.5, 0, 0, 1),
    params(0.5, 1, 0, 1),
    params(0, 0.7, 0.3, 1.1),
    params(1, 1, -1, std::exp(-0.5)),
    params(cplx(0, 0.5), cplx(0.5, -0.25), cplx(0, 0.25), cplx(0.8, 0.1)),
    params(-0.6, cplx(0, 0.3), cplx(-0.2, 0.1), cplx(0, 1.2)),
};

}  // namespace

TEST_CASE("build_matrix closed-form examples") {
    SUBCASE("diagonal dilation") {
        MatrixRep rep = build_matrix(params(0.5, 0, 0, 1), 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j)
                    CHECK(std::abs(rep.entries.at(i, i) - std::pow(0.5, i)) < 1e-15);
                else
                    CHECK(rep.entries.at(i, j) == cplx(0.0));
            }
    }
    SUBCASE("dilation with translation, N = 2") {
        MatrixRep rep = build_matrix(params(0.5, 1, 0, 1), 2);
        CHECK(std::abs(rep.entries.at(0, 0) - cplx(1.0)) < 1e-15);
        CHECK(std::abs(rep.entries.at(0, 1) - cplx(1.0)) < 1e-15);
        CHECK(rep.entries.at(1, 0) == cplx(0.0));
        CHECK(std::abs(rep.entries.at(1, 1) - cplx(0.5)) < 1e-15);
    }
    SUBCASE("normalized translation, N = 1") {
        MatrixRep rep = build_matrix(params(1, 1, -1, std::exp(-0.5)), 1);
        CHECK(std::abs(rep.entries.at(0, 0) - std::exp(-0.5)) < 1e-16);
    }
    SUBCASE("p != 2 rejected") {
        CHECK_THROWS_AS((void)build_matrix(OperatorParams(3.0, 0.5, 0, 0, 1), 4),
                        std::invalid_argument);
    }
}

TEST_CASE("matrix entries agree with the quadrature oracle") {
    testing::GaussHermite gh(64);
    for (const auto& P : kOracleSets) {
        MatrixRep rep = build_matrix(P, 11);
        for (int m = 0; m <= 10; ++m) {
            for (int n = 0; n <= 10; ++n) {
                cplx closed = rep.entries.at(n, m);
                cplx quad = testing::quadrature_entry(P, m, n, gh);
                CHECK(std::abs(closed - quad) <= 1e-8 * (1.0 + std::abs(closed)));
            }
        }
    }
}

TEST_CASE("triangular structure and diagonal for c = 0") {
    const cplx as[] = {0.5, 0.5, 0.0, cplx(0, 0.5)};
    const cplx u0s[] = {1.0, 2.0, -1.0, 1.0};
    for (int s = 0; s < 4; ++s) {
        for (cplx b : {cplx(0.0), cplx(1.0)}) {
            MatrixRep rep = build_matrix(params(as[s], b, 0, u0s[s]), 48);
            for (int i = 0; i < 48; ++i) {
                cplx expect = u0s[s] * std::pow(as[s], i);
                if (as[s] == cplx(0.0)) expect = i == 0 ? u0s[s] : cplx(0.0);
                CHECK(std::abs(rep.entries.at(i, i) - expect) <=
                      1e-12 * std::max(1.0, std::abs(expect)));
                for (int j = 0; j < i; ++j) CHECK(rep.entries.at(i, j) == cplx(0.0));
            }
        }
    }
}

TEST_CASE("op_norm") {
    CHECK(op_norm(CMatrix::identity(5)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(op_norm(from_rows({{1, 0, 0}, {0, 0.5, 0}, {0, 0, 0.25}})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(op_norm(from_rows({{0, 2}, {0, 0}})) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(op_norm(CMatrix(4)) == 0.0);
    SUBCASE("adjoint invariance") {
        SplitMix64 rng(5);
        for (int t = 0; t < 10; ++t) {
            CMatrix M(12);
            for (auto& v : M.a) v = cplx(rng.symmetric(), rng.symmetric());
            double n1 = op_norm(M), n2 = op_norm(M.adjoint());
            CHECK(std::abs(n1 - n2) <= 1e-9 * n1);
        }
    }
}

TEST_CASE("lu solve round trip") {
    SplitMix64 rng(17);
    CMatrix A(16);
    for (auto& v : A.a) v = cplx(rng.symmetric(), rng.symmetric());
    for (int i = 0; i < 16; ++i) A.at(i, i) += 4.0;  // comfortably nonsingular
    LuFactors F = lu_factor(A);
    std::vector<cplx> b(16);
    for (auto& v : b) v = cplx(rng.symmetric(), rng.symmetric());
    std::vector<cplx> x = lu_solve(F, b);
    std::vector<cplx> r = matvec(A, x);
    for (int i = 0; i < 16; ++i) CHECK(std::abs(r[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]) < 1e-10);
    std::vector<cplx> y = lu_solve_adjoint(F, b);
    std::vector<cplx> r2 = adjoint_matvec(A, y);
    for (int i = 0; i < 16; ++i) CHECK(std::abs(r2[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]) < 1e-10);
}

TEST_CASE("resolvent norm") {
    CHECK(resolvent_norm(from_rows({{0.5}}), 1.0) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(resolvent_norm(CMatrix::identity(3), 1.5) == doctest::Approx(2.0).epsilon(1e-9));
    SUBCASE("rank-one flip near its spectrum") {
        CMatrix T = build_matrix(params(0, 0, 0, -1), 4).entries;
        double r = resolvent_norm(T, cplx(-1.0 - 1e-3, 0.0));
        CHECK(r >= 1000.0 * (1.0 - 1e-2));
    }
    SUBCASE("exact eigenvalue is flagged singular") {
        CHECK_THROWS_AS((void)resolvent_norm(CMatrix::identity(3), 1.0), SingularMatrixError);
    }
    SUBCASE("lower bound 1/dist on triangular spectra") {
        CMatrix T = build_matrix(params(0.5, 1, 0, 0.9), 24).entries;
        SplitMix64 rng(23);
        for (int t = 0; t < 12; ++t) {
            cplx lam = cplx(1.2, 0) + rng.disc(1.0);
            double dist = 1e300;
            for (int m = 0; m < 24; ++m)
                dist = std::min(dist, std::abs(lam - T.at(m, m)));
            if (dist < 1e-6) continue;
            CHECK(resolvent_norm(T, lam) >= (1.0 / dist) * (1.0 - 1e-9));
        }
    }
}

TEST_CASE("mat_power_diff") {
    SUBCASE("identity") {
        PowerDiff pd = mat_power_diff(CMatrix::identity(6), 3);
        CHECK(pd.norm_n == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(pd.diff_norm_n == 0.0);
    }
    SUBCASE("scalar half") {
        PowerDiff pd = mat_power_diff(from_rows({{0.5}}), 2);
        CHECK(pd.norm_n == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(pd.diff_norm_n == doctest::Approx(0.125).epsilon(1e-12));
    }
    SUBCASE("kernel lower bound for the weighted dilation") {
        CMatrix T = build_matrix(params(0.5, 1, 0, 0.9), 64).entries;
        PowerDiff pd = mat_power_diff(T, 5);
        CHECK(pd.diff_norm_n >= std::pow(0.9, 5) * 0.1 * (1.0 - 1e-6));
    }
}

TEST_CASE("iterate consistency of truncations") {
    // c = 0 keeps the polynomial space invariant: equality up to rounding.
    OperatorParams P0 = params(0.5, 1, 0, 0.9);
    CMatrix T = build_matrix(P0, 64).entries;
    CMatrix T3 = mat_power(T, 3);
    CMatrix D3 = build_matrix(OperatorParams(2.0, iterate_params(P0, 3).a_n,
                                             iterate_params(P0, 3).b_n, iterate_params(P0, 3).c_n,
                                             iterate_params(P0, 3).u0_n),
                              64)
                     .entries;
    double scale = D3.max_abs();
    for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 40; ++j)
            CHECK(std::abs(T3.at(i, j) - D3.at(i, j)) <= 1e-10 * scale);

    // General weights leak only through high degrees.
    OperatorParams P1 = params(cplx(0.4, 0.2), cplx(0.3, 0), cplx(0.1, -0.1), cplx(0.8, 0.2));
    CMatrix S = build_matrix(P1, 64).entries;
    for (int n : {2, 4}) {
        CMatrix Sn = mat_power(S, n);
        IterateParams it = iterate_params(P1, n);
        CMatrix Dn = build_matrix(OperatorParams(2.0, it.a_n, it.b_n, it.c_n, it.u0_n), 64).entries;
        int lead = 64 - 8 * n;
        double sc = std::max(1.0, Dn.max_abs());
        for (int i = 0; i < lead; ++i)
            for (int j = 0; j < lead; ++j)
                CHECK(std::abs(Sn.at(i, j) - Dn.at(i, j)) <= 1e-6 * sc);
    }
}

TEST_CASE("norm sandwich against the bound constant") {
    const OperatorParams sets[] = {
        params(0.5, 0, 0, 1),
        params(0.5, 0.5, 0.5, 1),
        params(0, 0.5, 1, std::exp(-0.5)),
    };
    for (const auto& P : sets) {
        double M = bound_constant(P);
        double n32 = op_norm(build_matrix(P, 32).entries);
        double n64 = op_norm(build_matrix(P, 64).entries);
        double n128 = op_norm(build_matrix(P, 128).entries);
        CHECK(n32 <= n64 * (1.0 + 1e-9));
        CHECK(n64 <= n128 * (1.0 + 1e-9));
        CHECK(M >= 0.95 * n128);
        double abs_a = std::abs(P.a);
        if (abs_a > 0.0) CHECK(M <= 1.05 * n128 / abs_a);
    }
}

TEST_CASE("serial and parallel matmul agree bitwise") {
    SplitMix64 rng(31);
    CMatrix A(33), B(33);
    for (auto& v : A.a) v = cplx(rng.symmetric(), rng.symmetric());
    for (auto& v : B.a) v = cplx(rng.symmetric(), rng.symmetric());
    CMatrix C1 = serial::matmul(A, B);
    CMatrix C2 = matmul(A, B);  // parallel dispatch unless FOCKDYN_THREADS=0
    for (std::size_t k = 0; k < C1.a.size(); ++k) CHECK(C1.a[k] == C2.a[k]);
}

TEST_CASE("matrix csv format") {
    MatrixRep rep = build_matrix(params(0.5, 0, 0, 1), 3);
    std::string csv = matrix_csv(rep);
    CHECK(csv.substr(0, csv.find('\n')) == "1+0j,0+0j,0+0j");
    CHECK(format_complex_j(cplx(1.5, -2.25)) == "1.5-2.25j");
    CHECK(format_complex_j(cplx(-0.0, -0.0)) == "0+0j");
}
