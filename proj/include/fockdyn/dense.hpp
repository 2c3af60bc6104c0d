// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockdyn/types.hpp"

namespace fockdyn {

/// Dense square complex matrix, row-major.
struct CMatrix {
    int n = 0;
    std::vector<cplx> a;

    CMatrix() = default;
    explicit CMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

    cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const cplx& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static CMatrix identity(int dim);
    CMatrix adjoint() const;
    CMatrix leading_block(int k) const;
    double max_abs() const;
};

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IterationLimitError : std::runtime_error {
    double last_estimate;
    double residual;
    IterationLimitError(const std::string& msg, double est, double res)
        : std::runtime_error(msg), last_estimate(est), residual(res) {}
};

// Reference kernels, kept serial for testing against the parallel paths.
namespace serial {
CMatrix matmul(const CMatrix& A, const CMatrix& B);
}

/// C = A * B; runs the OpenMP row-parallel kernel unless FOCKDYN_THREADS=0.
/// Each entry is reduced sequentially, so results are identical bit for bit
/// across thread counts.
CMatrix matmul(const CMatrix& A, const CMatrix& B);

CMatrix add(const CMatrix& A, const CMatrix& B);
CMatrix sub(const CMatrix& A, const CMatrix& B);
void axpy(cplx alpha, const CMatrix& X, CMatrix& Y);  // Y += alpha X

std::vector<cplx> matvec(const CMatrix& A, const std::vector<cplx>& x);
std::vector<cplx> adjoint_matvec(const CMatrix& A, const std::vector<cplx>& x);

/// Largest singular value by power iteration on the Gram form M*M.
/// Deterministic all-ones start; on a stall (relative change < 1e-14 for 50
/// steps) one restart from the alternating +-1 vector.
double op_norm(const CMatrix& M, double rel_tol = 1e-9, int max_iter = 10000);

/// LU with partial pivoting: P A = L U packed in place.  luH caches the
/// conjugate transpose of the packed factors so the adjoint solves read
/// rows contiguously.
struct LuFactors {
    CMatrix lu;
    CMatrix luH;
    std::vector<int> perm;
};
LuFactors lu_factor(const CMatrix& A);
std::vector<cplx> lu_solve(const LuFactors& F, const std::vector<cplx>& b);
/// Solves A* x = b reusing the factorization of A.
std::vector<cplx> lu_solve_adjoint(const LuFactors& F, const std::vector<cplx>& b);

/// 1 / sigma_min(lambda I - M) via inverse power iteration on the LU factors.
/// Throws SingularMatrixError when lambda hits the truncation spectrum.
double resolvent_norm(const CMatrix& M, cplx lambda, double rel_tol = 1e-9,
                      int max_iter = 10000);

/// M^n by repeated squaring.
CMatrix mat_power(const CMatrix& M, int n);

/// (||M^n||, ||M^(n+1) - M^n||).
struct PowerDiff {
    double norm_n;
    double diff_norm_n;
};
PowerDiff mat_power_diff(const CMatrix& M, int n);

/// max_{0 <= k <= n_max} ||M^k|| by incremental products.
double power_norm_max(const CMatrix& M, int n_max);

}  // namespace fockdyn
