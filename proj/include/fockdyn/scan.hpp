// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fockdyn/dense.hpp"
#include "fockdyn/matrix_rep.hpp"
#include "fockdyn/types.hpp"

namespace fockdyn {

/// Grid of resolvent test points.  Ritt scans place lambda = 1 + rho e^{i theta},
/// Kreiss scans lambda = (1 + rho) e^{i theta}; points with |lambda| <= 1 + 1e-9
/// are filtered out.
struct ScanGrid {
    std::vector<double> rho_values;
    std::vector<double> theta_values;
};

/// rho log-spaced 1e-4..2 (25 points), theta uniform (64 points in (-pi, pi]).
ScanGrid default_grid();

enum class ScanKind { Ritt, Kreiss };

struct ScanPoint {
    cplx lambda;
    double value;
};

struct ScanResult {
    ScanKind kind = ScanKind::Ritt;
    int n_dim = 0;
    int n_dim_half = 0;
    std::vector<ScanPoint> points;  // at n_dim
    double supremum = 0.0;
    cplx argmax{};
    double supremum_half = 0.0;
    std::vector<cplx> skipped;  // lambda in the truncation spectrum
    // "Bounded" when the supremum moved < 10% between the two truncations.
    std::string verdict_hint;
};

/// sup over the grid of |lambda - 1| * ||R(lambda, T_N)||, reported at N and N/2.
ScanResult ritt_functional_scan(const OperatorParams& P, int N, const ScanGrid& grid);

/// sup over the grid of (|lambda| - 1) * ||R(lambda, T_N)||.
ScanResult kreiss_functional_scan(const OperatorParams& P, int N, const ScanGrid& grid);

/// Scan over prebuilt truncations (shared by verify, avoids rebuilding).
ScanResult scan_matrices(const CMatrix& T, const CMatrix& T_half, ScanKind kind,
                         const ScanGrid& grid);

std::string scan_csv(const ScanResult& full, const std::vector<ScanPoint>& half_points);
std::vector<ScanPoint> scan_points(const CMatrix& T, ScanKind kind, const ScanGrid& grid,
                                   std::vector<cplx>* skipped = nullptr);

/// Nagy-Zemanek sequence n ||T^{n+1} - T^n|| with the closed-form lower
/// bound |u(z0)|^n |u(z0) - 1| attached when a != 1.
struct NzPoint {
    int n;
    double diff_norm;
    double scaled;       // n * diff_norm
    double lower_bound;  // n * |u(z0)|^n |u(z0)-1|, NaN when a == 1
};
std::vector<NzPoint> nagy_zemanek_sequence(const OperatorParams& P, int N, int n_max);

/// Randomized signed sums of consecutive-iterate differences.  The estimate
/// is the maximum over seeded random sign sequences plus two deterministic
/// candidates (all-ones and a greedy sequence), normalized by sup|a_n| = 1.
struct UncondEstimate {
    double estimate = 0.0;
    double random_max = 0.0;
    double greedy = 0.0;
    double all_ones = 0.0;
    double triangle_sum = 0.0;  // sum of ||T^n - T^{n-1}||, an upper bound
    bool greedy_monotone = true;  // greedy partial norms never decrease
    int n_terms = 0;
    int trials = 0;
    std::uint64_t seed = 0;
};
UncondEstimate unconditional_ritt_estimate(const OperatorParams& P, int N, int n_terms,
                                           int trials, std::uint64_t seed);
UncondEstimate uncond_estimate_matrix(const CMatrix& T, int n_terms, int trials,
                                      std::uint64_t seed);

}  // namespace fockdyn
