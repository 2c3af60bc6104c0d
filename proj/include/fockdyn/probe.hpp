// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "fockdyn/types.hpp"

namespace fockdyn {

/// Empirical non-supercyclicity evidence.  The probe documents numbers, not a
/// proof; n_max and the 0.01 reporting threshold are conventions.
struct ProbeResult {
    double min_projective_distance = 1.0;  // over all targets and n
    double ratio_max = 0.0;
    double ratio_bound_C = 0.0;
    int n_max = 0;
    int targets_tested = 0;
    bool ratio_evaluated = false;
    std::string ratio_skip_reason;
    struct TargetStat {
        double min_distance;
        int argmin_n;
    };
    std::vector<TargetStat> per_target;
    std::vector<std::vector<double>> distances;  // [target][n], n = 0..n_max
    std::vector<double> ratios;                  // n = 1..n_max
};

/// Projective distance sqrt(1 - |<x,y>|^2 / (||x||^2 ||y||^2)) between the
/// two coefficient vectors; scale-invariant by construction.
double projective_distance(const std::vector<cplx>& x, const std::vector<cplx>& y);

/// (1) exact orbit W^n f expanded at truncation N, projective distances to
/// each target; (2) for a != 1 and zero-free f, the orbit ratio
/// u(z) f(psi^n z) / (u(psi^n z) f(psi^{n+1} z)) at z = z0 + 1 against the
/// boundary-sampled bound C = max|u| max|f| / (min|u| min|f|) on |z - z0| <= 1.
ProbeResult supercyclic_probe(const OperatorParams& P, const ExpPoly& f,
                              const std::vector<ExpPoly>& targets, int n_max, int N);

/// Norm of the leading K x K block of T_N* T_N - I for the normalized
/// translation family u = k_{-b}, psi = z + b.  Throws for other shapes.
double isometry_check(const OperatorParams& P, int N, int K);

std::string probe_csv(const ProbeResult& r);

}  // namespace fockdyn
