// SPDX-License-Identifier: Apache-2.0
//
// Gauss-Hermite quadrature oracle for the matrix entries, independent of
// the closed-form path in matrix_rep.cpp.  Test-only.
#pragma once

#include <vector>

#include "fockdyn/types.hpp"

namespace fockdyn::testing {

struct GaussHermite {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussHermite(int n);
};

/// <W e_m, e_n> = (1/pi) integral of u0 e^{cz} (az+b)^m conj(z)^n e^{-|z|^2}
/// / sqrt(m! n!), by 64x64 tensor Gauss-Hermite.
cplx quadrature_entry(const OperatorParams& P, int m, int n, const GaussHermite& gh);

}  // namespace fockdyn::testing
