// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "fockdyn/dense.hpp"
#include "fockdyn/types.hpp"

namespace fockdyn {

/// Truncated matrix of W on F_2 in the basis e_m(z) = z^m / sqrt(m!):
///
///   entry[n][m] = u0 * sum_{j<=min(m,n)} sqrt(n!) sqrt(m!) a^j b^(m-j) c^(n-j)
///                                        / (j! (m-j)! (n-j)!)
///
/// evaluated in the log-gamma domain with unit phases tracked separately;
/// terms more than 60 e-folds below the largest are dropped.
struct MatrixRep {
    int n_dim = 0;
    CMatrix entries;
    OperatorParams params;
    bool bounded_params = true;  // false flags a non-convergent truncation
};

/// Requires p == 2.  Unbounded parameter sets still build (flagged), so the
/// classifier's verdict can be validated by watching op_norm diverge in N.
MatrixRep build_matrix(const OperatorParams& P, int N);

/// CSV dump: one row per matrix row, entries "re+imj" at 17 significant digits.
std::string matrix_csv(const MatrixRep& M);

/// "re+imj" formatting shared by the CSV writers.
std::string format_complex_j(cplx v);

}  // namespace fockdyn
