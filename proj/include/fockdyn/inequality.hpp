// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "fockdyn/classify.hpp"
#include "fockdyn/types.hpp"

namespace fockdyn {

struct StolzCheck {
    bool evaluated = false;
    double m_hat = 0.0;      // grid supremum of the Ritt functional
    double sin_theta = 0.0;  // sin(arccos(1 / m_hat))
    double max_dist = 0.0;   // worst spectrum-point distance to the hull
    bool pass = true;
    // m_hat underestimates the best constant, so the hull tested here is
    // smaller than the true one; a failure is flagged, not conclusive.
    bool conservative = true;
};

struct InequalityReport {
    int samples = 0;
    int point_violations = 0;       // |f(z)| <= e^{|z|^2/2} ||f||_2
    int derivative_violations = 0;  // |f'(w)| <= (sqrt(2 pi)+1)(1+|w|) e^{|w|^2/2} ||f||_2
    StolzCheck stolz;
    bool pass = true;
};

/// Distance from z to the convex hull of {1} and the disc of radius s.
double stolz_hull_distance(cplx z, double s);

/// Checks the pointwise growth and derivative bounds on seeded random
/// polynomials of degree <= 8 (50 sample points each, |z| <= 3), plus the
/// Stolz containment of the closed-form spectrum when a Ritt-Yes scan
/// supremum is supplied.
InequalityReport inequality_suite(const OperatorParams& P, int sample_count,
                                  std::uint64_t seed,
                                  std::optional<double> ritt_sup = std::nullopt);

}  // namespace fockdyn
