// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "fockdyn/types.hpp"

namespace fockdyn {

/// Closed-form parameters of W^n.  The a == 1 case is a separate branch
/// (b_n = n b, c_n = n c) rather than a limit of the a != 1 formulas.
IterateParams iterate_params(const OperatorParams& P, int n);

/// Composition W_m after W_n, yielding the symbol of W^(m+n).
IterateParams compose(const IterateParams& outer, const IterateParams& inner);

/// Fixed point z0 = b / (1 - a) of psi.  Throws for a == 1.
cplx fixed_point(const OperatorParams& P);

/// u(z0) = u0 * exp(c b / (1 - a)).  Throws for a == 1.
cplx weight_at_fixed_point(const OperatorParams& P);

/// M(u, psi) = sup_z |u(z)| exp((|psi(z)|^2 - |z|^2) / 2), in closed form.
/// Returns +infinity when the supremum is infinite (unbounded operator).
double bound_constant(const OperatorParams& P);

/// W applied to an ExpPoly, exactly:
///   u0 e^{cz} e^{alpha(az+b)} p(az+b)  ->  ExpPoly(c + alpha a, binomial coeffs).
ExpPoly apply(const OperatorParams& P, const ExpPoly& f);
ExpPoly apply(const IterateParams& I, const ExpPoly& f, double p = 2.0);

/// First N coefficients of f in the orthonormal basis e_m(z) = z^m / sqrt(m!):
///   <e^{alpha z} z^k, e_m> = sqrt(m!) alpha^(m-k) / (m-k)!   (m >= k).
/// Factorials run through lgamma; magnitudes and phases are kept separate.
std::vector<cplx> expoly_coeffs(const ExpPoly& f, int N);

/// Squared F_2 norm with the truncation grown until ten consecutive
/// coefficients add less than tol^2 times the running norm.
double expoly_norm_sq(const ExpPoly& f, double tol = 1e-12);

/// <f, g> at the automatic truncation of expoly_norm_sq.
cplx expoly_inner(const ExpPoly& f, const ExpPoly& g, double tol = 1e-12);

/// Exact squared F_2 norm of a polynomial sum c_k z^k: sum |c_k|^2 k!.
double poly_norm_sq(const std::vector<cplx>& coeffs);

}  // namespace fockdyn
