// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace fockdyn {

using cplx = std::complex<double>;

// Absolute tolerance for complex equality decisions (c == -a*conj(b), u0 == 1, ...).
inline constexpr double kEqTol = 1e-12;

inline bool approx_eq(cplx x, cplx y, double tol = kEqTol) {
    return std::abs(x - y) <= tol;
}

/// Parameters of the operator W f = u * (f o psi) on the Fock space F_p,
/// with psi(z) = a z + b and u(z) = u0 * exp(c z).
///
/// Boundedness is a verdict, not a construction precondition: any |a| is
/// accepted here.  u0 = 0 (the zero operator) is rejected.
struct OperatorParams {
    double p = 2.0;
    cplx a{};
    cplx b{};
    cplx c{};
    cplx u0{1.0, 0.0};

    OperatorParams() = default;
    OperatorParams(double p_, cplx a_, cplx b_, cplx c_, cplx u0_)
        : p(p_), a(a_), b(b_), c(c_), u0(u0_) {
        if (p < 1.0) throw std::invalid_argument("OperatorParams: p must be >= 1");
        if (u0 == cplx(0.0, 0.0))
            throw std::invalid_argument("OperatorParams: u0 must be nonzero");
    }

    /// True when u is identically 1 (c == 0 and u0 == 1 within tolerance).
    bool weight_is_one() const {
        return approx_eq(c, 0.0) && approx_eq(u0, 1.0);
    }
};

/// Closed-form symbol of the n-th iterate: psi^n(z) = a_n z + b_n and
/// u_n(z) = u0_n * exp(c_n z), so that W^n = W_(u_n, psi^n).
struct IterateParams {
    int n = 1;
    cplx a_n{};
    cplx b_n{};
    cplx c_n{};
    cplx u0_n{};
};

/// Entire function exp(alpha z) * sum_k coeffs[k] z^k.  Closed under W,
/// which makes it the exact orbit representation.
struct ExpPoly {
    cplx alpha{};
    std::vector<cplx> coeffs{cplx(1.0, 0.0)};

    static ExpPoly one() { return ExpPoly{cplx(0.0), {cplx(1.0)}}; }

    /// Reproducing kernel K_w(z) = exp(conj(w) z).
    static ExpPoly kernel(cplx w) { return ExpPoly{std::conj(w), {cplx(1.0)}}; }

    /// Normalized kernel k_w(z) = exp(conj(w) z - |w|^2 / 2), of unit norm.
    static ExpPoly normalized_kernel(cplx w) {
        return ExpPoly{std::conj(w), {cplx(std::exp(-std::norm(w) / 2.0))}};
    }

    /// Basis vector e_m(z) = z^m / sqrt(m!).
    static ExpPoly basis(int m);

    int degree() const {
        int d = static_cast<int>(coeffs.size()) - 1;
        while (d > 0 && coeffs[static_cast<std::size_t>(d)] == cplx(0.0)) --d;
        return d;
    }

    /// True when the function has no zeros in the plane (constant polynomial part).
    bool zero_free() const { return degree() == 0 && coeffs[0] != cplx(0.0); }

    cplx eval(cplx z) const {
        cplx pv = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) pv = pv * z + coeffs[k];
        return std::exp(alpha * z) * pv;
    }
};

}  // namespace fockdyn
