// SPDX-License-Identifier: Apache-2.0
#include "gauss_hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace fockdyn::testing {

// Newton iteration on the orthonormal Hermite recurrence
//   h_{k+1}(x) = x sqrt(2/(k+1)) h_k(x) - sqrt(k/(k+1)) h_{k-1}(x)
// with the classic initial guesses; weights w_i = 1 / (n h_{n-1}(x_i)^2).
GaussHermite::GaussHermite(int n) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * nodes[1];
        else
            z = 2.0 * z - nodes[static_cast<std::size_t>(i - 2)];

        auto eval = [n](double x, double& h_n, double& h_nm1) {
            double p0 = std::pow(M_PI, -0.25);
            double p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = x * std::sqrt(2.0 / (k + 1.0)) * p1 - std::sqrt(k / (k + 1.0)) * p2;
            }
            h_n = p0;
            h_nm1 = p1;
        };
        double hn = 0.0, hnm1 = 0.0;
        for (int it = 0; it < 200; ++it) {
            eval(z, hn, hnm1);
            // h_n' = sqrt(2n) h_{n-1}
            double dz = hn / (std::sqrt(2.0 * n) * hnm1);
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        eval(z, hn, hnm1);
        nodes[static_cast<std::size_t>(i)] = z;
        nodes[static_cast<std::size_t>(n - 1 - i)] = -z;
        double w = 1.0 / (n * hnm1 * hnm1);
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

cplx quadrature_entry(const OperatorParams& P, int m, int n, const GaussHermite& gh) {
    const std::size_t q = gh.nodes.size();
    const double scale = std::exp(-0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0)));
    cplx total = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < q; ++j) {
            cplx z(gh.nodes[i], gh.nodes[j]);
            cplx w = P.a * z + P.b;
            cplx wm = 1.0;
            for (int k = 0; k < m; ++k) wm *= w;
            cplx zn = 1.0;
            for (int k = 0; k < n; ++k) zn *= std::conj(z);
            row += gh.weights[j] * std::exp(P.c * z) * wm * zn;
        }
        total += gh.weights[i] * row;
    }
    return P.u0 * scale * total / M_PI;
}

}  // namespace fockdyn::testing
