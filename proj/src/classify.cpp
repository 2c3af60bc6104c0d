// SPDX-License-Identifier: Apache-2.0
#include "fockdyn/classify.hpp"

#include <cmath>
#include <limits>

#include "fockdyn/symbol.hpp"

namespace fockdyn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_bounded(const OperatorParams& P) {
    double abs_a = std::abs(P.a);
    if (abs_a < 1.0) return true;
    if (std::abs(abs_a - 1.0) <= kEqTol)
        return std::abs(P.c + P.a * std::conj(P.b)) <= kEqTol;
    return false;
}

Verdict no(std::string reason, double margin = 0.0) {
    return Verdict{Verdict::Value::No, std::move(reason), margin};
}
Verdict yes(std::string reason, double margin = 0.0) {
    return Verdict{Verdict::Value::Yes, std::move(reason), margin};
}
Verdict open(std::string reason) {
    return Verdict{Verdict::Value::OpenConjecture, std::move(reason), 0.0};
}

void require_bounded(const OperatorParams& P, const char* what) {
    if (!is_bounded(P))
        throw std::invalid_argument(std::string(what) + ": operator is unbounded");
}

// Smallest q <= 1024 with |a^q - 1| < 1e-12, or 0 when none.
int root_of_unity_order(cplx a) {
    cplx p = 1.0;
    for (int q = 1; q <= 1024; ++q) {
        p *= a;
        if (std::abs(p - 1.0) < 1e-12) return q;
    }
    return 0;
}

}  // namespace

const char* Verdict::name(Value v) {
    switch (v) {
        case Value::Yes: return "Yes";
        case Value::No: return "No";
        default: return "OpenConjecture";
    }
}

const char* SpectrumDescriptor::name(Kind k) {
    switch (k) {
        case Kind::GeometricWithZero: return "GeometricWithZero";
        case Kind::FinitePoints: return "FinitePoints";
        case Kind::FullCircle: return "FullCircle";
        default: return "Singleton";
    }
}

std::vector<cplx> SpectrumDescriptor::sample_points(int max_count) const {
    std::vector<cplx> out;
    switch (kind) {
        case Kind::Singleton:
            out.push_back(base);
            break;
        case Kind::FinitePoints:
            out = points;
            break;
        case Kind::GeometricWithZero: {
            out.push_back(cplx(0.0));
            cplx v = base;
            for (int m = 0; m < max_count && std::abs(v) > 1e-14; ++m) {
                out.push_back(v);
                v *= ratio;
            }
            break;
        }
        case Kind::FullCircle: {
            int samples = std::min(max_count, 128);
            for (int k = 0; k < samples; ++k) {
                double t = 2.0 * M_PI * k / samples;
                out.push_back(radius * cplx(std::cos(t), std::sin(t)));
            }
            break;
        }
    }
    return out;
}

SpectrumDescriptor spectrum_closed_form(const OperatorParams& P) {
    require_bounded(P, "spectrum_closed_form");
    SpectrumDescriptor d;
    d.ratio = P.a;
    const double abs_a = std::abs(P.a);
    if (abs_a < 1.0) {
        d.kind = SpectrumDescriptor::Kind::GeometricWithZero;
        d.base = weight_at_fixed_point(P);
        d.reason = "compact operator: {0} united with the geometric orbit u(z0) a^m";
        return d;
    }
    if (approx_eq(P.a, 1.0)) {
        d.base = P.u0;
        if (approx_eq(P.b, 0.0)) {
            d.kind = SpectrumDescriptor::Kind::Singleton;
            d.reason = "multiplication by the constant u(0)";
        } else {
            d.kind = SpectrumDescriptor::Kind::FullCircle;
            d.radius = std::abs(P.u0) * std::exp(std::norm(P.b) / 2.0);
            d.reason = "weighted translation: circle of radius |u(0)| e^{|b|^2/2}";
        }
        return d;
    }
    d.base = weight_at_fixed_point(P);
    int q = root_of_unity_order(P.a);
    if (q > 0) {
        d.kind = SpectrumDescriptor::Kind::FinitePoints;
        cplx v = d.base;
        for (int m = 0; m < q; ++m) {
            d.points.push_back(v);
            v *= P.a;
        }
        d.reason = "rotation by a root of unity: finite orbit of u(z0)";
    } else {
        d.kind = SpectrumDescriptor::Kind::FullCircle;
        d.radius = std::abs(d.base);
        d.reason = "irrational rotation: orbit closure is the circle of radius |u(z0)|";
    }
    return d;
}

Verdict ritt_verdict(const OperatorParams& P) {
    require_bounded(P, "ritt_verdict");
    const double abs_a = std::abs(P.a);
    const double abs_u0 = std::abs(P.u0);

    if (std::abs(abs_a - 1.0) <= kEqTol) {
        if (approx_eq(P.a, 1.0)) {
            if (approx_eq(P.b, 0.0)) {
                if (approx_eq(P.u0, 1.0))
                    return yes("identity-like multiplication: u(0) = 1", 0.0);
                if (abs_u0 < 1.0)
                    return yes("constant multiplication with |u(0)| < 1: iterate differences decay geometrically",
                               1.0 - abs_u0);
                return no("constant multiplication with |u(0)| = 1, u(0) != 1: spectrum meets the unit circle off 1",
                          abs_u0 - 1.0);
            }
            double gap = std::exp(-std::norm(P.b) / 2.0) - abs_u0;
            if (gap > 0.0)
                return yes("translation with |u(0)| < e^{-|b|^2/2}: power norms decay geometrically", gap);
            return no("translation with |u(0)| >= e^{-|b|^2/2}: spectrum circle reaches the unit circle",
                      -gap);
        }
        double gap = std::exp(-std::norm(P.b) / 2.0) - abs_u0;
        if (gap > 0.0)
            return yes("rotation with |u(0)| < e^{-|b|^2/2}: power norms decay geometrically", gap);
        return no("rotation with |u(0)| >= e^{-|b|^2/2}: spectrum meets the unit circle off 1", -gap);
    }

    // |a| < 1: compact.
    const cplx uz0 = weight_at_fixed_point(P);
    const double w = std::abs(uz0);
    if (w > 1.0)
        return no("power boundedness fails: |u(z0)| > 1", w - 1.0);
    if (w < 1.0)
        return yes("compact with |u(z0)| < 1: consecutive iterate differences decay geometrically",
                   1.0 - w);
    // |u(z0)| == 1 exactly (floating comparison).
    if (!approx_eq(uz0, 1.0))
        return no("spectrum point u(z0) lies on the unit circle off 1, violating the Stolz cone containment",
                  std::abs(uz0 - 1.0));
    if (P.weight_is_one())
        return yes("compact composition operator: Ritt holds exactly when C_psi is compact or the identity",
                   0.0);
    if (approx_eq(P.a, 0.0))
        return yes("constant-range symbol (a = 0) with u(b) = 1: iterates are constant from n = 1 on",
                   0.0);
    return open("u(z0) = 1 with a nonconstant weight: necessity holds, sufficiency is conjectured");
}

Verdict unconditional_ritt_verdict(const OperatorParams& P) {
    require_bounded(P, "unconditional_ritt_verdict");
    Verdict ritt = ritt_verdict(P);
    if (ritt.no())
        return no("unconditional Ritt implies Ritt (Kalton-Portal), and the Ritt condition fails: " +
                      ritt.reason,
                  ritt.margin);
    if (P.weight_is_one()) {
        Verdict v = ritt;
        v.reason = "composition operator: unconditional Ritt is equivalent to Ritt (" + ritt.reason + ")";
        return v;
    }
    if (std::abs(P.a) < 1.0) {
        cplx uz0 = weight_at_fixed_point(P);
        if (std::abs(uz0) < 1.0)
            return yes("compact with |u(z0)| < 1: sum of iterate difference norms converges "
                       "(geometric-decay extension, not a stated theorem)",
                       1.0 - std::abs(uz0));
    }
    return open("equivalence with the Ritt condition is only proved for composition operators");
}

ClassificationReport classify(const OperatorParams& P) {
    ClassificationReport r;
    r.m_constant = bound_constant(P);
    r.bounded = is_bounded(P);
    if (!r.bounded) {
        double abs_a = std::abs(P.a);
        r.bounded_reason =
            abs_a > 1.0 + kEqTol
                ? "|a| > 1: no affine symbol with |a| > 1 induces a bounded operator"
                : "|a| = 1 with c != -a conj(b): the weight forced by boundedness is u(0) e^{-a conj(b) z}";
        r.norm_upper = kInf;
        r.ritt = no("undefined: " + r.bounded_reason);
        r.unconditional_ritt = no("undefined: " + r.bounded_reason);
        return r;
    }
    r.bounded_reason = "M(u, psi) finite";
    r.compact = std::abs(P.a) < 1.0;
    if (!approx_eq(P.a, 1.0)) {
        r.has_fixed_point = true;
        r.weight_at_z0 = weight_at_fixed_point(P);
        r.power_bounded = std::abs(r.weight_at_z0) <= 1.0;
    } else {
        r.power_bounded = std::abs(P.u0) * std::exp(std::norm(P.b) / 2.0) <= 1.0;
    }
    r.supercyclic = false;  // no bounded weighted composition operator is supercyclic
    r.ritt = ritt_verdict(P);
    r.unconditional_ritt = unconditional_ritt_verdict(P);
    r.spectrum = spectrum_closed_form(P);
    r.norm_upper = std::abs(P.a) == 0.0
                       ? kInf
                       : std::pow(std::abs(P.a), -2.0 / P.p) * r.m_constant;
    return r;
}

}  // namespace fockdyn
