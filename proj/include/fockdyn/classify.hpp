// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockdyn/types.hpp"

namespace fockdyn {

struct Verdict {
    enum class Value { Yes, No, OpenConjecture };
    Value value = Value::No;
    std::string reason;
    // Distance to the deciding inequality's boundary; near-zero margins flag
    // cases that sit on a strict/non-strict edge.
    double margin = 0.0;

    bool yes() const { return value == Value::Yes; }
    bool no() const { return value == Value::No; }
    static const char* name(Value v);
};

struct SpectrumDescriptor {
    enum class Kind { GeometricWithZero, FinitePoints, FullCircle, Singleton };
    Kind kind = Kind::Singleton;
    cplx base{};     // u(z0), or u(0) when a == 1
    cplx ratio{};    // a
    double radius = 0.0;  // FullCircle only
    std::vector<cplx> points;  // FinitePoints only
    std::string reason;

    static const char* name(Kind k);

    /// Concrete points for containment checks: the geometric orbit is cut
    /// once below 1e-14 in modulus, the circle is sampled.
    std::vector<cplx> sample_points(int max_count = 512) const;
};

struct ClassificationReport {
    bool bounded = false;
    bool compact = false;
    bool power_bounded = false;
    bool supercyclic = false;  // always false when bounded
    Verdict ritt;
    Verdict unconditional_ritt;
    std::optional<SpectrumDescriptor> spectrum;
    double m_constant = 0.0;   // M(u, psi)
    double norm_upper = 0.0;   // |a|^(-2/p) * M
    std::string bounded_reason;
    // Convenience values for the numeric cross-checks.
    bool has_fixed_point = false;
    cplx weight_at_z0{};
};

/// Total classifier: every OperatorParams with u0 != 0 yields a report.
ClassificationReport classify(const OperatorParams& P);

/// Closed-form spectrum.  Throws std::invalid_argument for unbounded P.
SpectrumDescriptor spectrum_closed_form(const OperatorParams& P);

/// Ritt resolvent condition verdict.  Throws for unbounded P.
Verdict ritt_verdict(const OperatorParams& P);

/// Unconditional Ritt verdict.  Throws for unbounded P.
Verdict unconditional_ritt_verdict(const OperatorParams& P);

}  // namespace fockdyn
