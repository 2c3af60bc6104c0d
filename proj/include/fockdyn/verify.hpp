// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "fockdyn/classify.hpp"
#include "fockdyn/config.hpp"

namespace fockdyn {

struct UnboundedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::ordered_json classification_json(const ClassificationReport& r);

struct VerifyOutcome {
    nlohmann::ordered_json report;
    bool consistent = false;
};

/// Runs the full numeric suite (scans, power differences, signed sums,
/// supercyclicity probe, isometry block when applicable, inequality checks)
/// and grades each section against the symbolic verdicts.  Throws
/// UnboundedError when the parameters are unbounded.
VerifyOutcome verify_run(const RunConfig& cfg);

}  // namespace fockdyn
