#pragma once

#include <string>
#include <vector>

#include "qseries/identities.hpp"

namespace qseries {

// JSON document {seed, tol, n_samples, cases: [...]}; complex values are
// {"re": .., "im": ..}. Contains no timings, so equal inputs give equal bytes.
std::string report_json(const std::vector<VerificationReport>& reports, const VerifyOptions& opt);

// One row per (case, sample).
std::string report_csv(const std::vector<VerificationReport>& reports);

// Human-readable summary, one line per case.
std::string report_text(const std::vector<VerificationReport>& reports);

}  // namespace qseries
