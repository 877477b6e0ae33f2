#pragma once

#include <string>

#include "cyclescope/turan.hpp"
#include "cyclescope/verify.hpp"

namespace cyclescope {

inline constexpr const char* kReportVersion = "0.1.0";

/// Stable key-value/nested-list text documents. Serialization is
/// deterministic: fixed key order, no timestamps, no worker counts, so
/// reports from runs with identical parameters are byte-identical.
std::string serialize_report(const VerificationReport& r);
std::string serialize_report(const TuranResult& r);

/// Parses a serialized verification report (used to resume runs). Throws
/// std::runtime_error on malformed input.
VerificationReport parse_verification_report(const std::string& text);

}  // namespace cyclescope
