#pragma once

#include <optional>
#include <string>

#include "lightsector/package.hpp"
#include "lightsector/scenario.hpp"
#include "lightsector/verification.hpp"

namespace lightsector {

enum class ReportFormat { Text, Machine };

struct ReportDocument {
  std::string scenario;
  LightSectorPackage package;
  Classification classification;
  /// Present when the block-reduced structure checks were applicable.
  std::optional<VerificationReport> verification;
  /// Why the checks were skipped, when they were.
  std::string verification_skipped;
};

/// Assembles, classifies and (when a separating partition is present)
/// verifies the scenario.
ReportDocument build_report(const ScenarioFile& scenario);

/// Byte-deterministic rendering. The machine format is a sequence of
/// `key: value` lines whose keys are listed in README.md.
std::string render_report(const ReportDocument& doc, ReportFormat format);

/// Text listing of a verification report: one line per failed check plus a
/// per-item summary.
std::string render_verification(const VerificationReport& report);

}  // namespace lightsector
