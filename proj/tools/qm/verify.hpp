#pragma once

#include <string>
#include <vector>

#include "qm/config.hpp"
#include "qm/output.hpp"

namespace qm::cli {

struct Check {
  std::string suite;
  std::string name;
  double tolerance = 0.0;
  double deviation = 0.0;
  bool passed = false;
  bool skipped = false;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool passed() const;
};

/// Suite names accepted by run_verify.
const std::vector<std::string>& verify_suites();

/// Runs one suite (or "all") against the configured instance. Suites that do
/// not apply to the instance are reported as skipped.
VerifyReport run_verify(const Workspace& ws, const std::string& suite);

Artifact to_artifact(const Workspace& ws, const VerifyReport& report);

}  // namespace qm::cli
