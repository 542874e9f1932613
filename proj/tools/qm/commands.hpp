#pragma once

#include <string>

#include "qm/config.hpp"
#include "qm/output.hpp"

namespace qm::cli {

/// LP distances between all pure states, the closed-form companion matrix
/// (non-increasing β only) and their largest discrepancy. Commutative only.
Artifact cmd_distances(const Workspace& ws);

/// β_a, β_a², the running L_{β_a}(a) and L_{β_a²}(a) per level, and a divergence summary.
Artifact cmd_domain(const Workspace& ws, const std::string& element);

/// Per-level terms and running value of L_β(a).
Artifact cmd_seminorm(const Workspace& ws, const std::string& element);

}  // namespace qm::cli
