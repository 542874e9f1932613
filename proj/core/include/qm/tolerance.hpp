#pragma once

namespace qm::tol {

// Feasibility of LP solutions and agreement of computed metrics.
inline constexpr double kFeasibility = 1e-9;
// Identities that hold exactly up to rounding (trace preservation, residuals of members).
inline constexpr double kExact = 1e-12;
// Default threshold below which ‖a − E_n(a)‖ counts as zero.
inline constexpr double kZeroResidual = 1e-12;
// Level-n agreement of two states, checked on block indicators.
inline constexpr double kAgreement = 1e-10;

}  // namespace qm::tol
