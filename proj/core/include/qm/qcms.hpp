#pragma once

// Conditional expectations onto filtration levels, the norm of the algebra,
// the Lip-norm L_β(a) = sup_n ‖a − E_n(a)‖/β(n), and the residual-based
// scale sequences β_a, β_a² with their domain diagnostics.

#include <optional>
#include <vector>

#include "qm/algebra.hpp"
#include "qm/tolerance.hpp"

namespace qm {

/// The τ-preserving conditional expectation E_n onto level n.
///
/// Commutative: the τ-weighted average over each block of partition n.
/// Matrix: the normalized partial trace over the trailing K-(n-1) sites,
/// re-embedded as a' ⊗ 1. The result never carries a tail.
Element conditional_expectation(const FilteredAlgebra& alg, int level, const Element& a);

/// E_n on an arbitrary (not necessarily Hermitian) matrix of the matrix kind.
ComplexMatrix conditional_expectation(const FilteredAlgebra& alg, int level,
                                      const ComplexMatrix& m);

/// ‖a‖: max |a(x)| (tail included) or the spectral norm.
double sup_norm(const Element& a);

/// ‖a − E_n(a)‖.
double residual(const FilteredAlgebra& alg, int level, const Element& a);

struct SeminormReport {
  double value = 0.0;
  /// terms[n-1] = ‖a − E_n(a)‖/β(n).
  std::vector<double> terms;
  /// running[n-1] = max_{m ≤ n} terms[m-1].
  std::vector<double> running;
  /// a lies in the top level, so no level beyond the truncation contributes.
  bool exact = false;
};

/// L_β(a) over levels 1..max_level (default: every level of the truncation).
SeminormReport lip_seminorm(const FilteredAlgebra& alg, const BetaSequence& beta,
                            const Element& a, std::optional<int> max_level = std::nullopt);

/// ‖a − E_n(a)‖ for n = 1..levels.
std::vector<double> residual_decay(const FilteredAlgebra& alg, const Element& a, int levels);

/// β_a(n) = ‖a − E_n(a)‖ for n = 1..levels. Throws ZeroResidual when some
/// residual is at most `zero_threshold` (a already lies in that level).
BetaSequence beta_from_element(const FilteredAlgebra& alg, const Element& a, int levels,
                               double zero_threshold = tol::kZeroResidual);

/// β_a(n)² for n = 1..levels, same preconditions.
BetaSequence beta_squared_from_element(const FilteredAlgebra& alg, const Element& a, int levels,
                                       double zero_threshold = tol::kZeroResidual);

struct DomainSeparation {
  std::vector<double> beta_a;
  std::vector<double> beta_sq;
  /// Running L_{β_a}(a) per level; constantly 1.
  std::vector<double> with_beta_a;
  /// Running L_{β_a²}(a) = max_{m ≤ n} 1/β_a(m); grows without bound.
  std::vector<double> with_beta_sq;
  double last_value = 0.0;
  /// with_beta_sq[last] / with_beta_sq[last-1] (1 when only one level).
  double growth_ratio = 1.0;
};

DomainSeparation domain_separation_report(const FilteredAlgebra& alg, const Element& a, int levels,
                                          double zero_threshold = tol::kZeroResidual);

}  // namespace qm
