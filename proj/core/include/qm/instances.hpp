#pragma once

// The three worked filtrations: the quantized interval N̄ = {1/2^{k-1}} ∪ {0},
// the Cantor space {0,1}^D, and the UHF algebra M_{2^K}.

#include <string>
#include <vector>

#include "qm/algebra.hpp"
#include "qm/mk.hpp"

namespace qm {

/// Level-N truncation of C(N̄).
///
/// Points 0..N-2 are x = 1, 1/2, …, 1/2^{N-2} (labels "1", "1/2", …) with
/// weights 2^{-1}, …, 2^{-(N-1)}; point N-1 is the tail label "tail" standing
/// for {x ≤ 1/2^{N-1}} ∋ 0, with weight 2^{-(N-1)}. Level n keeps the first
/// n-1 points as singletons and merges the rest into one tail block.
struct IntervalModel {
  int level = 0;
  AlgebraPtr algebra;

  explicit IntervalModel(int level);

  int tail_index() const noexcept { return level - 1; }
  /// Point index of x ∈ {1/2^{k-1} : k ≤ N-1} ∪ {0}; 0 maps to the tail.
  int index_of(double x) const;
  /// x-coordinate of a point; the tail reports 0.
  double coordinate(int point) const;
};

/// χ_n, the indicator of 1/2^{n-1}; χ_0 = 0. Requires 0 ≤ n ≤ N-1.
Element chi(const IntervalModel& model, int n);
/// χ_{n_c}, the indicator of {x ≤ 1/2^{n-1}}; chi_tail(0) is the unit. Requires 0 ≤ n ≤ N-1.
Element chi_tail(const IntervalModel& model, int n);
/// φ_n: 0 above 1/2^{n-1}, −1 at it, 1 below; φ_0 = 1. Requires 0 ≤ n ≤ N-1.
Element phi(const IntervalModel& model, int n);

/// Exact pointwise check of χ_n = 2^{-(n+1)}(φ_0 − 2^{n+1}φ_n) + Σ_{k=0}^{n} 2^{-(k+1)} φ_{n-k}.
bool chi_expansion_check(const IntervalModel& model, int n);
/// φ_n·φ_m = φ_{max(n,m)} for n ≠ m and χ_{n_c} for n = m, pointwise and exactly.
bool product_table_check(const IntervalModel& model, int n, int m);
/// τ_v(φ_n φ_m).
double orthogonality_check(const IntervalModel& model, int n, int m);

/// τ_v for an arbitrary weight vector v over the truncation's points.
double tau_with_weights(const std::vector<double>& v, const Element& a);

/// p_1(x) = x, sampled exactly up to `cutoff` and continued affinely through (0, 0).
Element p1(const IntervalModel& model, int cutoff = 30);

/// An interval element from samples f(1/2^{k-1}), k = 1..K, and f(0) = limit.
/// Samples beyond the truncation go into the tail; missing samples are filled
/// by the affine continuation (affine) or by the limit.
Element interval_element(const IntervalModel& model, const std::vector<double>& samples,
                         double limit, bool affine);

/// 2β(n) with n = 1 − log₂ max(x, y); both points distinct members of the truncation.
double closed_form_mk(const IntervalModel& model, const BetaSequence& beta, double x, double y);
double closed_form_mk_points(const IntervalModel& model, const BetaSequence& beta, int i, int j);

/// Cantor space truncated at depth D: binary words of length D ordered
/// lexicographically, uniform weights, level n = cylinders on the first n-1
/// letters (so N = D + 1).
struct CantorModel {
  int depth = 0;
  AlgebraPtr algebra;

  explicit CantorModel(int depth);

  std::string word(int point) const;
  /// Length of the common prefix of two words.
  int prefix_length(int i, int j) const;
};

/// r_k(w) = 1 − 2w_k. Requires 1 ≤ k ≤ D.
Element rademacher(const CantorModel& model, int k);
/// 2β(prefix + 1).
double cantor_closed_form(const CantorModel& model, const BetaSequence& beta, int i, int j);

/// M_{2^K} with level n = M_{2^{n-1}} ⊗ 1 and the normalized trace.
struct UhfModel {
  int sites = 0;
  AlgebraPtr algebra;

  explicit UhfModel(int sites);
};

/// 1 ⊗ … ⊗ σ_x ⊗ … ⊗ 1 with σ_x at site k (1-based, site 1 leading).
Element pauli_site(const UhfModel& model, int k);

}  // namespace qm
