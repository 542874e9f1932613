#pragma once

// States on truncated algebras and the Monge–Kantorovich distance
//   mk_L(μ, ν) = sup { |μ(a) − ν(a)| : L_β(a) ≤ 1 },
// computed as a linear program for commutative algebras.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "qm/algebra.hpp"

namespace qm {

class StateFunctional {
 public:
  /// Nonnegative weights summing to 1 within 1e-12.
  static StateFunctional from_weights(AlgebraPtr alg, DenseVector weights);
  /// Hermitian positive semidefinite with unit trace.
  static StateFunctional from_density(AlgebraPtr alg, ComplexMatrix rho);

  const FilteredAlgebra& algebra() const noexcept { return *alg_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return alg_; }
  const DenseVector& weights() const;
  const ComplexMatrix& density() const;

  /// μ(a). Tailed elements are evaluated through their tail mean, which is
  /// exact only for states that are τ-proportional on the tail label.
  double operator()(const Element& a) const;

 private:
  StateFunctional(AlgebraPtr alg, std::variant<DenseVector, ComplexMatrix> data)
      : alg_(std::move(alg)), data_(std::move(data)) {}

  AlgebraPtr alg_;
  std::variant<DenseVector, ComplexMatrix> data_;
};

/// Unit mass at a point, looked up by label.
StateFunctional pure_state(const AlgebraPtr& alg, const std::string& label);
StateFunctional pure_state(const AlgebraPtr& alg, int point);

/// Strictly positive seeded weights (or a full-rank density matrix),
/// identical for identical seeds.
StateFunctional random_state(const AlgebraPtr& alg, std::uint64_t seed);

/// Rescales ν inside each level-n block so that every block carries the same
/// mass under ν' as under μ; ν's conditional distribution inside a block is
/// kept (τ's is used where ν gives the block no mass). Returns (μ, ν').
std::pair<StateFunctional, StateFunctional> push_agreement(const FilteredAlgebra& alg,
                                                           const StateFunctional& mu,
                                                           const StateFunctional& nu, int level);

/// Largest disagreement of μ and ν on level n: block masses, or for the
/// matrix kind the entries of the reduced density matrices.
double agreement_gap(const FilteredAlgebra& alg, const StateFunctional& mu,
                     const StateFunctional& nu, int level);

struct DistanceReport {
  double value = 0.0;
  Element witness;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<int> agreement_level;
  int pivots = 0;
};

/// mk_{L_β}(μ, ν) inside the truncation: maximize (μ − ν)·a subject to
/// |a_i − (E_n a)_i| ≤ β(n) for every point i and level n = 1..N-1, with the
/// gauge a_ref = 0. Throws MatrixKindUnsupported for matrix algebras and
/// NumericalFailure if the LP does not reach optimality.
DistanceReport mk_distance(const FilteredAlgebra& alg, const BetaSequence& beta,
                           const StateFunctional& mu, const StateFunctional& nu,
                           int reference_point = 0);

struct SandwichBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// β(n)|μ(w) − ν(w)| ≤ mk_{L_β}(μ, ν) ≤ 2β(n) for states agreeing on level n
/// and a witness with L_β(w) = 1/β(n). Throws AgreementViolated or
/// WitnessMismatch when a hypothesis fails.
SandwichBounds sandwich_bounds(const FilteredAlgebra& alg, const BetaSequence& beta,
                               const StateFunctional& mu, const StateFunctional& nu,
                               const Element& witness, int level);

/// Copies the bounds into the report; throws NumericalFailure if
/// lower ≤ value ≤ upper + 1e-8 does not hold.
void attach_bounds(DistanceReport& report, const SandwichBounds& bounds, int level);

}  // namespace qm
