#pragma once

// Seeded generators shared by the unit and acceptance suites.

#include <random>

#include "qm/algebra.hpp"
#include "qm/qcms.hpp"

namespace qm::testing {

using Rng = std::mt19937_64;

inline double gauss(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return g(rng);
}

/// Arbitrary (not necessarily Hermitian) matrix in level n: B ⊗ 1.
inline ComplexMatrix random_level_matrix(const FilteredAlgebra& alg, int level, Rng& rng) {
  const Eigen::Index dim = alg.dimension();
  const Eigen::Index lead = Eigen::Index{1} << (level - 1);
  const Eigen::Index trail = dim / lead;
  ComplexMatrix b(lead, lead);
  for (Eigen::Index i = 0; i < lead; ++i)
    for (Eigen::Index j = 0; j < lead; ++j) b(i, j) = {gauss(rng), gauss(rng)};
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < lead; ++i)
    for (Eigen::Index j = 0; j < lead; ++j)
      for (Eigen::Index t = 0; t < trail; ++t) out(i * trail + t, j * trail + t) = b(i, j);
  return out;
}

/// Random self-adjoint element of level n (top level = anything).
inline Element random_level_element(const AlgebraPtr& alg, int level, Rng& rng) {
  if (alg->is_commutative()) {
    DenseVector v(alg->dimension());
    for (const Block& block : alg->partition(level)) {
      const double x = gauss(rng);
      for (int i : block) v(i) = x;
    }
    return Element::from_values(alg, std::move(v));
  }
  ComplexMatrix m = random_level_matrix(*alg, level, rng);
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  return Element::from_matrix(alg, std::move(h));
}

inline Element random_element(const AlgebraPtr& alg, Rng& rng) {
  return random_level_element(alg, alg->levels(), rng);
}

}  // namespace qm::testing
