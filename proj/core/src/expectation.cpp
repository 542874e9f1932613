#include <algorithm>
#include <cmath>

#include "qm/errors.hpp"
#include "qm/qcms.hpp"

namespace qm {

ComplexMatrix conditional_expectation(const FilteredAlgebra& alg, int level,
                                      const ComplexMatrix& m) {
  if (alg.is_commutative()) throw InvalidArgument("matrix expectation on a commutative algebra");
  alg.check_level(level);
  const Eigen::Index dim = alg.dimension();
  if (m.rows() != dim || m.cols() != dim) throw InvalidArgument("matrix has the wrong size");

  const Eigen::Index lead = Eigen::Index{1} << (level - 1);
  const Eigen::Index trail = dim / lead;
  ComplexMatrix reduced = ComplexMatrix::Zero(lead, lead);
  for (Eigen::Index i = 0; i < lead; ++i) {
    for (Eigen::Index j = 0; j < lead; ++j) {
      std::complex<double> s = 0.0;
      for (Eigen::Index t = 0; t < trail; ++t) s += m(i * trail + t, j * trail + t);
      reduced(i, j) = s / static_cast<double>(trail);
    }
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < lead; ++i) {
    for (Eigen::Index j = 0; j < lead; ++j) {
      for (Eigen::Index t = 0; t < trail; ++t) out(i * trail + t, j * trail + t) = reduced(i, j);
    }
  }
  return out;
}

Element conditional_expectation(const FilteredAlgebra& alg, int level, const Element& a) {
  if (&a.algebra() != &alg) throw InvalidArgument("element belongs to a different algebra");
  alg.check_level(level);
  if (!alg.is_commutative()) {
    ComplexMatrix e = conditional_expectation(alg, level, a.matrix());
    // Partial traces of Hermitian matrices are Hermitian up to rounding; symmetrize.
    e = 0.5 * (e + e.adjoint()).eval();
    return Element::from_matrix(a.algebra_ptr(), std::move(e));
  }

  const auto& w = alg.weights();
  const auto& v = a.values();
  const int tail_index = alg.dimension() - 1;
  const Partition& part = alg.partition(level);
  DenseVector out(v.size());
  for (std::size_t b = 0; b < part.size(); ++b) {
    long double mass = 0.0L;
    long double integral = 0.0L;
    for (int i : alg.sorted_block(level, static_cast<int>(b))) {
      const long double wi = w[static_cast<std::size_t>(i)];
      mass += wi;
      if (a.has_tail() && i == tail_index) {
        integral += a.tail()->mass_integral();
      } else {
        integral += wi * v(i);
      }
    }
    const double mean = static_cast<double>(integral / mass);
    for (int i : part[b]) out(i) = mean;
  }
  return Element::from_values(a.algebra_ptr(), std::move(out));
}

double sup_norm(const Element& a) {
  if (!a.is_commutative()) return spectral_norm(a.matrix());
  const auto& v = a.values();
  if (!a.has_tail()) return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  double best = a.tail()->sup_deviation(0.0);
  for (Eigen::Index i = 0; i + 1 < v.size(); ++i) best = std::max(best, std::abs(v(i)));
  return best;
}

double residual(const FilteredAlgebra& alg, int level, const Element& a) {
  return sup_norm(a - conditional_expectation(alg, level, a));
}

}  // namespace qm
