#include "qm/mk.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qm/errors.hpp"
#include "qm/qcms.hpp"
#include "qm/tolerance.hpp"

namespace qm {

StateFunctional StateFunctional::from_weights(AlgebraPtr alg, DenseVector weights) {
  if (!alg->is_commutative()) throw InvalidArgument("weight vectors need a commutative algebra");
  if (weights.size() != alg->dimension()) throw InvalidArgument("state has the wrong length");
  if (!weights.allFinite() || (weights.array() < 0.0).any()) {
    throw InvalidArgument("state weights must be nonnegative");
  }
  if (std::abs(weights.sum() - 1.0) > tol::kExact) {
    throw InvalidArgument("state weights must sum to 1");
  }
  return StateFunctional(std::move(alg), std::move(weights));
}

StateFunctional StateFunctional::from_density(AlgebraPtr alg, ComplexMatrix rho) {
  if (alg->is_commutative()) throw InvalidArgument("density matrices need a matrix algebra");
  if (rho.rows() != alg->dimension() || rho.cols() != alg->dimension()) {
    throw InvalidArgument("density matrix has the wrong size");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol::kExact) {
    throw InvalidArgument("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > tol::kExact) {
    throw InvalidArgument("density matrix must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -tol::kExact) {
    throw InvalidArgument("density matrix is not positive");
  }
  return StateFunctional(std::move(alg), std::move(rho));
}

const DenseVector& StateFunctional::weights() const {
  if (const auto* w = std::get_if<DenseVector>(&data_)) return *w;
  throw InvalidArgument("state is a density matrix");
}

const ComplexMatrix& StateFunctional::density() const {
  if (const auto* r = std::get_if<ComplexMatrix>(&data_)) return *r;
  throw InvalidArgument("state is a weight vector");
}

double StateFunctional::operator()(const Element& a) const {
  if (a.algebra_ptr() != alg_) throw InvalidArgument("state and element use different algebras");
  if (alg_->is_commutative()) return weights().dot(a.values());
  return (density() * a.matrix()).trace().real();
}

StateFunctional pure_state(const AlgebraPtr& alg, int point) {
  if (point < 0 || point >= alg->dimension()) {
    throw InvalidArgument("unknown point index " + std::to_string(point));
  }
  if (alg->is_commutative()) {
    DenseVector w = DenseVector::Zero(alg->dimension());
    w(point) = 1.0;
    return StateFunctional::from_weights(alg, std::move(w));
  }
  ComplexMatrix rho = ComplexMatrix::Zero(alg->dimension(), alg->dimension());
  rho(point, point) = 1.0;
  return StateFunctional::from_density(alg, std::move(rho));
}

StateFunctional pure_state(const AlgebraPtr& alg, const std::string& label) {
  auto idx = alg->find_label(label);
  if (!idx) throw InvalidArgument("unknown point '" + label + "'");
  return pure_state(alg, *idx);
}

StateFunctional random_state(const AlgebraPtr& alg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::Index d = alg->dimension();
  if (alg->is_commutative()) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    DenseVector w(d);
    for (Eigen::Index i = 0; i < d; ++i) w(i) = u(rng);
    w /= w.sum();
    return StateFunctional::from_weights(alg, std::move(w));
  }
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) m(i, j) = {g(rng), g(rng)};
  }
  ComplexMatrix rho = m * m.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return StateFunctional::from_density(alg, std::move(rho));
}

std::pair<StateFunctional, StateFunctional> push_agreement(const FilteredAlgebra& alg,
                                                           const StateFunctional& mu,
                                                           const StateFunctional& nu, int level) {
  if (!alg.is_commutative()) throw MatrixKindUnsupported("push_agreement needs point masses");
  const auto& wm = mu.weights();
  const auto& wn = nu.weights();
  const auto& tau = alg.weights();
  DenseVector out = wn;
  for (const Block& block : alg.partition(level)) {
    double mass_mu = 0.0, mass_nu = 0.0, mass_tau = 0.0;
    for (int i : block) {
      mass_mu += wm(i);
      mass_nu += wn(i);
      mass_tau += tau[static_cast<std::size_t>(i)];
    }
    for (int i : block) {
      out(i) = mass_nu > 0.0 ? wn(i) * (mass_mu / mass_nu)
                             : tau[static_cast<std::size_t>(i)] * (mass_mu / mass_tau);
    }
  }
  // Renormalize away rounding so the unit-sum invariant holds to the last bit.
  out /= out.sum();
  return {mu, StateFunctional::from_weights(nu.algebra_ptr(), std::move(out))};
}

double agreement_gap(const FilteredAlgebra& alg, const StateFunctional& mu,
                     const StateFunctional& nu, int level) {
  alg.check_level(level);
  if (!alg.is_commutative()) {
    ComplexMatrix diff = conditional_expectation(alg, level, mu.density()) -
                         conditional_expectation(alg, level, nu.density());
    const double trail = static_cast<double>(alg.dimension() >> (level - 1));
    return diff.cwiseAbs().maxCoeff() * trail;
  }
  double gap = 0.0;
  for (const Block& block : alg.partition(level)) {
    double d = 0.0;
    for (int i : block) d += mu.weights()(i) - nu.weights()(i);
    gap = std::max(gap, std::abs(d));
  }
  return gap;
}

DistanceReport mk_distance(const FilteredAlgebra& alg, const BetaSequence& beta,
                           const StateFunctional& mu, const StateFunctional& nu,
                           int reference_point) {
  if (!alg.is_commutative()) {
    throw MatrixKindUnsupported("mk distances are only computed on commutative algebras");
  }
  if (&mu.algebra() != &alg || &nu.algebra() != &alg) {
    throw InvalidArgument("states belong to a different algebra");
  }
  const int d = alg.dimension();
  if (reference_point < 0 || reference_point >= d) {
    throw InvalidArgument("reference point out of range");
  }
  const auto& w = alg.weights();

  // Column of each point after removing the gauge-fixed reference point.
  std::vector<int> column(static_cast<std::size_t>(d), -1);
  for (int i = 0, c = 0; i < d; ++i) {
    if (i != reference_point) column[static_cast<std::size_t>(i)] = c++;
  }
  const int vars = d - 1;

  std::vector<Eigen::RowVectorXd> rows;
  std::vector<double> bounds;
  for (int n = 1; n < alg.levels(); ++n) {
    const double b = beta(n);
    for (const Block& block : alg.partition(n)) {
      if (block.size() < 2) continue;
      double mass = 0.0;
      for (int j : block) mass += w[static_cast<std::size_t>(j)];
      for (int i : block) {
        Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(vars);
        for (int j : block) {
          const int c = column[static_cast<std::size_t>(j)];
          if (c < 0) continue;
          row(c) += (i == j ? 1.0 : 0.0) - w[static_cast<std::size_t>(j)] / mass;
        }
        rows.push_back(row);
        bounds.push_back(b);
        rows.push_back(-row);
        bounds.push_back(b);
      }
    }
  }

  DenseVector witness_values = DenseVector::Zero(d);
  double value = 0.0;
  int pivots = 0;
  if (vars > 0) {
    LpProblem lp;
    lp.objective = DenseVector(vars);
    const DenseVector diff = mu.weights() - nu.weights();
    for (int i = 0; i < d; ++i) {
      const int c = column[static_cast<std::size_t>(i)];
      if (c >= 0) lp.objective(c) = diff(i);
    }
    lp.constraints = DenseMatrix(static_cast<Eigen::Index>(rows.size()), vars);
    lp.bounds = DenseVector(static_cast<Eigen::Index>(bounds.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      lp.constraints.row(static_cast<Eigen::Index>(r)) = rows[r];
      lp.bounds(static_cast<Eigen::Index>(r)) = bounds[r];
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::optimal) {
      throw NumericalFailure(std::string("mk linear program is ") + to_string(sol.status));
    }
    for (int i = 0; i < d; ++i) {
      const int c = column[static_cast<std::size_t>(i)];
      if (c >= 0) witness_values(i) = sol.argmax(c);
    }
    value = sol.value;
    pivots = sol.pivots;
  }

  DistanceReport report{std::max(value, 0.0),
                        Element::from_values(mu.algebra_ptr(), std::move(witness_values)),
                        std::nullopt,
                        std::nullopt,
                        std::nullopt,
                        pivots};
  return report;
}

SandwichBounds sandwich_bounds(const FilteredAlgebra& alg, const BetaSequence& beta,
                               const StateFunctional& mu, const StateFunctional& nu,
                               const Element& witness, int level) {
  alg.check_level(level);
  const double gap = agreement_gap(alg, mu, nu, level);
  if (gap > tol::kAgreement) {
    throw AgreementViolated("states differ by " + std::to_string(gap) + " on level " +
                            std::to_string(level));
  }
  const double b = beta(level);
  const double lip = lip_seminorm(alg, beta, witness).value;
  if (std::abs(lip - 1.0 / b) > tol::kFeasibility * std::max(1.0, 1.0 / b)) {
    throw WitnessMismatch("L_beta(witness) = " + std::to_string(lip) + ", expected " +
                          std::to_string(1.0 / b));
  }
  return {b * std::abs(mu(witness) - nu(witness)), 2.0 * b};
}

void attach_bounds(DistanceReport& report, const SandwichBounds& bounds, int level) {
  if (bounds.lower > report.value + tol::kFeasibility ||
      report.value > bounds.upper + 1e-8) {
    throw NumericalFailure("distance " + std::to_string(report.value) + " outside [" +
                           std::to_string(bounds.lower) + ", " + std::to_string(bounds.upper) +
                           "]");
  }
  report.lower = bounds.lower;
  report.upper = bounds.upper;
  report.agreement_level = level;
}

}  // namespace qm
