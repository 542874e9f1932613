#pragma once

// Dense linear algebra aliases, the simplex LP solver, the spectral norm and
// the dyadic-rational scalar used for exact identity checks.

#include <complex>
#include <cstdint>

#include <Eigen/Dense>
#include <boost/rational.hpp>

namespace qm {

using DenseVector = Eigen::VectorXd;
using DenseMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

// Exact arithmetic for small dyadic identities; int64 keeps denominators up to 2^62.
using Rational = boost::rational<std::int64_t>;

enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus status) noexcept;

/// maximize objective·x subject to constraints·x ≤ bounds, x free.
struct LpProblem {
  DenseVector objective;
  DenseMatrix constraints;
  DenseVector bounds;
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  DenseVector argmax;
  int pivots = 0;
};

/// Two-phase dense-tableau simplex with Bland's rule.
///
/// Free variables are split into positive and negative parts; rows with a
/// negative bound get an artificial variable for phase one. The result is a
/// deterministic function of the input. Infeasible and unbounded problems are
/// reported through LpSolution::status. Throws InvalidArgument on shape
/// mismatch or non-finite entries, and NumericalFailure if the pivot budget
/// is exhausted.
LpSolution solve_lp(const LpProblem& problem);

/// Largest violation max_i (constraints·x − bounds)_i, clamped below at zero.
double max_violation(const LpProblem& problem, const DenseVector& x);

/// Power-iteration cap shared by the spectral norm routines.
inline constexpr int kPowerIterationCap = 10000;

/// Largest singular value, by power iteration on the Gram matrix mᴴm from a
/// fixed start vector. Square input only.
double spectral_norm(const DenseMatrix& m);
double spectral_norm(const ComplexMatrix& m);

}  // namespace qm
