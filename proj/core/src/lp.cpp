#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qm/errors.hpp"
#include "qm/numerics.hpp"
#include "qm/tolerance.hpp"

namespace qm {

const char* to_string(LpStatus status) noexcept {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

using Tableau = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-11;

enum class Outcome { optimal, unbounded };

class Simplex {
 public:
  Simplex(const LpProblem& p) : m_(p.constraints.rows()), n_(p.constraints.cols()) {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (p.bounds(i) < 0.0) ++artificials_;
    }
    cols_ = 2 * n_ + m_ + artificials_;
    rhs_ = cols_;
    t_ = Tableau::Zero(m_, cols_ + 1);
    basis_.resize(static_cast<std::size_t>(m_));

    Eigen::Index art = 2 * n_ + m_;
    for (Eigen::Index i = 0; i < m_; ++i) {
      double sign = p.bounds(i) < 0.0 ? -1.0 : 1.0;
      t_.row(i).segment(0, n_) = sign * p.constraints.row(i);
      t_.row(i).segment(n_, n_) = -sign * p.constraints.row(i);
      t_(i, 2 * n_ + i) = sign;
      t_(i, rhs_) = sign * p.bounds(i);
      if (sign < 0.0) {
        t_(i, art) = 1.0;
        basis_[static_cast<std::size_t>(i)] = art++;
      } else {
        basis_[static_cast<std::size_t>(i)] = 2 * n_ + i;
      }
    }
    z_ = Eigen::RowVectorXd::Zero(cols_ + 1);
    double scale = p.bounds.size() ? p.bounds.cwiseAbs().maxCoeff() : 0.0;
    feas_tol_ = tol::kFeasibility * (1.0 + scale);
    max_pivots_ = 200 * static_cast<int>(m_ + cols_) + 10000;
  }

  LpSolution run(const LpProblem& p) {
    LpSolution out;
    if (artificials_ > 0) {
      // Phase one: maximize −Σ artificials.
      z_.setZero();
      for (Eigen::Index j = first_artificial(); j < cols_; ++j) z_(j) = 1.0;
      price_out_basis();
      iterate(/*allow_artificial=*/true);
      if (z_(rhs_) < -feas_tol_) {
        out.status = LpStatus::infeasible;
        out.pivots = pivots_;
        return out;
      }
      drive_out_artificials();
    }

    z_.setZero();
    z_.segment(0, n_) = -p.objective.transpose();
    z_.segment(n_, n_) = p.objective.transpose();
    price_out_basis();
    if (iterate(/*allow_artificial=*/false) == Outcome::unbounded) {
      out.status = LpStatus::unbounded;
      out.pivots = pivots_;
      return out;
    }

    DenseVector x = DenseVector::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      Eigen::Index b = basis_[static_cast<std::size_t>(i)];
      if (b < n_) {
        x(b) += t_(i, rhs_);
      } else if (b < 2 * n_) {
        x(b - n_) -= t_(i, rhs_);
      }
    }
    out.status = LpStatus::optimal;
    out.argmax = std::move(x);
    out.value = p.objective.dot(out.argmax);
    out.pivots = pivots_;
    return out;
  }

 private:
  Eigen::Index first_artificial() const { return 2 * n_ + m_; }

  void price_out_basis() {
    for (Eigen::Index i = 0; i < m_; ++i) {
      double coeff = z_(basis_[static_cast<std::size_t>(i)]);
      if (coeff != 0.0) z_ -= coeff * t_.row(i);
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    if (++pivots_ > max_pivots_) {
      throw NumericalFailure("simplex pivot budget exhausted");
    }
    t_.row(row) /= t_(row, col);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i == row) continue;
      double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    double f = z_(col);
    if (f != 0.0) z_ -= f * t_.row(row);
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Bland's rule: lowest-index improving column, lowest-index basic variable on ratio ties.
  Outcome iterate(bool allow_artificial) {
    const Eigen::Index limit = allow_artificial ? cols_ : first_artificial();
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < limit; ++j) {
        if (z_(j) < -kCostEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Outcome::optimal;

      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m_; ++i) {
        double a = t_(i, enter);
        if (a <= kPivotEps) continue;
        double ratio = std::max(t_(i, rhs_), 0.0) / a;
        if (leave < 0 || ratio < best - 1e-12 * (1.0 + best)) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + 1e-12 * (1.0 + best) &&
                   basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)]) {
          leave = i;
        }
      }
      if (leave < 0) return Outcome::unbounded;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < first_artificial()) continue;
      for (Eigen::Index j = 0; j < first_artificial(); ++j) {
        if (std::abs(t_(i, j)) > kPivotEps) {
          pivot(i, j);
          break;
        }
      }
      // A row with no eligible column is redundant; its artificial stays basic at zero.
    }
  }

  Eigen::Index m_, n_;
  Eigen::Index artificials_ = 0;
  Eigen::Index cols_ = 0, rhs_ = 0;
  Tableau t_;
  Eigen::RowVectorXd z_;
  std::vector<Eigen::Index> basis_;
  double feas_tol_ = tol::kFeasibility;
  int pivots_ = 0;
  int max_pivots_ = 0;
};

}  // namespace

double max_violation(const LpProblem& problem, const DenseVector& x) {
  if (problem.constraints.rows() == 0) return 0.0;
  DenseVector slack = problem.constraints * x - problem.bounds;
  return std::max(0.0, slack.maxCoeff());
}

LpSolution solve_lp(const LpProblem& problem) {
  const auto n = problem.constraints.cols();
  if (problem.objective.size() == 0) throw InvalidArgument("LP needs at least one variable");
  if (problem.objective.size() != n) {
    throw InvalidArgument("LP objective length does not match constraint columns");
  }
  if (problem.bounds.size() != problem.constraints.rows()) {
    throw InvalidArgument("LP bounds length does not match constraint rows");
  }
  if (!problem.objective.allFinite() || !problem.constraints.allFinite() ||
      !problem.bounds.allFinite()) {
    throw InvalidArgument("LP entries must be finite");
  }

  Simplex simplex(problem);
  LpSolution sol = simplex.run(problem);
  if (sol.status == LpStatus::optimal && max_violation(problem, sol.argmax) > tol::kFeasibility) {
    throw NumericalFailure("simplex returned a point violating a constraint by more than 1e-9");
  }
  return sol;
}

}  // namespace qm
