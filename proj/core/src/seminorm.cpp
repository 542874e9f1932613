#include <algorithm>
#include <string>

#include "qm/errors.hpp"
#include "qm/qcms.hpp"

namespace qm {

SeminormReport lip_seminorm(const FilteredAlgebra& alg, const BetaSequence& beta,
                            const Element& a, std::optional<int> max_level) {
  const int top = max_level.value_or(alg.levels());
  alg.check_level(top);
  SeminormReport report;
  report.terms.reserve(static_cast<std::size_t>(top));
  report.running.reserve(static_cast<std::size_t>(top));
  double running = 0.0;
  for (int n = 1; n <= top; ++n) {
    double r = residual(alg, n, a);
    double term = r == 0.0 ? 0.0 : r / beta(n);
    running = std::max(running, term);
    report.terms.push_back(term);
    report.running.push_back(running);
  }
  report.value = running;
  report.exact = residual(alg, alg.levels(), a) <= tol::kExact;
  return report;
}

std::vector<double> residual_decay(const FilteredAlgebra& alg, const Element& a, int levels) {
  alg.check_level(levels);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(levels));
  for (int n = 1; n <= levels; ++n) out.push_back(residual(alg, n, a));
  return out;
}

namespace {

std::vector<double> checked_residuals(const FilteredAlgebra& alg, const Element& a, int levels,
                                      double zero_threshold) {
  std::vector<double> r = residual_decay(alg, a, levels);
  for (int n = 1; n <= levels; ++n) {
    if (r[static_cast<std::size_t>(n - 1)] <= zero_threshold) {
      throw ZeroResidual(n, r[static_cast<std::size_t>(n - 1)]);
    }
  }
  return r;
}

}  // namespace

BetaSequence beta_from_element(const FilteredAlgebra& alg, const Element& a, int levels,
                               double zero_threshold) {
  return BetaSequence::from_values(checked_residuals(alg, a, levels, zero_threshold), "beta_a");
}

BetaSequence beta_squared_from_element(const FilteredAlgebra& alg, const Element& a, int levels,
                                       double zero_threshold) {
  std::vector<double> r = checked_residuals(alg, a, levels, zero_threshold);
  for (double& x : r) x *= x;
  return BetaSequence::from_values(std::move(r), "beta_a^2");
}

DomainSeparation domain_separation_report(const FilteredAlgebra& alg, const Element& a, int levels,
                                          double zero_threshold) {
  DomainSeparation out;
  const BetaSequence beta_a = beta_from_element(alg, a, levels, zero_threshold);
  const BetaSequence beta_sq = beta_squared_from_element(alg, a, levels, zero_threshold);
  for (int n = 1; n <= levels; ++n) {
    out.beta_a.push_back(beta_a(n));
    out.beta_sq.push_back(beta_sq(n));
  }
  out.with_beta_a = lip_seminorm(alg, beta_a, a, levels).running;
  out.with_beta_sq = lip_seminorm(alg, beta_sq, a, levels).running;
  out.last_value = out.with_beta_sq.back();
  if (out.with_beta_sq.size() >= 2) {
    out.growth_ratio = out.last_value / out.with_beta_sq[out.with_beta_sq.size() - 2];
  }
  return out;
}

}  // namespace qm
