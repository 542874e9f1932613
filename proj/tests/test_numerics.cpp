#include <doctest.h>

#include <cmath>
#include <functional>
#include <optional>
#include <random>

#include "qm/errors.hpp"
#include "qm/instances.hpp"
#include "qm/numerics.hpp"

using namespace qm;

namespace {

LpProblem make_lp(std::vector<double> c, std::vector<std::vector<double>> a, std::vector<double> b) {
  LpProblem p;
  p.objective = Eigen::Map<DenseVector>(c.data(), static_cast<Eigen::Index>(c.size()));
  p.constraints = DenseMatrix(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      p.constraints(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i][j];
    }
  }
  p.bounds = Eigen::Map<DenseVector>(b.data(), static_cast<Eigen::Index>(b.size()));
  return p;
}

// Vertex enumeration: every basic solution from `n` tight rows, keep the feasible best.
// Only meaningful when the feasible set is a bounded polytope.
std::optional<double> brute_force_lp(const LpProblem& p) {
  const int m = static_cast<int>(p.constraints.rows());
  const int n = static_cast<int>(p.constraints.cols());
  std::optional<double> best;
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      DenseMatrix a(n, n);
      DenseVector b(n);
      for (int r = 0; r < n; ++r) {
        a.row(r) = p.constraints.row(pick[static_cast<std::size_t>(r)]);
        b(r) = p.bounds(pick[static_cast<std::size_t>(r)]);
      }
      Eigen::FullPivLU<DenseMatrix> lu(a);
      if (lu.rank() < n) return;
      DenseVector x = lu.solve(b);
      if (((p.constraints * x - p.bounds).array() > 1e-9).any()) return;
      double v = p.objective.dot(x);
      if (!best || v > *best) best = v;
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_CASE("solve_lp: single active constraint") {
  auto p = make_lp({1.0}, {{1.0}, {-1.0}}, {3.0, 0.0});
  auto s = solve_lp(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s.argmax(0) == doctest::Approx(3.0));
}

TEST_CASE("solve_lp: box corner") {
  auto p = make_lp({1.0, 1.0}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {1, 1, 0, 0});
  auto s = solve_lp(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("solve_lp: unbounded and infeasible are reported by status") {
  auto unbounded = make_lp({1.0}, {{-1.0}}, {0.0});
  CHECK(solve_lp(unbounded).status == LpStatus::unbounded);

  auto infeasible = make_lp({1.0}, {{1.0}, {-1.0}}, {-1.0, -1.0});  // x ≤ −1 and x ≥ 1
  CHECK(solve_lp(infeasible).status == LpStatus::infeasible);

  auto no_rows = make_lp({0.0, 0.0}, {}, {});
  auto s = solve_lp(no_rows);
  CHECK(s.status == LpStatus::optimal);
  CHECK(s.value == 0.0);
}

TEST_CASE("solve_lp: phase one with negative bounds") {
  // 1 ≤ x ≤ 2, 2 ≤ y ≤ 5, x + y ≤ 6 ; maximize 2x + y → x=2, y=4.
  auto p = make_lp({2, 1}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}}, {2, -1, 5, -2, 6});
  auto s = solve_lp(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("solve_lp: rejects malformed problems") {
  LpProblem p;
  CHECK_THROWS_AS(solve_lp(p), InvalidArgument);
  auto q = make_lp({1.0, 2.0}, {{1.0, 1.0}}, {1.0});
  q.bounds = DenseVector::Zero(2);
  CHECK_THROWS_AS(solve_lp(q), InvalidArgument);
  auto r = make_lp({1.0}, {{1.0}}, {1.0});
  r.bounds(0) = std::nan("");
  CHECK_THROWS_AS(solve_lp(r), InvalidArgument);
}

TEST_CASE("solve_lp agrees with vertex enumeration on random bounded polytopes") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    const int extra = 3 + trial % 4;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    // A box keeps the polytope bounded; random cuts on top, some with negative bounds.
    for (int j = 0; j < n; ++j) {
      std::vector<double> row(static_cast<std::size_t>(n), 0.0);
      row[static_cast<std::size_t>(j)] = 1.0;
      a.push_back(row);
      b.push_back(u(rng));
      row[static_cast<std::size_t>(j)] = -1.0;
      a.push_back(row);
      b.push_back(u(rng));
    }
    for (int r = 0; r < extra; ++r) {
      std::vector<double> row;
      for (int j = 0; j < n; ++j) row.push_back(g(rng));
      a.push_back(row);
      b.push_back(g(rng) * 0.5);
    }
    std::vector<double> c;
    for (int j = 0; j < n; ++j) c.push_back(g(rng));
    auto p = make_lp(c, a, b);
    auto oracle = brute_force_lp(p);
    auto s = solve_lp(p);
    if (!oracle) {
      CHECK(s.status == LpStatus::infeasible);
      continue;
    }
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(std::abs(s.value - *oracle) < 1e-9);
    CHECK(max_violation(p, s.argmax) <= 1e-9);
  }
}

TEST_CASE("solve_lp: symmetric feasible set gives value(c) = value(-c)") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (int r = 0; r < 5; ++r) {
      std::vector<double> row;
      for (int j = 0; j < n; ++j) row.push_back(g(rng));
      double bound = std::abs(g(rng)) + 0.2;
      a.push_back(row);
      b.push_back(bound);
      for (double& x : row) x = -x;
      a.push_back(row);
      b.push_back(bound);
    }
    for (int j = 0; j < n; ++j) {
      std::vector<double> row(static_cast<std::size_t>(n), 0.0);
      row[static_cast<std::size_t>(j)] = 1.0;
      a.push_back(row);
      b.push_back(3.0);
      row[static_cast<std::size_t>(j)] = -1.0;
      a.push_back(row);
      b.push_back(3.0);
    }
    std::vector<double> c{g(rng), g(rng), g(rng)};
    std::vector<double> neg{-c[0], -c[1], -c[2]};
    auto s1 = solve_lp(make_lp(c, a, b));
    auto s2 = solve_lp(make_lp(neg, a, b));
    REQUIRE(s1.status == LpStatus::optimal);
    REQUIRE(s2.status == LpStatus::optimal);
    CHECK(std::abs(s1.value - s2.value) < 1e-9);
  }
}

TEST_CASE("solve_lp: deterministic for fixed input") {
  auto p = make_lp({1, 2, -1}, {{1, 1, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {0, 1, 0}},
                   {4, 0, 0, 0, 2});
  auto s1 = solve_lp(p);
  auto s2 = solve_lp(p);
  CHECK(s1.value == s2.value);
  CHECK(s1.argmax == s2.argmax);
  CHECK(s1.pivots == s2.pivots);
}

TEST_CASE("spectral_norm examples") {
  CHECK(std::abs(spectral_norm(DenseMatrix(DenseMatrix::Identity(4, 4))) - 1.0) < 1e-10);
  DenseMatrix d = DenseMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -5.0;
  CHECK(std::abs(spectral_norm(d) - 5.0) < 5e-10);

  // σ_x ⊗ σ_x: eigenvalues ±1 by direct 4×4 eigen-decomposition.
  DenseMatrix sxsx = DenseMatrix::Zero(4, 4);
  for (int r = 0; r < 4; ++r) sxsx(r, r ^ 3) = 1.0;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(sxsx);
  const double oracle = eig.eigenvalues().cwiseAbs().maxCoeff();
  CHECK(oracle == doctest::Approx(1.0));
  CHECK(std::abs(spectral_norm(sxsx) - oracle) < 1e-10);

  CHECK_THROWS_AS(spectral_norm(DenseMatrix(DenseMatrix::Zero(2, 3))), InvalidArgument);
  CHECK(spectral_norm(DenseMatrix(DenseMatrix::Zero(3, 3))) == 0.0);
}

TEST_CASE("spectral_norm matches the SVD, transpose and scaling invariants") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 7;
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = g(rng);
    Eigen::JacobiSVD<DenseMatrix> svd(m);
    const double sigma = svd.singularValues()(0);
    const double s = spectral_norm(m);
    CHECK(std::abs(s - sigma) <= 1e-10 * sigma);
    CHECK(std::abs(spectral_norm(DenseMatrix(m.transpose())) - s) < 1e-9);
    const double alpha = -2.5;
    CHECK(std::abs(spectral_norm(DenseMatrix(alpha * m)) - std::abs(alpha) * s) < 1e-9);

    ComplexMatrix c(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c(i, j) = {g(rng), g(rng)};
    Eigen::JacobiSVD<ComplexMatrix> csvd(c);
    const double csigma = csvd.singularValues()(0);
    CHECK(std::abs(spectral_norm(c) - csigma) <= 1e-10 * csigma);
  }
}

TEST_CASE("spectral_norm with nearly coincident top singular values") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 1.0);
  for (double gap : {1e-3, 1e-6, 1e-9}) {
    DenseMatrix q = DenseMatrix::NullaryExpr(16, 16, [&] { return g(rng); });
    Eigen::HouseholderQR<DenseMatrix> qr(q);
    const DenseMatrix u = qr.householderQ();
    DenseVector d = DenseVector::LinSpaced(16, 0.1, 0.9);
    d(0) = 1.0;
    d(1) = 1.0 - gap;
    const DenseMatrix m = u * d.asDiagonal() * u.transpose();
    CHECK(std::abs(spectral_norm(m) - 1.0) <= 1e-10);
  }
  // Rounding-level noise has no usable spectral gap at all.
  ComplexMatrix noise(32, 32);
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j) noise(i, j) = {1e-16 * g(rng), 1e-16 * g(rng)};
  Eigen::JacobiSVD<ComplexMatrix> svd(noise);
  CHECK(std::abs(spectral_norm(noise) - svd.singularValues()(0)) <= 1e-10 * svd.singularValues()(0));
}

TEST_CASE("rational layer is exact on dyadic sums") {
  Rational sum(0);
  for (int k = 1; k <= 40; ++k) sum += Rational(1, std::int64_t{1} << k);
  CHECK(sum == Rational(1) - Rational(1, std::int64_t{1} << 40));
}
