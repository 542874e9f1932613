#include <doctest.h>

#include <cmath>
#include <random>

#include "qm/errors.hpp"
#include "qm/instances.hpp"
#include "qm/qcms.hpp"

using namespace qm;

TEST_CASE("interval model structure") {
  IntervalModel iv(6);
  const auto& w = iv.algebra->weights();
  Rational total(0);
  for (double x : w) {
    int e = 0;
    CHECK(std::frexp(x, &e) == 0.5);  // dyadic
    total += Rational(1, std::int64_t{1} << (1 - e));
  }
  CHECK(total == Rational(1));
  CHECK(iv.algebra->labels().front() == "1");
  CHECK(iv.algebra->labels()[4] == "1/16");
  CHECK(iv.algebra->labels().back() == "tail");
  CHECK(iv.index_of(1.0) == 0);
  CHECK(iv.index_of(1.0 / 16) == 4);
  CHECK(iv.index_of(0.0) == 5);
  CHECK_THROWS_AS(iv.index_of(1.0 / 32), InvalidArgument);
  CHECK_THROWS_AS(iv.index_of(0.3), InvalidArgument);
  CHECK(iv.algebra->partition(1).size() == 1);
  CHECK(iv.algebra->partition(3).size() == 3);
}

TEST_CASE("chi, chi_tail, phi") {
  IntervalModel iv(12);
  CHECK(sup_norm(chi(iv, 0)) == 0.0);
  CHECK(chi(iv, 1).values()(0) == 1.0);
  CHECK(chi(iv, 1).values().sum() == 1.0);
  CHECK(chi_tail(iv, 1).values() == Element::unit(iv.algebra).values());
  for (int n = 1; n < iv.level; ++n) {
    CHECK(chi(iv, n).trace() == std::ldexp(1.0, -n));
    CHECK(chi_tail(iv, n).trace() == std::ldexp(1.0, 1 - n));
    CHECK(phi(iv, n).product(phi(iv, n)).values() == chi_tail(iv, n).values());
    CHECK((chi_tail(iv, n) - chi(iv, n) * 2.0).values() == phi(iv, n).values());
    CHECK(phi(iv, n).trace() == 0.0);
  }
  CHECK(phi(iv, 1).values()(0) == -1.0);
  for (int i = 1; i < iv.level; ++i) CHECK(phi(iv, 1).values()(i) == 1.0);
  CHECK(phi(iv, 0).values() == Element::unit(iv.algebra).values());
  CHECK_THROWS_AS(phi(iv, iv.level), InvalidArgument);
  CHECK_THROWS_AS(chi(iv, -1), InvalidArgument);
}

TEST_CASE("chi expansion identity") {
  IntervalModel iv(20);
  for (int n = 0; n <= 15; ++n) CHECK(chi_expansion_check(iv, n));

  // n = 1 by hand: (1/2)φ_0 − (1/2)φ_1 = χ_1.
  Element rhs = phi(iv, 0) * 0.5 - phi(iv, 1) * 0.5;
  CHECK(rhs.values() == chi(iv, 1).values());
}

TEST_CASE("product table") {
  IntervalModel iv(17);
  for (int n = 0; n <= 15; ++n)
    for (int m = 0; m <= 15; ++m) CHECK(product_table_check(iv, n, m));
  CHECK(phi(iv, 1).product(phi(iv, 2)).values() == phi(iv, 2).values());
  CHECK(phi(iv, 3).product(phi(iv, 3)).values() == chi_tail(iv, 3).values());
}

TEST_CASE("orthogonality and Gram matrix") {
  IntervalModel iv(20);
  for (int n = 0; n < iv.level - 1; ++n) {
    for (int m = 0; m < iv.level - 1; ++m) {
      const double g = orthogonality_check(iv, n, m);
      if (n != m) {
        CHECK(std::abs(g) < 1e-12);
      } else {
        CHECK(g == (n == 0 ? 1.0 : std::ldexp(1.0, 1 - n)));
      }
    }
  }
}

TEST_CASE("φ_0..φ_{n-1} span level n") {
  IntervalModel iv(12);
  for (int n = 1; n <= iv.level; ++n) {
    // Columns: φ_k restricted to one representative point per level-n block.
    const Partition& part = iv.algebra->partition(n);
    DenseMatrix change(n, n);
    for (int k = 0; k < n; ++k) {
      Element f = phi(iv, k);
      for (int b = 0; b < n; ++b) change(b, k) = f.values()(part[static_cast<std::size_t>(b)].front());
      CHECK(residual(*iv.algebra, n, f) == 0.0);
    }
    Eigen::JacobiSVD<DenseMatrix> svd(change);
    const auto& s = svd.singularValues();
    CHECK(s(n - 1) / s(0) > 1e-6);
  }
}

TEST_CASE("τ_v(φ_n) = 0 for all n singles out v = 2^{-n}") {
  IntervalModel iv(10);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::uniform_int_distribution<int> pick(0, iv.level - 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(iv.algebra->weights());
    // Move mass between two points; the sum stays 1 and some v_k ≠ 2^{-k}.
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    const double eps = u(rng) * std::min(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
    if (eps == 0.0) continue;
    v[static_cast<std::size_t>(a)] += eps;
    v[static_cast<std::size_t>(b)] -= eps;
    // First perturbed weight is v_k with k = min(a, b) + 1.
    const int k = std::min(a, b) + 1;
    bool some_nonzero = false;
    for (int j = 1; j <= k; ++j) {
      if (std::abs(tau_with_weights(v, phi(iv, j))) > 1e-15) some_nonzero = true;
    }
    CHECK(some_nonzero);
  }
  for (int j = 1; j < iv.level; ++j) {
    CHECK(tau_with_weights(iv.algebra->weights(), phi(iv, j)) == 0.0);
  }
}

TEST_CASE("closed_form_mk") {
  IntervalModel iv(10);
  const auto beta = BetaSequence::geometric(0.5);
  CHECK(closed_form_mk(iv, beta, 0.0, 1.0) == 1.0);
  CHECK(closed_form_mk(iv, beta, 0.5, 0.25) == 0.5);
  for (int k = 1; k < iv.level; ++k) {
    CHECK(closed_form_mk(iv, beta, 0.0, std::ldexp(1.0, 1 - k)) == 2.0 * beta(k));
  }
  CHECK_THROWS_AS(closed_form_mk(iv, beta, 0.5, 0.5), InvalidArgument);
}

TEST_CASE("rademacher witnesses") {
  CantorModel cantor(5);
  const auto beta = BetaSequence::geometric(0.5);
  const auto harmonic = BetaSequence::harmonic();
  for (int k = 1; k <= cantor.depth; ++k) {
    Element r = rademacher(cantor, k);
    CHECK(sup_norm(r) == 1.0);
    CHECK(sup_norm(conditional_expectation(*cantor.algebra, 1, r)) == 0.0);
    for (int m = 1; m <= k; ++m) CHECK(sup_norm(conditional_expectation(*cantor.algebra, m, r)) == 0.0);
    CHECK(r.product(r).values() == Element::unit(cantor.algebra).values());
    CHECK(lip_seminorm(*cantor.algebra, beta, r).value == 1.0 / beta(k));
    CHECK(std::abs(lip_seminorm(*cantor.algebra, harmonic, r).value - k) < 1e-12);
  }
  CHECK(cantor.prefix_length(0b00000, 0b00001) == 4);
  CHECK(cantor.prefix_length(0b00000, 0b10000) == 0);
  CHECK(cantor.algebra->partition(3).size() == 4);
  CHECK_THROWS_AS(rademacher(cantor, 6), InvalidArgument);
}

TEST_CASE("pauli_site witnesses") {
  UhfModel uhf(5);
  const auto beta = BetaSequence::geometric(0.5);
  for (int k = 1; k <= uhf.sites; ++k) {
    Element p = pauli_site(uhf, k);
    CHECK(std::abs(p.trace()) < 1e-15);
    CHECK(std::abs(sup_norm(p) - 1.0) < 1e-10);
    for (int m = 1; m <= k; ++m) {
      CHECK(conditional_expectation(*uhf.algebra, m, p).matrix().cwiseAbs().maxCoeff() == 0.0);
    }
    CHECK((conditional_expectation(*uhf.algebra, k + 1, p).matrix() - p.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(lip_seminorm(*uhf.algebra, beta, p).value - 1.0 / beta(k)) < 1e-8);
  }
}
