#include "qm/instances.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "qm/errors.hpp"

namespace qm {

// ---------------------------------------------------------------------------
// Quantized interval

namespace {

AlgebraPtr build_interval(int level) {
  if (level < 2 || level > 60) throw InvalidArgument("interval level must lie in 2..60");
  std::vector<std::string> labels;
  std::vector<double> weights;
  for (int i = 0; i + 1 < level; ++i) {
    labels.push_back(i == 0 ? "1" : "1/" + std::to_string(std::uint64_t{1} << i));
    weights.push_back(std::ldexp(1.0, -(i + 1)));
  }
  labels.emplace_back("tail");
  weights.push_back(std::ldexp(1.0, -(level - 1)));

  std::vector<Partition> partitions;
  for (int n = 1; n <= level; ++n) {
    Partition p;
    for (int i = 0; i < n - 1; ++i) p.push_back({i});
    Block tail;
    for (int i = n - 1; i < level; ++i) tail.push_back(i);
    p.push_back(std::move(tail));
    partitions.push_back(std::move(p));
  }
  return FilteredAlgebra::commutative(std::move(labels), std::move(weights), std::move(partitions));
}

void check_basis_index(const IntervalModel& model, int n) {
  if (n < 0 || n > model.level - 1) {
    throw InvalidArgument("basis index " + std::to_string(n) + " outside 0.." +
                          std::to_string(model.level - 1));
  }
}

// φ_n at point i, as an integer in {−1, 0, 1}.
int phi_value(int n, int i) {
  if (n == 0) return 1;
  if (i < n - 1) return 0;
  return i == n - 1 ? -1 : 1;
}

}  // namespace

IntervalModel::IntervalModel(int level_) : level(level_), algebra(build_interval(level_)) {}

int IntervalModel::index_of(double x) const {
  if (x == 0.0) return tail_index();
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant·2^exp, mant ∈ [0.5, 1)
  if (mant != 0.5 || exp > 1) throw InvalidArgument("point is not of the form 1/2^(k-1)");
  const int i = 1 - exp;  // x = 2^{-i}
  if (i > level - 2) {
    throw InvalidArgument("point lies inside the tail of this truncation; use 0");
  }
  return i;
}

double IntervalModel::coordinate(int point) const {
  if (point < 0 || point >= level) throw InvalidArgument("point index out of range");
  return point == tail_index() ? 0.0 : std::ldexp(1.0, -point);
}

Element chi(const IntervalModel& model, int n) {
  check_basis_index(model, n);
  DenseVector v = DenseVector::Zero(model.level);
  if (n > 0) v(n - 1) = 1.0;
  return Element::from_values(model.algebra, std::move(v));
}

Element chi_tail(const IntervalModel& model, int n) {
  check_basis_index(model, n);
  DenseVector v = DenseVector::Zero(model.level);
  for (int i = std::max(n - 1, 0); i < model.level; ++i) v(i) = 1.0;
  return Element::from_values(model.algebra, std::move(v));
}

Element phi(const IntervalModel& model, int n) {
  check_basis_index(model, n);
  DenseVector v(model.level);
  for (int i = 0; i < model.level; ++i) v(i) = phi_value(n, i);
  return Element::from_values(model.algebra, std::move(v));
}

bool chi_expansion_check(const IntervalModel& model, int n) {
  check_basis_index(model, n);
  const Rational half_pow_n1(1, std::int64_t{1} << (n + 1));
  for (int i = 0; i < model.level; ++i) {
    Rational rhs = half_pow_n1 * (Rational(phi_value(0, i)) -
                                  Rational(std::int64_t{1} << (n + 1)) * Rational(phi_value(n, i)));
    for (int k = 0; k <= n; ++k) {
      rhs += Rational(1, std::int64_t{1} << (k + 1)) * Rational(phi_value(n - k, i));
    }
    const Rational lhs(n > 0 && i == n - 1 ? 1 : 0);
    if (lhs != rhs) return false;
  }
  return true;
}

bool product_table_check(const IntervalModel& model, int n, int m) {
  check_basis_index(model, n);
  check_basis_index(model, m);
  const Element prod = phi(model, n).product(phi(model, m));
  const Element expected = n == m ? chi_tail(model, n) : phi(model, std::max(n, m));
  return prod.values() == expected.values();
}

double orthogonality_check(const IntervalModel& model, int n, int m) {
  return phi(model, n).product(phi(model, m)).trace();
}

double tau_with_weights(const std::vector<double>& v, const Element& a) {
  const auto& vals = a.values();
  if (static_cast<Eigen::Index>(v.size()) != vals.size()) {
    throw InvalidArgument("weight vector has the wrong length");
  }
  long double sum = 0.0L;
  for (std::size_t i = v.size(); i-- > 0;) {
    sum += static_cast<long double>(v[i]) * vals(static_cast<Eigen::Index>(i));
  }
  return static_cast<double>(sum);
}

Element interval_element(const IntervalModel& model, const std::vector<double>& samples,
                         double limit, bool affine) {
  const int cutoff = static_cast<int>(samples.size());
  double slope = 0.0;
  if (affine && cutoff > 0) {
    slope = (samples.back() - limit) / std::ldexp(1.0, 1 - cutoff);
  }
  auto value_at = [&](int k) {
    if (k <= cutoff) return samples[static_cast<std::size_t>(k - 1)];
    return affine ? limit + slope * std::ldexp(1.0, 1 - k) : limit;
  };

  const int n = model.level;
  DenseVector v(n);
  for (int k = 1; k < n; ++k) v(k - 1) = value_at(k);

  DyadicTail tail;
  tail.first = n;
  for (int k = n; k <= cutoff; ++k) tail.samples.push_back(value_at(k));
  tail.limit = limit;
  tail.affine = affine;
  tail.slope = slope;
  if (tail.sup_deviation(limit) == 0.0) {
    v(n - 1) = limit;
    return Element::from_values(model.algebra, std::move(v));
  }
  v(n - 1) = 0.0;
  return Element::from_values(model.algebra, std::move(v), std::move(tail));
}

Element p1(const IntervalModel& model, int cutoff) {
  if (cutoff < 1) throw InvalidArgument("p1 needs at least one sample");
  std::vector<double> samples;
  for (int k = 1; k <= cutoff; ++k) samples.push_back(std::ldexp(1.0, 1 - k));
  return interval_element(model, samples, 0.0, true);
}

double closed_form_mk_points(const IntervalModel& model, const BetaSequence& beta, int i, int j) {
  if (i < 0 || j < 0 || i >= model.level || j >= model.level) {
    throw InvalidArgument("point index out of range");
  }
  if (i == j) return 0.0;
  // The larger coordinate has the smaller index; it is 1/2^{n-1} with n = index + 1.
  return 2.0 * beta(std::min(i, j) + 1);
}

double closed_form_mk(const IntervalModel& model, const BetaSequence& beta, double x, double y) {
  if (x == y) throw InvalidArgument("closed form needs distinct points");
  return closed_form_mk_points(model, beta, model.index_of(x), model.index_of(y));
}

// ---------------------------------------------------------------------------
// Cantor space

namespace {

AlgebraPtr build_cantor(int depth) {
  if (depth < 1 || depth > 16) throw InvalidArgument("cantor depth must lie in 1..16");
  const int size = 1 << depth;
  std::vector<std::string> labels;
  std::vector<double> weights(static_cast<std::size_t>(size), std::ldexp(1.0, -depth));
  for (int p = 0; p < size; ++p) {
    std::string w;
    for (int b = depth - 1; b >= 0; --b) w.push_back((p >> b) & 1 ? '1' : '0');
    labels.push_back(std::move(w));
  }
  std::vector<Partition> partitions;
  for (int n = 1; n <= depth + 1; ++n) {
    const int shift = depth - (n - 1);
    Partition part(static_cast<std::size_t>(1 << (n - 1)));
    for (int p = 0; p < size; ++p) part[static_cast<std::size_t>(p >> shift)].push_back(p);
    partitions.push_back(std::move(part));
  }
  return FilteredAlgebra::commutative(std::move(labels), std::move(weights), std::move(partitions));
}

}  // namespace

CantorModel::CantorModel(int depth_) : depth(depth_), algebra(build_cantor(depth_)) {}

std::string CantorModel::word(int point) const {
  return algebra->labels().at(static_cast<std::size_t>(point));
}

int CantorModel::prefix_length(int i, int j) const {
  int len = 0;
  for (int b = depth - 1; b >= 0 && ((i >> b) & 1) == ((j >> b) & 1); --b) ++len;
  return len;
}

Element rademacher(const CantorModel& model, int k) {
  if (k < 1 || k > model.depth) throw InvalidArgument("rademacher index outside 1..depth");
  const int size = 1 << model.depth;
  DenseVector v(size);
  for (int p = 0; p < size; ++p) v(p) = 1.0 - 2.0 * ((p >> (model.depth - k)) & 1);
  return Element::from_values(model.algebra, std::move(v));
}

double cantor_closed_form(const CantorModel& model, const BetaSequence& beta, int i, int j) {
  if (i == j) return 0.0;
  return 2.0 * beta(model.prefix_length(i, j) + 1);
}

// ---------------------------------------------------------------------------
// UHF

UhfModel::UhfModel(int sites_) : sites(sites_), algebra(FilteredAlgebra::matrix(sites_)) {}

Element pauli_site(const UhfModel& model, int k) {
  if (k < 1 || k > model.sites) throw InvalidArgument("pauli site outside 1..sites");
  const Eigen::Index dim = model.algebra->dimension();
  const Eigen::Index stride = Eigen::Index{1} << (model.sites - k);
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) m(i, i ^ stride) = 1.0;
  return Element::from_matrix(model.algebra, std::move(m));
}

}  // namespace qm
