#include "qm/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qm/errors.hpp"
#include "qm/tolerance.hpp"

namespace qm {

// ---------------------------------------------------------------------------
// FilteredAlgebra

AlgebraPtr FilteredAlgebra::commutative(std::vector<std::string> labels,
                                        std::vector<double> weights,
                                        std::vector<Partition> partitions) {
  const int dim = static_cast<int>(weights.size());
  if (dim == 0) throw InvalidArgument("commutative algebra needs at least one point");
  if (static_cast<int>(labels.size()) != dim) {
    throw InvalidArgument("label count does not match weight count");
  }
  if (partitions.empty()) throw InvalidArgument("filtration needs at least one level");

  long double total = 0.0L;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("tracial weights must be strictly positive (faithfulness)");
    }
    total += w;
  }
  if (std::abs(static_cast<double>(total) - 1.0) > tol::kExact) {
    throw InvalidArgument("tracial weights must sum to 1");
  }

  auto alg = std::shared_ptr<FilteredAlgebra>(new FilteredAlgebra());
  alg->kind_ = AlgebraKind::commutative;
  alg->levels_ = static_cast<int>(partitions.size());
  alg->dimension_ = dim;
  alg->labels_ = std::move(labels);
  alg->weights_ = std::move(weights);

  for (std::size_t lvl = 0; lvl < partitions.size(); ++lvl) {
    std::vector<int> index(static_cast<std::size_t>(dim), -1);
    const Partition& part = partitions[lvl];
    for (std::size_t b = 0; b < part.size(); ++b) {
      if (part[b].empty()) throw InvalidArgument("partition blocks must be nonempty");
      for (int p : part[b]) {
        if (p < 0 || p >= dim) throw InvalidArgument("partition refers to an unknown point");
        if (index[static_cast<std::size_t>(p)] != -1) {
          throw InvalidArgument("partition blocks must be disjoint");
        }
        index[static_cast<std::size_t>(p)] = static_cast<int>(b);
      }
    }
    if (std::find(index.begin(), index.end(), -1) != index.end()) {
      throw InvalidArgument("partition must cover every point");
    }
    if (lvl > 0) {
      // Refinement: points sharing a block at this level share one at the previous level.
      const auto& prev = alg->block_index_.back();
      for (const Block& block : part) {
        for (int p : block) {
          if (prev[static_cast<std::size_t>(p)] != prev[static_cast<std::size_t>(block.front())]) {
            throw InvalidArgument("partition " + std::to_string(lvl + 1) +
                                  " does not refine partition " + std::to_string(lvl));
          }
        }
      }
    }
    alg->block_index_.push_back(std::move(index));
  }
  if (partitions.front().size() != 1) {
    throw InvalidArgument("level 1 must be the scalars (a single block)");
  }
  if (static_cast<int>(partitions.back().size()) != dim) {
    throw InvalidArgument("top level must be all singletons");
  }

  for (const Partition& part : partitions) {
    Partition sorted = part;
    for (Block& block : sorted) {
      std::stable_sort(block.begin(), block.end(), [&](int a, int b) {
        return alg->weights_[static_cast<std::size_t>(a)] < alg->weights_[static_cast<std::size_t>(b)];
      });
    }
    alg->sorted_blocks_.push_back(std::move(sorted));
  }
  alg->partitions_ = std::move(partitions);
  return alg;
}

AlgebraPtr FilteredAlgebra::matrix(int sites) {
  if (sites < 1 || sites > 12) throw InvalidArgument("matrix algebra needs 1..12 sites");
  auto alg = std::shared_ptr<FilteredAlgebra>(new FilteredAlgebra());
  alg->kind_ = AlgebraKind::matrix;
  alg->sites_ = sites;
  alg->levels_ = sites + 1;
  alg->dimension_ = 1 << sites;
  return alg;
}

std::optional<int> FilteredAlgebra::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

void FilteredAlgebra::check_level(int level) const {
  if (level < 1 || level > levels_) {
    throw InvalidArgument("level " + std::to_string(level) + " outside 1.." +
                          std::to_string(levels_));
  }
}

const Partition& FilteredAlgebra::partition(int level) const {
  check_level(level);
  if (!is_commutative()) throw MatrixKindUnsupported("matrix algebras have no point partitions");
  return partitions_[static_cast<std::size_t>(level - 1)];
}

int FilteredAlgebra::block_of(int level, int point) const {
  check_level(level);
  if (!is_commutative()) throw MatrixKindUnsupported("matrix algebras have no point partitions");
  return block_index_[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(point)];
}

const Block& FilteredAlgebra::sorted_block(int level, int block) const {
  check_level(level);
  if (!is_commutative()) throw MatrixKindUnsupported("matrix algebras have no point partitions");
  return sorted_blocks_[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(block)];
}

// ---------------------------------------------------------------------------
// DyadicTail

namespace {

double dyadic_point(int k) { return std::ldexp(1.0, 1 - k); }

}  // namespace

long double DyadicTail::mass_integral() const {
  // Smallest weights first.
  const int last = first + static_cast<int>(samples.size()) - 1;
  long double sum = 0.0L;
  // Beyond `last`: Σ_{k>last} 2^{-k} (limit + slope·2^{1-k}).
  long double rest = static_cast<long double>(limit) * std::ldexp(1.0L, -last);
  if (affine) rest += 2.0L * slope * std::ldexp(1.0L, -2 * last) / 3.0L;
  sum += rest;
  for (int k = last; k >= first; --k) {
    sum += std::ldexp(1.0L, -k) * samples[static_cast<std::size_t>(k - first)];
  }
  return sum;
}

double DyadicTail::sup_deviation(double c) const {
  double dev = std::abs(limit - c);
  for (double v : samples) dev = std::max(dev, std::abs(v - c));
  if (affine) {
    const int next = first + static_cast<int>(samples.size());
    dev = std::max(dev, std::abs(limit + slope * dyadic_point(next) - c));
  }
  return dev;
}

DyadicTail DyadicTail::shifted(double c) const {
  DyadicTail t = *this;
  for (double& v : t.samples) v += c;
  t.limit += c;
  return t;
}

DyadicTail DyadicTail::scaled(double s) const {
  DyadicTail t = *this;
  for (double& v : t.samples) v *= s;
  t.limit *= s;
  t.slope *= s;
  return t;
}

// ---------------------------------------------------------------------------
// Element

Element Element::from_values(AlgebraPtr alg, DenseVector values) {
  if (!alg->is_commutative()) throw InvalidArgument("point values need a commutative algebra");
  if (values.size() != alg->dimension()) {
    throw InvalidArgument("element has " + std::to_string(values.size()) + " values, algebra has " +
                          std::to_string(alg->dimension()) + " points");
  }
  if (!values.allFinite()) throw InvalidArgument("element values must be finite");
  return Element(std::move(alg), std::move(values), std::nullopt);
}

Element Element::from_values(AlgebraPtr alg, DenseVector values, DyadicTail tail) {
  Element e = from_values(alg, std::move(values));
  const double tail_weight = alg->weights().back();
  if (std::abs(std::ldexp(1.0, 1 - tail.first) - tail_weight) > tol::kExact * tail_weight) {
    throw InvalidArgument("dyadic tail does not match the weight of the last point");
  }
  auto& v = std::get<DenseVector>(e.data_);
  v(v.size() - 1) = static_cast<double>(tail.mass_integral() / tail_weight);
  e.tail_ = std::move(tail);
  return e;
}

Element Element::from_matrix(AlgebraPtr alg, ComplexMatrix m) {
  if (alg->is_commutative()) throw InvalidArgument("matrix data needs a matrix algebra");
  if (m.rows() != alg->dimension() || m.cols() != alg->dimension()) {
    throw InvalidArgument("matrix element has the wrong size");
  }
  if (!m.allFinite()) throw InvalidArgument("matrix entries must be finite");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol::kExact) {
    throw InvalidArgument("matrix element is not Hermitian");
  }
  return Element(std::move(alg), std::move(m), std::nullopt);
}

Element Element::unit(AlgebraPtr alg) {
  if (alg->is_commutative()) {
    auto n = alg->dimension();
    return from_values(std::move(alg), DenseVector::Ones(n));
  }
  auto n = alg->dimension();
  return from_matrix(std::move(alg), ComplexMatrix::Identity(n, n));
}

Element Element::zero(AlgebraPtr alg) {
  if (alg->is_commutative()) {
    auto n = alg->dimension();
    return from_values(std::move(alg), DenseVector::Zero(n));
  }
  auto n = alg->dimension();
  return from_matrix(std::move(alg), ComplexMatrix::Zero(n, n));
}

const DenseVector& Element::values() const {
  if (const auto* v = std::get_if<DenseVector>(&data_)) return *v;
  throw InvalidArgument("element is a matrix, not a point function");
}

const ComplexMatrix& Element::matrix() const {
  if (const auto* m = std::get_if<ComplexMatrix>(&data_)) return *m;
  throw InvalidArgument("element is a point function, not a matrix");
}

double Element::trace() const {
  if (is_commutative()) {
    const auto& w = alg_->weights();
    const auto& v = values();
    std::vector<int> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
    });
    const int tail_index = static_cast<int>(w.size()) - 1;
    long double sum = 0.0L;
    for (int i : order) {
      if (tail_ && i == tail_index) {
        sum += tail_->mass_integral();
      } else {
        sum += static_cast<long double>(w[static_cast<std::size_t>(i)]) * v(i);
      }
    }
    return static_cast<double>(sum);
  }
  return matrix().trace().real() / static_cast<double>(alg_->dimension());
}

void Element::require_same_algebra(const Element& other) const {
  if (alg_ != other.alg_) throw InvalidArgument("elements belong to different algebras");
}

Element Element::operator+(const Element& other) const {
  require_same_algebra(other);
  if (tail_ && other.tail_) throw InvalidArgument("cannot add two elements with dyadic tails");
  if (is_commutative()) {
    DenseVector v = values() + other.values();
    const auto* t = tail_ ? &*tail_ : (other.tail_ ? &*other.tail_ : nullptr);
    if (!t) return from_values(alg_, std::move(v));
    const Element& plain = tail_ ? other : *this;
    return from_values(alg_, std::move(v), t->shifted(plain.values()(v.size() - 1)));
  }
  return from_matrix(alg_, matrix() + other.matrix());
}

Element Element::operator-(const Element& other) const { return *this + other * -1.0; }

Element Element::operator*(double s) const {
  if (is_commutative()) {
    DenseVector v = values() * s;
    if (tail_) return from_values(alg_, std::move(v), tail_->scaled(s));
    return from_values(alg_, std::move(v));
  }
  return from_matrix(alg_, matrix() * s);
}

Element Element::plus_scalar(double c) const { return *this + unit(alg_) * c; }

Element Element::product(const Element& other) const {
  require_same_algebra(other);
  if (tail_ || other.tail_) throw InvalidArgument("products of tailed elements are not supported");
  if (is_commutative()) return from_values(alg_, values().cwiseProduct(other.values()));
  return from_matrix(alg_, matrix() * other.matrix());
}

// ---------------------------------------------------------------------------
// BetaSequence

BetaSequence BetaSequence::geometric(double ratio) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw InvalidArgument("geometric ratio must lie in (0,1)");
  std::ostringstream name;
  name << "geom:" << ratio;
  return BetaSequence([ratio](int n) { return std::pow(ratio, n); }, true, name.str(),
                      std::nullopt);
}

BetaSequence BetaSequence::harmonic() {
  return BetaSequence([](int n) { return 1.0 / n; }, true, "harmonic", std::nullopt);
}

BetaSequence BetaSequence::from_values(std::vector<double> values, std::string name) {
  if (values.empty()) throw InvalidArgument("beta table must be nonempty");
  bool monotone = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw InvalidArgument("beta values must be positive and finite");
    }
    if (i > 0 && values[i] > values[i - 1]) monotone = false;
  }
  const int max_level = static_cast<int>(values.size());
  auto table = std::make_shared<const std::vector<double>>(std::move(values));
  return BetaSequence([table](int n) { return (*table)[static_cast<std::size_t>(n - 1)]; },
                      monotone, std::move(name), max_level);
}

double BetaSequence::operator()(int n) const {
  if (n < 1 || (max_level_ && n > *max_level_)) {
    throw InvalidArgument("beta(" + std::to_string(n) + ") is not defined for " + name_);
  }
  double b = gen_(n);
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw InvalidArgument("beta(" + std::to_string(n) + ") is not positive");
  }
  return b;
}

void BetaSequence::validate(int levels) const {
  double prev = 0.0;
  for (int n = 1; n <= levels; ++n) {
    double b = (*this)(n);
    if (monotone_ && n > 1 && b > prev) {
      throw InvalidArgument("beta flagged monotone but increases at level " + std::to_string(n));
    }
    prev = b;
  }
  if (levels >= 2 && !((*this)(levels) < (*this)(1))) {
    throw InvalidArgument("beta does not decrease toward 0 over the working levels");
  }
}

}  // namespace qm
