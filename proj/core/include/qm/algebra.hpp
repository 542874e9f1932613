#pragma once

// Finite truncations of filtered unital algebras, their self-adjoint
// elements, and the scale sequences β used by the Lip-norm.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qm/numerics.hpp"

namespace qm {

enum class AlgebraKind { commutative, matrix };

using Block = std::vector<int>;
using Partition = std::vector<Block>;

class FilteredAlgebra;
using AlgebraPtr = std::shared_ptr<const FilteredAlgebra>;

/// A truncation A_1 ⊂ A_2 ⊂ … ⊂ A_N with a faithful tracial state τ.
///
/// Levels are numbered from 1 and level 1 is always the scalars. The
/// commutative kind is functions on a finite point set; level n is the
/// functions constant on the blocks of partition n, and τ integrates against
/// strictly positive weights. The matrix kind is M_{2^K} with level n equal to
/// M_{2^{n-1}} ⊗ 1 and τ the normalized trace, so N = K + 1.
class FilteredAlgebra {
 public:
  /// Throws InvalidArgument unless weights are positive and sum to 1, the
  /// first partition is the whole set, each partition refines the previous
  /// one and the last is all singletons.
  static AlgebraPtr commutative(std::vector<std::string> labels, std::vector<double> weights,
                                std::vector<Partition> partitions);
  static AlgebraPtr matrix(int sites);

  AlgebraKind kind() const noexcept { return kind_; }
  bool is_commutative() const noexcept { return kind_ == AlgebraKind::commutative; }
  int levels() const noexcept { return levels_; }
  /// Number of points, or the matrix size 2^K.
  int dimension() const noexcept { return dimension_; }
  int sites() const noexcept { return sites_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  /// Index of a point label; nullopt if unknown.
  std::optional<int> find_label(const std::string& label) const;

  const Partition& partition(int level) const;
  /// Block index of `point` inside partition `level`.
  int block_of(int level, int point) const;
  /// Block members ordered by increasing weight (accumulation order).
  const Block& sorted_block(int level, int block) const;

  void check_level(int level) const;

 private:
  FilteredAlgebra() = default;

  AlgebraKind kind_ = AlgebraKind::commutative;
  int levels_ = 0;
  int dimension_ = 0;
  int sites_ = 0;
  std::vector<std::string> labels_;
  std::vector<double> weights_;
  std::vector<Partition> partitions_;
  std::vector<std::vector<int>> block_index_;
  std::vector<Partition> sorted_blocks_;
};

/// Values of an interval element on the points folded into the last (tail)
/// label of a dyadic truncation: explicit samples at x_k = 2^{1-k} for
/// k = first, first+1, …, then either the constant `limit` or, when `affine`,
/// the line x ↦ limit + slope·x. Point k carries τ-weight 2^{-k}, so the tail
/// of a level-N truncation (first = N) has total weight 2^{1-N}.
struct DyadicTail {
  int first = 0;
  std::vector<double> samples;
  double limit = 0.0;
  bool affine = false;
  double slope = 0.0;

  /// ∫ f dτ over the tail points.
  long double mass_integral() const;
  /// sup |f − c| over the tail points and the limit point.
  double sup_deviation(double c) const;
  DyadicTail shifted(double c) const;
  DyadicTail scaled(double s) const;
};

/// A self-adjoint element of a FilteredAlgebra: a real vector over points or
/// a Hermitian matrix, optionally carrying a DyadicTail when the element is
/// not in the top level of the truncation (e.g. p_1(x) = x on the interval).
class Element {
 public:
  static Element from_values(AlgebraPtr alg, DenseVector values);
  static Element from_values(AlgebraPtr alg, DenseVector values, DyadicTail tail);
  /// Throws InvalidArgument unless the matrix is Hermitian within 1e-12.
  static Element from_matrix(AlgebraPtr alg, ComplexMatrix m);
  static Element unit(AlgebraPtr alg);
  static Element zero(AlgebraPtr alg);

  const FilteredAlgebra& algebra() const noexcept { return *alg_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return alg_; }
  bool is_commutative() const noexcept { return alg_->is_commutative(); }

  /// Point values (commutative kind). With a tail, the last entry holds the
  /// τ-conditional mean of the tail.
  const DenseVector& values() const;
  const ComplexMatrix& matrix() const;
  const std::optional<DyadicTail>& tail() const noexcept { return tail_; }
  bool has_tail() const noexcept { return tail_.has_value(); }

  /// τ(a).
  double trace() const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(double s) const;
  Element plus_scalar(double c) const;
  /// Pointwise or matrix product. For matrices the product of commuting
  /// Hermitian factors only; anything else throws InvalidArgument.
  Element product(const Element& other) const;

 private:
  Element(AlgebraPtr alg, std::variant<DenseVector, ComplexMatrix> data,
          std::optional<DyadicTail> tail)
      : alg_(std::move(alg)), data_(std::move(data)), tail_(std::move(tail)) {}

  void require_same_algebra(const Element& other) const;

  AlgebraPtr alg_;
  std::variant<DenseVector, ComplexMatrix> data_;
  std::optional<DyadicTail> tail_;
};

inline Element operator*(double s, const Element& a) { return a * s; }

/// The positive scale sequence n ↦ β(n), n ≥ 1.
class BetaSequence {
 public:
  /// β(n) = ratio^n, ratio in (0,1).
  static BetaSequence geometric(double ratio);
  /// β(n) = 1/n.
  static BetaSequence harmonic();
  /// β(n) = values[n-1] for n = 1..values.size(); monotone flag computed.
  static BetaSequence from_values(std::vector<double> values, std::string name);

  double operator()(int n) const;
  bool monotone() const noexcept { return monotone_; }
  const std::string& name() const noexcept { return name_; }
  /// Largest level with a value, or nullopt for unbounded generators.
  std::optional<int> max_level() const noexcept { return max_level_; }

  /// Positivity for n = 1..levels, non-increase when flagged monotone, and
  /// β(levels) < β(1) as the finite witness of convergence to 0.
  void validate(int levels) const;

 private:
  BetaSequence(std::function<double(int)> gen, bool monotone, std::string name,
               std::optional<int> max_level)
      : gen_(std::move(gen)), monotone_(monotone), name_(std::move(name)), max_level_(max_level) {}

  std::function<double(int)> gen_;
  bool monotone_ = true;
  std::string name_;
  std::optional<int> max_level_;
};

}  // namespace qm
