#include <cmath>

#include "qm/errors.hpp"
#include "qm/numerics.hpp"

namespace qm {

namespace {

// Golden-ratio offsets keep the start vector off every coordinate-aligned or
// sign-symmetric subspace.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> start_vector(Eigen::Index n) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v(n);
  constexpr double kGolden = 0.6180339887498949;
  for (Eigen::Index i = 0; i < n; ++i) {
    double frac = std::fmod(static_cast<double>(i + 1) * kGolden, 1.0);
    v(i) = Scalar(0.5 + frac);
  }
  return v / v.norm();
}

template <typename Matrix>
double spectral_norm_impl(const Matrix& m) {
  using Scalar = typename Matrix::Scalar;
  if (m.rows() != m.cols()) throw InvalidArgument("spectral_norm requires a square matrix");
  if (m.size() == 0) return 0.0;
  if (!m.allFinite()) throw InvalidArgument("spectral_norm requires finite entries");

  const Matrix gram = m.adjoint() * m;
  // Iterates with G^(2^s), squaring every kSquaringPeriod steps without
  // convergence, so nearly coincident top eigenvalues still separate quickly.
  // The Rayleigh quotient and residual are always taken against G itself.
  constexpr int kSquaringPeriod = 50;
  constexpr int kMaxSquarings = 40;
  Matrix power = gram;
  int squarings = 0;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v = start_vector<Scalar>(m.cols());
  double previous = 0.0;
  for (int it = 0; it < kPowerIterationCap; ++it) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w = gram * v;
    double lambda = std::real(v.dot(w));
    double wn = w.norm();
    if (wn == 0.0) return 0.0;
    double residual = (w - Scalar(lambda) * v).norm();
    if (residual <= 1e-11 * wn) return std::sqrt(std::max(lambda, 0.0));
    if (it >= 2 && squarings == kMaxSquarings && std::abs(lambda - previous) <= 1e-15 * lambda) {
      return std::sqrt(std::max(lambda, 0.0));
    }
    previous = lambda;
    if (it % kSquaringPeriod == kSquaringPeriod - 1 && squarings < kMaxSquarings) {
      power = power * power;
      double scale = power.cwiseAbs().maxCoeff();
      if (scale > 0.0) power /= Scalar(scale);
      ++squarings;
    }
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> next = power * v;
    double nn = next.norm();
    if (nn == 0.0) return std::sqrt(std::max(lambda, 0.0));
    v = next / nn;
  }
  throw NumericalFailure("power iteration did not converge within the iteration cap");
}

}  // namespace

double spectral_norm(const DenseMatrix& m) { return spectral_norm_impl(m); }
double spectral_norm(const ComplexMatrix& m) { return spectral_norm_impl(m); }

}  // namespace qm
