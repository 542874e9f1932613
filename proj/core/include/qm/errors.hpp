#pragma once

#include <stdexcept>
#include <string>

namespace qm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments failed (level out of range, unknown point, bad shape).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// ‖a − E_n(a)‖ fell below the zero threshold, so a already lies in level n.
class ZeroResidual : public Error {
 public:
  ZeroResidual(int level, double residual)
      : Error("element lies in filtration level " + std::to_string(level) +
              " (residual " + std::to_string(residual) + ")"),
        level_(level),
        residual_(residual) {}

  int level() const noexcept { return level_; }
  double residual() const noexcept { return residual_; }

 private:
  int level_;
  double residual_;
};

/// The operation is only defined on commutative (point-valued) algebras.
class MatrixKindUnsupported : public Error {
 public:
  using Error::Error;
};

/// Two states were required to agree on a filtration level and do not.
class AgreementViolated : public Error {
 public:
  using Error::Error;
};

/// The witness element does not satisfy L_β(witness) = 1/β(n).
class WitnessMismatch : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed (LP not optimal, power iteration cap reached).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace qm
