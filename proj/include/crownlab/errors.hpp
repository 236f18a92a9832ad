#pragma once

// Exception hierarchy shared by every crownlab module. Callers that only care
// about "something went wrong" catch crownlab::Error; the CLI maps the
// decomposition failures to their own exit code.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crownlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidRank : public InvalidArgument {
 public:
  explicit InvalidRank(int n)
      : InvalidArgument("invalid rank n=" + std::to_string(n) + " (need n >= 2)") {}
};

class OutOfDomain : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidGroupElement : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidBorel : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class OracleOutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class CoverageNotSupported : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A trailing principal minor vanished numerically: the matrix left the
/// open cell where the upper-diagonal-lower factorization exists.
class DecompositionOutsideCell : public Error {
 public:
  DecompositionOutsideCell(std::size_t index, double magnitude)
      : Error("decomposition outside cell: trailing minor " + std::to_string(index + 1) +
              " has |tau| = " + std::to_string(magnitude)),
        index_(index),
        magnitude_(magnitude) {}

  /// Zero-based index k of the offending minor det S[k.., k..].
  std::size_t index() const noexcept { return index_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  std::size_t index_;
  double magnitude_;
};

class BranchTrackingFailure : public Error {
 public:
  using Error::Error;
};

class InconsistentDecomposition : public Error {
 public:
  using Error::Error;
};

class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace crownlab
