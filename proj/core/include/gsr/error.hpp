#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsr {

enum class Errc {
  InvalidArgument,
  IndexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  InvalidWeight,
  ZeroDegreeVertex,
  TooFewVertices,
  NotSymmetric,
  NotPSD,
  NotPositiveDefinite,
  DimensionMismatch,
  NegativeSpectralValue,
  ZeroSpectralValue,
  EmptyBand,
  SingularMatrix,
  SingularSystem,
  SingularPrecision,
  ZeroTrace,
  ConstraintViolation,
  Unidentifiable,
  IllConditioned,
  AllZeroResponse,
  SpectrumMismatch,
  AllZero,
  ZeroSignal,
  TooManySamples,
  ZeroDenominator,
  ParseError,
  ConfigError,
};

std::string_view to_string(Errc code) noexcept;

/// Exception carrying a machine-readable code. `diagnostic()` holds an
/// optional numeric detail (condition numbers for Unidentifiable and
/// IllConditioned); it is NaN when not applicable.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, double diagnostic);
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  double diagnostic() const noexcept { return diagnostic_; }

 private:
  Errc code_;
  double diagnostic_;
};

}  // namespace gsr
