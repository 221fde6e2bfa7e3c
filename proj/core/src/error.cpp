#include "gsr/error.hpp"

#include <limits>

namespace gsr {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::InvalidWeight: return "InvalidWeight";
    case Errc::ZeroDegreeVertex: return "ZeroDegreeVertex";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotPSD: return "NotPSD";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NegativeSpectralValue: return "NegativeSpectralValue";
    case Errc::ZeroSpectralValue: return "ZeroSpectralValue";
    case Errc::EmptyBand: return "EmptyBand";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::SingularPrecision: return "SingularPrecision";
    case Errc::ZeroTrace: return "ZeroTrace";
    case Errc::ConstraintViolation: return "ConstraintViolation";
    case Errc::Unidentifiable: return "Unidentifiable";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::AllZeroResponse: return "AllZeroResponse";
    case Errc::SpectrumMismatch: return "SpectrumMismatch";
    case Errc::AllZero: return "AllZero";
    case Errc::ZeroSignal: return "ZeroSignal";
    case Errc::TooManySamples: return "TooManySamples";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what, double diagnostic)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      diagnostic_(diagnostic) {}

Error::Error(Errc code, const std::string& what)
    : Error(code, what, std::numeric_limits<double>::quiet_NaN()) {}

}  // namespace gsr
