#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace svtab {

enum class Errc {
  EmptyCell,
  NotAPartitionOfRange,
  OrderViolation,
  ShapeMismatch,
  ShapeNotTwoRowRectangular,
  Not321Avoiding,
  NotInMotzET,
  NotInMotzT,
  InvalidPick,
  OutOfRange,
  InconsistentType,
  NonConvergence,
  NonInvertibleDenominator,
  DivisionNotExact,
  InvalidArgument,
  ParseError,
};

std::string_view errc_name(Errc code);

/// Every failure in the library is reported through this type; `code()` is
/// stable and meant for programmatic checks, `what()` for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyCell: return "EmptyCell";
    case Errc::NotAPartitionOfRange: return "NotAPartitionOfRange";
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ShapeNotTwoRowRectangular: return "ShapeNotTwoRowRectangular";
    case Errc::Not321Avoiding: return "Not321Avoiding";
    case Errc::NotInMotzET: return "NotInMotzET";
    case Errc::NotInMotzT: return "NotInMotzT";
    case Errc::InvalidPick: return "InvalidPick";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InconsistentType: return "InconsistentType";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case Errc::DivisionNotExact: return "DivisionNotExact";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace svtab
