#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace artinres {

/// Every failure raised by the library carries one of these kinds. The CLI
/// maps them onto its documented exit codes.
enum class ErrorKind {
  Parse,
  InvalidArgument,
  NotArtinian,
  MixedRings,
  NotNilpotent,
  NotAUnit,
  InsufficientPrecision,
  NotALaurentUnit,
  WrongCharacteristic,
  NotNilUnit,
  SupportNotDivisible,
  PreconditionFailed,
  WrongGenus,
  NotRadiallyAligned,
  NotStable,
  NonAligned,
  InvalidPL,
  JetTooShort,
  UnassignedParameter,
  NotInAnnihilator,
  IncompatibleCharts,
  NotResidueLevel,
  NotStabilized,
  ChartInvariant,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace artinres
