#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2cm {

enum class Errc {
  CompositeModulus,
  EvenCharacteristic,
  DivisionByZero,
  DivisionByZeroPoly,
  NonMonicIntegerDivisor,
  IntegerOverflow,
  DegreeCapExceeded,
  BadDegree,
  NotSquarefree,
  DegreeSixUnsupported,
  InvalidDivisor,
  BoundExceeded,
  InconsistentCounts,
  NotAnnihilated,
  DegenerateField,
  NotTotallyPositive,
  IrrationalNorm,
  CompositeNorm,
  EvenNorm,
  WeilViolation,
  EvenEll,
  EllNotPrime,
  EllEqualsP,
  NotPrime,
  TrivialSylow,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace g2cm
