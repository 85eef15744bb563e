#include "g2cm/error.hpp"

namespace g2cm {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::CompositeModulus: return "CompositeModulus";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::NonMonicIntegerDivisor: return "NonMonicIntegerDivisor";
    case Errc::IntegerOverflow: return "IntegerOverflow";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::BadDegree: return "BadDegree";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::DegreeSixUnsupported: return "DegreeSixUnsupported";
    case Errc::InvalidDivisor: return "InvalidDivisor";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::InconsistentCounts: return "InconsistentCounts";
    case Errc::NotAnnihilated: return "NotAnnihilated";
    case Errc::DegenerateField: return "DegenerateField";
    case Errc::NotTotallyPositive: return "NotTotallyPositive";
    case Errc::IrrationalNorm: return "IrrationalNorm";
    case Errc::CompositeNorm: return "CompositeNorm";
    case Errc::EvenNorm: return "EvenNorm";
    case Errc::WeilViolation: return "WeilViolation";
    case Errc::EvenEll: return "EvenEll";
    case Errc::EllNotPrime: return "EllNotPrime";
    case Errc::EllEqualsP: return "EllEqualsP";
    case Errc::NotPrime: return "NotPrime";
    case Errc::TrivialSylow: return "TrivialSylow";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace g2cm
