#include "stable/error.hpp"

namespace stable {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::ThetaOutOfRange: return "ThetaOutOfRange";
    case Errc::LambdaNonPositive: return "LambdaNonPositive";
    case Errc::ThetaBoundary: return "ThetaBoundary";
    case Errc::ZeroCoordinate: return "ZeroCoordinate";
    case Errc::DivergedTerm: return "DivergedTerm";
    case Errc::NoBracket: return "NoBracket";
    case Errc::SolverError: return "SolverError";
    case Errc::AlphaOne: return "AlphaOne";
    case Errc::DegenerateAtom: return "DegenerateAtom";
    case Errc::DomainError: return "DomainError";
  }
  return "UnknownError";
}

bool errc_is_validation(Errc c) noexcept {
  switch (c) {
    case Errc::AlphaOutOfRange:
    case Errc::ThetaOutOfRange:
    case Errc::LambdaNonPositive:
    case Errc::ThetaBoundary:
    case Errc::ZeroCoordinate:
    case Errc::AlphaOne:
    case Errc::DomainError:
      return true;
    case Errc::DivergedTerm:
    case Errc::NoBracket:
    case Errc::SolverError:
    case Errc::DegenerateAtom:
      return false;
  }
  return false;
}

}  // namespace stable
