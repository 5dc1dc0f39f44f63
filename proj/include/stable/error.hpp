#pragma once

#include <stdexcept>
#include <string>

namespace stable {

enum class Errc {
  AlphaOutOfRange,
  ThetaOutOfRange,
  LambdaNonPositive,
  ThetaBoundary,
  ZeroCoordinate,
  DivergedTerm,
  NoBracket,
  SolverError,
  AlphaOne,
  DegenerateAtom,
  DomainError,
};

const char* errc_name(Errc c) noexcept;

// true for errors caused by inadmissible requests (CLI exit 2),
// false for numerical failures (CLI exit 3)
bool errc_is_validation(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace stable
