#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "stable/error.hpp"

namespace testsup {

// runs fn expecting it to throw stable::Error and returns the code;
// anything else fails the test loudly
template <class Fn>
stable::Errc thrown_code(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const stable::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a stable::Error, none was thrown");
}

inline bool rel_close(double got, double want, double tol) {
  double scale = std::max(std::fabs(got), std::fabs(want));
  return std::fabs(got - want) <= tol * scale;
}

}  // namespace testsup
