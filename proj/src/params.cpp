#include "stable/params.hpp"

#include <cmath>
#include <sstream>

#include "stable/error.hpp"

namespace stable {

namespace {

constexpr double kThetaSlack = 1e-12;

std::string describe(double alpha, double theta, double lambda) {
  std::ostringstream os;
  os << "alpha=" << alpha << " theta=" << theta << " lambda=" << lambda;
  return os.str();
}

}  // namespace

double theta_bound(double alpha) {
  return std::min(1.0, 2.0 / alpha - 1.0);
}

StableParams validate(double alpha, double theta, double lambda) {
  if (!(alpha > 0.0) || !(alpha <= 2.0) || !std::isfinite(alpha)) {
    throw Error(Errc::AlphaOutOfRange,
                "alpha must lie in (0, 2], got " + describe(alpha, theta, lambda));
  }
  double bound = theta_bound(alpha);
  if (!std::isfinite(theta) || std::fabs(theta) > bound + kThetaSlack) {
    std::ostringstream os;
    os << "|theta| must not exceed min(1, 2/alpha - 1) = " << bound << ", got "
       << describe(alpha, theta, lambda);
    throw Error(Errc::ThetaOutOfRange, os.str());
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(Errc::LambdaNonPositive,
                "lambda must be positive, got " + describe(alpha, theta, lambda));
  }
  return {alpha, theta, lambda};
}

StableParams validate(const StableParams& p) {
  return validate(p.alpha, p.theta, p.lambda);
}

ReflectedPoint reflect(double x, double theta) {
  if (x < 0.0) return {-x, -theta};
  if (x == 0.0) return {0.0, theta};  // sign(0) = +1, covers -0.0
  return {x, theta};
}

}  // namespace stable
