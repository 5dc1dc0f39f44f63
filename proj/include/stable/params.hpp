#pragma once

namespace stable {

// Strictly stable law with characteristic function
//   exp{ -lambda |t|^alpha exp(-i (pi/2) alpha theta sign t) },
// alpha in (0, 2], |theta| <= min(1, 2/alpha - 1), lambda > 0.
struct StableParams {
  double alpha;
  double theta;
  double lambda = 1.0;
};

// Largest admissible |theta| for a given alpha: min(1, 2/alpha - 1).
double theta_bound(double alpha);

// Throws Error(Errc::AlphaOutOfRange / ThetaOutOfRange / LambdaNonPositive).
// The theta bound is checked with absolute slack 1e-12 so theta = 2/alpha - 1
// computed in floating point is accepted. Never clamps.
StableParams validate(double alpha, double theta, double lambda = 1.0);
StableParams validate(const StableParams& p);

// Density arguments reduced to x >= 0 via g(-x, alpha, theta) =
// g(x, alpha, -theta). sign(0) = +1, so x = 0 keeps theta unchanged.
struct ReflectedPoint {
  double abs_x;
  double theta_star;
};

ReflectedPoint reflect(double x, double theta);

}  // namespace stable
