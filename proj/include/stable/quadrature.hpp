#pragma once

namespace stable {

struct QuadResult {
  double value;
  double err_estimate;
  int evaluations;
  bool converged;  // err_estimate met the requested tolerance
};

// One sample of the integrand kernel
//   U(phi, alpha, theta*) = (sin(alpha(phi + pi theta*/2)) / cos phi)^{alpha/(1-alpha)}
//                           * cos(phi(1-alpha) - pi alpha theta*/2) / cos phi
// on the open interval (-pi theta*/2, pi/2), reported as ln U.
struct UKernelPoint {
  double phi;
  double log_u;
  bool defined;  // false where a factor is nonpositive and a fractional power is required
};

UKernelPoint u_kernel(double phi, double alpha, double theta_star);

struct QuadOptions {
  double tol = 1e-6;           // relative tolerance
  double tol_abs = 1e-13;      // absolute floor in the acceptance test
  bool split_at_peak = true;   // pre-split the interval at the integrand peak
  int max_subdivisions = 200;
};

// Adaptive Gauss-Kronrod evaluation of
//   g(x) = alpha/(pi |alpha-1|) * Integral exp{-|x|^{alpha/(alpha-1)} U} U |x|^{1/(alpha-1)} dphi
// over (-pi theta*/2, pi/2). Requires alpha != 1 (AlphaOne) and x != 0
// (ZeroCoordinate). The integrand is assembled in log space so it survives
// |x|^{alpha/(alpha-1)} far outside double range. Non-convergence is
// reported through converged = false, not thrown. |theta*| = 1 is evaluated
// but err_estimate is inflated tenfold.
QuadResult density_integral(double x, double alpha, double theta, double tol);
QuadResult density_integral(double x, double alpha, double theta,
                            const QuadOptions& options);

// Location of the log-integrand maximum in phi, used for the pre-split.
// Falls back to the interval midpoint if bracketing fails.
double peak_locate(double x, double alpha, double theta_star);

// Fourier-inversion reference:
//   g(x) = (1/pi) Re Integral_0^inf exp(i t x) exp{-t^alpha e^{-i(pi/2)alpha theta*}} dt,
// integrated arch by arch between phase zeros with Euler acceleration of the
// alternating arch sums. Accurate but slow; breaks down for large |x|
// (converged = false). Test and diagnostic use only.
QuadResult fourier_oracle(double x, double alpha, double theta, double tol);

}  // namespace stable
