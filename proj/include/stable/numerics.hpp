#pragma once

#include <cmath>
#include <span>

namespace stable {

// value = sign * exp(log_magnitude); sign = 0 encodes exactly 0
struct LogScaled {
  double log_magnitude;
  int sign;

  static LogScaled encode(double v);
  double decode() const;
};

// ln Gamma(z) for z > 0; relative error of exp(result) <= 1e-13 on (0, 170]
double log_gamma(double z);

// sin(pi*y/2), argument reduced modulo 4 so accuracy survives large y
double sin_half_pi(double y);

// sin(pi/2 * a*n*(1+theta)) with the product formed in double-double,
// so the reduced argument stays accurate for n up to a few hundred
double sin_half_pi_product(double a, int n, double theta);

// Neumaier-compensated running sum
class CompensatedAccumulator {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> terms);

}  // namespace stable
