#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "typreal/errors.hpp"

namespace typreal {

// Everything downstream evaluates Chebyshev polynomials in trigonometric
// form, so x is only useful together with its angle theta = arccos(x). The
// guard keeps sin(theta) away from underflow in the quotient forms.
inline constexpr double kThetaGuard = 1e-12;

/// A point of (-1, 1) carried as the pair (x, theta) with x = cos(theta).
///
/// Construct via from_x (takes the arccos) or from_theta (avoids the round
/// trip when the angle is the natural datum, e.g. closed-form roots).
class ChebPoint {
 public:
  static ChebPoint from_x(double x) {
    if (!(std::abs(x) < 1.0)) {
      throw std::domain_error("ChebPoint: need |x| < 1, got " +
                              std::to_string(x));
    }
    return ChebPoint(x, std::acos(x));
  }

  static ChebPoint from_theta(double theta) {
    return ChebPoint(std::cos(theta), theta);
  }

  double x() const { return x_; }
  double theta() const { return theta_; }
  double sin_theta() const { return sin_theta_; }

 private:
  ChebPoint(double x, double theta)
      : x_(x), theta_(theta), sin_theta_(std::sin(theta)) {
    if (!(theta_ >= kThetaGuard && theta_ <= std::numbers::pi - kThetaGuard)) {
      throw std::domain_error("ChebPoint: theta outside guarded (0, pi)");
    }
  }

  double x_;
  double theta_;
  double sin_theta_;
};

/// Second-kind Chebyshev polynomial U_k(x) = sin((k+1) theta) / sin(theta),
/// extended by U_{-1} = 0.
inline double u_eval(int k, const ChebPoint& p) {
  if (k < -1) throw std::invalid_argument("u_eval: need k >= -1");
  if (k == -1) return 0.0;
  return std::sin((k + 1) * p.theta()) / p.sin_theta();
}

/// First-kind Chebyshev polynomial T_k(x) = cos(k theta).
inline double t_eval(int k, const ChebPoint& p) {
  if (k < 0) throw std::invalid_argument("t_eval: need k >= 0");
  return std::cos(k * p.theta());
}

/// Derivative of the second-kind polynomial,
///   U'_k(x) = ((k+2) U_{k-1}(x) - k U_{k+1}(x)) / (2 (1 - x^2)),
/// with 1 - x^2 computed as sin^2(theta).
inline double u_deriv_eval(int k, const ChebPoint& p) {
  if (k < 0) throw std::invalid_argument("u_deriv_eval: need k >= 0");
  const double s = p.sin_theta();
  return ((k + 2) * u_eval(k - 1, p) - k * u_eval(k + 1, p)) / (2.0 * s * s);
}

/// Closed form of the pair sum 2 * sum_{j=1}^{N-k} U_j(x) U_{j+k-1}(x):
///
///   ((N - k) T_{k-1}(x) - T_{N+2}(x) U_{N-k-1}(x)) / sin^2(theta)
///
/// At k = N both terms vanish (U_{-1} = 0), matching the empty sum.
inline double pair_sum_closed(int k, int n, const ChebPoint& p) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("pair_sum_closed: need 1 <= k <= N");
  }
  const double s = p.sin_theta();
  return ((n - k) * t_eval(k - 1, p) - t_eval(n + 2, p) * u_eval(n - k - 1, p)) /
         (s * s);
}

}  // namespace typreal
