#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "typreal/cheb.hpp"
#include "typreal/errors.hpp"

namespace typreal {

enum class RootKind { mu, nu };

inline const char* to_string(RootKind k) {
  return k == RootKind::mu ? "mu" : "nu";
}

/// One characteristic number lambda = 1 / (4 r^2) of the pencil, tagged with
/// the positive root r of U_{N+1} (mu) or U'_{N+1} (nu) it comes from.
struct CharacteristicNumber {
  double lambda = 0.0;
  RootKind kind = RootKind::mu;
  double root = 0.0;
};

/// The positive spectral data of degree n: both root families (strictly
/// decreasing) and the ascending, strictly mu/nu-alternating lambda chain.
struct Spectrum {
  int n = 0;
  std::vector<double> mu;
  std::vector<double> nu;
  std::vector<CharacteristicNumber> lambdas;
};

/// Positive zeros of U_{n+1}: cos(j pi / (n+2)) for j = 1..floor((n+1)/2),
/// strictly decreasing. Closed form, no iteration.
inline std::vector<double> mu_roots(int n) {
  if (n < 1) throw std::invalid_argument("mu_roots: need n >= 1");
  std::vector<double> roots;
  roots.reserve((n + 1) / 2);
  for (int j = 1; j <= (n + 1) / 2; ++j) {
    roots.push_back(std::cos(j * std::numbers::pi / (n + 2)));
  }
  return roots;
}

namespace detail {

// Plain bisection for a zero of U'_{n+1} in [lo, hi]. The brackets used by
// the callers are analytically guaranteed to straddle a sign change, so
// agreeing endpoint signs indicate a caller bug, not bad luck.
inline double bisect_u_deriv(int n, double lo, double hi) {
  const auto f = [n](double x) {
    return u_deriv_eval(n + 1, ChebPoint::from_x(x));
  };
  double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw NumericError("bisect_u_deriv: no sign change in bracket");
  }
  int iterations = 0;
  while (hi - lo > 1e-15) {
    if (++iterations > 200) {
      throw NumericError("bisect_u_deriv: iteration cap exceeded");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket already at ulp width
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double nu_least_bracket_lo(int n) {
  return std::cos((n + 1) * std::numbers::pi / (2.0 * (n + 2)));
}

inline double nu_least_bracket_hi(int n) {
  return std::cos(n * std::numbers::pi / (2.0 * (n + 1)));
}

}  // namespace detail

/// Least positive zero of U'_{n+1} for even n, located by bisection inside
/// the bracket ( cos((n+1)pi/(2(n+2))), cos(n pi/(2(n+1))) ).
inline double nu_least(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("nu_least: need even n >= 2");
  }
  return detail::bisect_u_deriv(n, detail::nu_least_bracket_lo(n),
                                detail::nu_least_bracket_hi(n));
}

/// All positive zeros of U'_{n+1}, strictly decreasing; there are
/// floor(n/2) of them. Interior zeros are bracketed by consecutive positive
/// zeros of U_{n+1}; for even n the least zero lies below every positive
/// zero of U_{n+1} and uses the dedicated nu_least bracket.
inline std::vector<double> nu_roots(int n) {
  if (n < 2) throw std::invalid_argument("nu_roots: need n >= 2");
  const std::vector<double> mu = mu_roots(n);
  const int count = n / 2;
  std::vector<double> roots;
  roots.reserve(count);
  for (int j = 1; j <= count; ++j) {
    double lo, hi;
    if (j < static_cast<int>(mu.size())) {
      lo = mu[j];
      hi = mu[j - 1];
    } else {
      lo = detail::nu_least_bracket_lo(n);
      hi = detail::nu_least_bracket_hi(n);
    }
    roots.push_back(detail::bisect_u_deriv(n, lo, hi));
  }
  return roots;
}

/// Full positive spectrum for degree n. Since the decreasing roots
/// interlace as mu_1 > nu_1 > mu_2 > nu_2 > ..., walking them in that order
/// emits the n characteristic numbers already ascending, alternating in
/// kind starting with mu; odd n ends on mu, even n on nu.
inline Spectrum characteristic_numbers(int n) {
  if (n < 1) throw std::invalid_argument("characteristic_numbers: need n >= 1");
  Spectrum s;
  s.n = n;
  s.mu = mu_roots(n);
  if (n >= 2) s.nu = nu_roots(n);
  s.lambdas.reserve(n);
  for (std::size_t j = 0; j < s.mu.size(); ++j) {
    s.lambdas.push_back({0.25 / (s.mu[j] * s.mu[j]), RootKind::mu, s.mu[j]});
    if (j < s.nu.size()) {
      s.lambdas.push_back({0.25 / (s.nu[j] * s.nu[j]), RootKind::nu, s.nu[j]});
    }
  }
  for (std::size_t i = 1; i < s.lambdas.size(); ++i) {
    if (!(s.lambdas[i - 1].lambda < s.lambdas[i].lambda)) {
      throw NumericError("characteristic_numbers: lambda chain not increasing");
    }
  }
  return s;
}

/// Residual of the angular equation satisfied by nu = sin(theta) for even n:
///   (n+3) cos((n+1) theta) + (n+1) cos((n+3) theta).
inline double theta_residual(int n, double theta) {
  if (n < 0 || n % 2 != 0) {
    throw std::invalid_argument("theta_residual: need even n >= 0");
  }
  return (n + 3) * std::cos((n + 1) * theta) +
         (n + 1) * std::cos((n + 3) * theta);
}

}  // namespace typreal
