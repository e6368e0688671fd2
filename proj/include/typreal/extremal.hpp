#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "typreal/certify.hpp"
#include "typreal/pencil.hpp"
#include "typreal/spectra.hpp"

namespace typreal {

enum class Parity { odd, even };

inline const char* to_string(Parity p) {
  return p == Parity::odd ? "odd" : "even";
}

/// The degree-n extremal polynomial F(z) = sum_k alpha_k z^k, normalized to
/// alpha_1 = 1. Its extremal value j = sum_k alpha_k = F(1) equals the
/// largest characteristic number of the degree-n pencil.
struct ExtremalPolynomial {
  int n = 0;
  std::vector<double> coeffs;  // alpha_1..alpha_n
  double j = 0.0;
  double root = 0.0;  // mu for odd n, nu for even n
  Parity parity = Parity::odd;
};

/// The universal majorant (1/4) csc^2(pi / (2 (n+2))); attained exactly for
/// odd n, approached from below for even n.
inline double upper_bound(int n) {
  if (n < 1) throw std::invalid_argument("upper_bound: need n >= 1");
  const double s = std::sin(std::numbers::pi / (2.0 * (n + 2)));
  return 0.25 / (s * s);
}

/// The extremal value j_n: upper_bound(n) for odd n, 1/(4 nu^2) at the
/// least positive zero nu of U'_{n+1} for even n.
inline double j_value(int n) {
  if (n < 1) throw std::invalid_argument("j_value: need n >= 1");
  if (n % 2 == 1) return upper_bound(n);
  const double nu = nu_least(n);
  return 0.25 / (nu * nu);
}

namespace detail {

inline ExtremalPolynomial extremal_from_vector(const PrincipalVector& v) {
  ExtremalPolynomial p;
  p.n = v.n;
  p.parity = (v.n % 2 == 1) ? Parity::odd : Parity::even;
  p.root = v.root;
  p.coeffs = autocorr_to_alpha(autocorr(v.z));
  p.j = (p.parity == Parity::odd) ? upper_bound(v.n)
                                  : 0.25 / (v.root * v.root);
  if (std::abs(p.coeffs.front() - 1.0) > 1e-12) {
    throw NumericError("extremal_from_vector: alpha_1 drifted from 1");
  }
  return p;
}

}  // namespace detail

/// Extremal polynomial of degree n, through the principal vector of the
/// pencil: coefficients are autocorrelation quotients of the vector, which
/// is exactly the difference form alpha_k = (b_{k-1} - b_{k+1})/(b_0 - b_2).
inline ExtremalPolynomial compute_extremal(int n) {
  if (n < 1) throw std::invalid_argument("compute_extremal: need n >= 1");
  return detail::extremal_from_vector(n % 2 == 1 ? z_vector_mu(n)
                                                 : z_vector_nu(n));
}

/// Closed-form coefficients for odd n, bypassing the vector route:
///   alpha_k = (-1)^{k-1} U'_{n-k+1}(mu) U_{k-1}(mu) / U'_n(mu)
/// at mu = sin(pi / (2 (n+2))). Agrees with compute_extremal to rounding.
inline std::vector<double> closed_form_coeffs_odd(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("closed_form_coeffs_odd: need odd n >= 1");
  }
  const ChebPoint p =
      ChebPoint::from_theta((n + 1) * std::numbers::pi / (2.0 * (n + 2)));
  const double denom = u_deriv_eval(n, p);
  std::vector<double> alpha(n);
  for (int k = 1; k <= n; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    alpha[k - 1] = sign * u_deriv_eval(n - k + 1, p) * u_eval(k - 1, p) / denom;
  }
  return alpha;
}

/// The companion extremal polynomial -F(-z): flips the sign of every even
/// coefficient. An involution; j, root and parity are untouched.
inline ExtremalPolynomial mirror(const ExtremalPolynomial& p) {
  ExtremalPolynomial q = p;
  for (int k = 2; k <= q.n; k += 2) q.coeffs[k - 1] = -q.coeffs[k - 1];
  return q;
}

/// Horner evaluation of sum_k coeffs[k-1] z^k (no constant term).
inline std::complex<double> eval_poly(const std::vector<double>& coeffs,
                                      std::complex<double> z) {
  if (coeffs.empty()) throw std::invalid_argument("eval_poly: empty coeffs");
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = z * (*it + acc);
  }
  return acc;
}

/// Rational form of the odd-degree extremal polynomial: with
/// K(z) = z / (z^2 + 1 - 2 z cos(pi/(n+2))),
///
///   F(z) = K(z) - (4 cos^2(pi/(2(n+2))) / (n+2))
///          * (1 + z^{n+2}) * ((1 - z)/(1 + z)) * K(z)^2.
///
/// Restricted to |z| <= 0.95 and |1 + z| >= 0.05 to keep both denominators
/// comfortably away from their singularities.
inline std::complex<double> brandt_eval(int n, std::complex<double> z) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("brandt_eval: need odd n >= 1");
  }
  if (std::abs(z) > 0.95) {
    throw std::domain_error("brandt_eval: need |z| <= 0.95");
  }
  if (std::abs(1.0 + z) < 0.05) {
    throw std::domain_error("brandt_eval: need |1 + z| >= 0.05");
  }
  const double c = std::cos(std::numbers::pi / (n + 2));
  const double h = std::cos(std::numbers::pi / (2.0 * (n + 2)));
  const std::complex<double> k = z / (z * z + 1.0 - 2.0 * c * z);
  std::complex<double> zpow(1.0, 0.0);  // z^{n+2}, well-defined at z = 0
  for (int i = 0; i < n + 2; ++i) zpow *= z;
  return k - (4.0 * h * h / (n + 2)) * (1.0 + zpow) *
                 ((1.0 - z) / (1.0 + z)) * k * k;
}

struct CurveSample {
  double t = 0.0;
  double re = 0.0;
  double im = 0.0;
};

/// Boundary curve t -> F(e^{it}) sampled at m uniform angles on [0, pi].
inline std::vector<CurveSample> curve_samples(const std::vector<double>& coeffs,
                                              int m) {
  if (m < 2) throw std::invalid_argument("curve_samples: need m >= 2");
  std::vector<CurveSample> samples;
  samples.reserve(m);
  for (int i = 0; i < m; ++i) {
    const double t = i * std::numbers::pi / (m - 1);
    const std::complex<double> w = eval_poly(coeffs, std::polar(1.0, t));
    samples.push_back({t, w.real(), w.imag()});
  }
  return samples;
}

}  // namespace typreal
