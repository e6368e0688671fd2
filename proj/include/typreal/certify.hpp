#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "typreal/errors.hpp"

namespace typreal {

namespace detail {

// Imaginary part of sum_j c_j w^j at w = e^{it}, i.e. sum_j c_j sin(j t),
// by complex Horner. Exact zero at t = 0.
inline double sine_sum(const std::vector<double>& c, double t) {
  const std::complex<double> w = std::polar(1.0, t);
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = w * (*it + acc);
  return acc.imag();
}

}  // namespace detail

/// Autocorrelation of a real vector: b_m = sum_j z_j z_{j+m}, m = 0..N-1.
inline std::vector<double> autocorr(const std::vector<double>& z) {
  if (z.empty()) throw std::invalid_argument("autocorr: empty input");
  const int n = static_cast<int>(z.size());
  std::vector<double> b(n, 0.0);
  for (int m = 0; m < n; ++m) {
    double sum = 0.0;
    for (int j = 0; j + m < n; ++j) sum += z[j] * z[j + m];
    b[m] = sum;
  }
  return b;
}

/// Coefficients from autocorrelations: alpha_k = (b_{k-1} - b_{k+1}) / (b_0 -
/// b_2) with b_N = b_{N+1} = 0, so alpha_1 = 1 bit-exactly and the small
/// degrees need no special casing.
inline std::vector<double> autocorr_to_alpha(const std::vector<double>& b) {
  if (b.empty()) throw std::invalid_argument("autocorr_to_alpha: empty input");
  const int n = static_cast<int>(b.size());
  const auto at = [&](int i) { return i < n ? b[i] : 0.0; };
  const double scale = at(0) - at(2);
  if (!(scale > 0.0)) {
    throw std::domain_error("autocorr_to_alpha: need b_0 - b_2 > 0");
  }
  std::vector<double> alpha(n);
  for (int k = 1; k <= n; ++k) alpha[k - 1] = (at(k - 1) - at(k + 1)) / scale;
  return alpha;
}

/// Inverse of autocorr_to_alpha on the normalized slice (alpha_1 = 1): back
/// substitution b_{N-1} = alpha_N, b_{N-2} = alpha_{N-1},
/// b_j = alpha_{j+1} + b_{j+2}, which forces b_0 - b_2 = 1.
inline std::vector<double> alpha_to_autocorr(const std::vector<double>& alpha) {
  if (alpha.empty()) throw std::invalid_argument("alpha_to_autocorr: empty input");
  if (std::abs(alpha.front() - 1.0) > 1e-10) {
    throw std::invalid_argument("alpha_to_autocorr: need alpha_1 = 1");
  }
  const int n = static_cast<int>(alpha.size());
  std::vector<double> b(n, 0.0);
  b[n - 1] = alpha[n - 1];
  if (n >= 2) b[n - 2] = alpha[n - 2];
  for (int j = n - 3; j >= 0; --j) b[j] = alpha[j] + b[j + 2];
  return b;
}

/// Nonnegativity certificate for the sine polynomial sum alpha_k sin(k t):
/// a spectral factor z whose autocorrelations b satisfy
///   (b_0 - b_2) * sum_k alpha_k sin(k t) = sin(t) * |sum_j z_j e^{i(j-1)t}|^2.
struct AutocorrCertificate {
  int n = 0;
  std::vector<double> factor;  // z_1..z_N
  std::vector<double> b;       // autocorrelations of the factor
  double scale = 0.0;          // b_0 - b_2
};

inline AutocorrCertificate make_certificate(const std::vector<double>& factor) {
  if (factor.empty()) {
    throw std::invalid_argument("make_certificate: empty factor");
  }
  AutocorrCertificate c;
  c.n = static_cast<int>(factor.size());
  c.factor = factor;
  c.b = autocorr(factor);
  c.scale = c.b[0] - (c.n > 2 ? c.b[2] : 0.0);
  if (!(c.scale > 0.0)) {
    throw NumericError("make_certificate: factor has b_0 - b_2 <= 0");
  }
  return c;
}

/// Worst absolute deviation of the certificate identity over the m-point
/// uniform grid t_i = i pi / (m-1) on [0, pi].
inline double sos_residual(const std::vector<double>& alpha,
                           const std::vector<double>& z, int m) {
  if (alpha.size() != z.size() || alpha.empty()) {
    throw std::invalid_argument("sos_residual: length mismatch");
  }
  if (m < 2) throw std::invalid_argument("sos_residual: need m >= 2");
  const AutocorrCertificate c = make_certificate(z);
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    const double t = i * std::numbers::pi / (m - 1);
    const std::complex<double> w = std::polar(1.0, t);
    std::complex<double> p(0.0, 0.0);  // sum_j z_j w^{j-1}
    for (auto it = z.rbegin(); it != z.rend(); ++it) p = w * p + *it;
    const double lhs = c.scale * detail::sine_sum(alpha, t);
    const double rhs = std::sin(t) * std::norm(p);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

/// Minimum of sum alpha_k sin(k t) over the same uniform [0, pi] grid.
inline double grid_min(const std::vector<double>& alpha, int m) {
  if (alpha.empty()) throw std::invalid_argument("grid_min: empty input");
  if (m < 2) throw std::invalid_argument("grid_min: need m >= 2");
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    const double t = i * std::numbers::pi / (m - 1);
    best = std::min(best, detail::sine_sum(alpha, t));
  }
  return best;
}

}  // namespace typreal
