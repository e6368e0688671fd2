#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "typreal/cheb.hpp"
#include "typreal/errors.hpp"
#include "typreal/spectra.hpp"

namespace typreal {

/// The structured pair behind the pencil (I + A) - lambda (I - B): A has 1/2
/// exactly on the first off-diagonals, B exactly on the second, both N x N.
struct PencilMatrices {
  int n = 0;
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
};

inline PencilMatrices build_pencil(int n) {
  if (n < 1) throw std::invalid_argument("build_pencil: need n >= 1");
  PencilMatrices m;
  m.n = n;
  m.a = Eigen::MatrixXd::Zero(n, n);
  m.b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) m.a(i, i + 1) = m.a(i + 1, i) = 0.5;
  for (int i = 0; i + 2 < n; ++i) m.b(i, i + 2) = m.b(i + 2, i) = 0.5;
  return m;
}

/// det(4 x^2 (I + A) - (I - B)) via dense LU with partial pivoting. This is
/// deliberately the brute-force route; the trigonometric closed form
/// U_{n+1}(x) U'_{n+1}(x) / (2^{n+2} x) it must match lives in the tests.
inline double det_pencil(double x, int n) {
  if (n < 1) throw std::invalid_argument("det_pencil: need n >= 1");
  const PencilMatrices m = build_pencil(n);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd pencil = 4.0 * x * x * (id + m.a) - (id - m.b);
  return Eigen::PartialPivLU<Eigen::MatrixXd>(pencil).determinant();
}

/// An eigenvector of the pencil at lambda = 1/(4 root^2), in the coordinate
/// normalization produced by the closed forms below (not unit norm).
struct PrincipalVector {
  int n = 0;
  int s = 0;          // 0: mu branch (odd n), 1: nu branch (even n)
  double root = 0.0;  // the mu or nu the vector is evaluated at
  std::vector<double> z;
};

/// The nu-branch coordinate profile as a function of an arbitrary point x:
///
///   z_k = (-1)^{k-1} ( U_{k-1} U_k - U_{N-k} U_{N-k+1}
///                      + ((N+1-2k)/(N+1)) U_N U_{N+1} )    (all at x).
///
/// The interior rows of the pencil annihilate this profile identically in
/// x; the boundary rows vanish exactly at the zeros of U'_{N+1}.
inline std::vector<double> z_profile(int n, const ChebPoint& p) {
  if (n < 1) throw std::invalid_argument("z_profile: need n >= 1");
  std::vector<double> z(n);
  const double un = u_eval(n, p);
  const double un1 = u_eval(n + 1, p);
  for (int k = 1; k <= n; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    const double mix = static_cast<double>(n + 1 - 2 * k) / (n + 1);
    z[k - 1] = sign * (u_eval(k - 1, p) * u_eval(k, p) -
                       u_eval(n - k, p) * u_eval(n - k + 1, p) +
                       mix * un * un1);
  }
  return z;
}

/// Principal vector for odd n, at the smallest positive root
/// mu = sin(pi / (2 (n+2))) (hence the largest lambda): the product form
///
///   z_k = (-1)^{k-1} U_{k-1}(mu) U_k(mu),
///
/// whose coordinates are all positive at this particular mu.
inline PrincipalVector z_vector_mu(int n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("z_vector_mu: need odd n >= 1");
  }
  const ChebPoint p =
      ChebPoint::from_theta((n + 1) * std::numbers::pi / (2.0 * (n + 2)));
  PrincipalVector v;
  v.n = n;
  v.s = 0;
  v.root = p.x();
  v.z.resize(n);
  for (int k = 1; k <= n; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    v.z[k - 1] = sign * u_eval(k - 1, p) * u_eval(k, p);
  }
  return v;
}

/// Principal vector for even n, at the least positive zero of U'_{n+1}.
inline PrincipalVector z_vector_nu(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("z_vector_nu: need even n >= 2");
  }
  const double root = nu_least(n);
  PrincipalVector v;
  v.n = n;
  v.s = 1;
  v.root = root;
  v.z = z_profile(n, ChebPoint::from_x(root));
  return v;
}

/// Scaled eigen-residual  ||(I+A) z - lambda (I-B) z||_inf / ||z||_inf.
inline double pencil_residual(const PencilMatrices& m, double lambda,
                              const std::vector<double>& z) {
  if (static_cast<int>(z.size()) != m.n) {
    throw std::invalid_argument("pencil_residual: dimension mismatch");
  }
  const Eigen::Map<const Eigen::VectorXd> zv(z.data(), z.size());
  const double zmax = zv.cwiseAbs().maxCoeff();
  if (zmax == 0.0) throw std::invalid_argument("pencil_residual: zero vector");
  const Eigen::VectorXd r = (zv + m.a * zv) - lambda * (zv - m.b * zv);
  return r.cwiseAbs().maxCoeff() / zmax;
}

}  // namespace typreal
