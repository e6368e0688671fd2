// Acceptance gate: one test per criterion, each printing a single
// "[acceptance] criterion k (...): PASS|FAIL" line so the verdicts can be
// read off the log without digging through assertion output.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "cli_helpers.hpp"
#include "gtest/gtest.h"
#include "lcg.hpp"
#include "typreal/report.hpp"

namespace {

using typreal::ChebPoint;
using typreal::compute_extremal;
using typreal::det_pencil;
using typreal::ExtremalPolynomial;
using typreal::grid_min;
using typreal::j_value;
using typreal::nu_least;
using typreal::pencil_residual;
using typreal::sos_residual;
using typreal::u_deriv_eval;
using typreal::u_eval;
using typreal::upper_bound;
using typreal::z_vector_mu;
using typreal::z_vector_nu;

constexpr double kPi = std::numbers::pi;

void announce(int index, const char* label) {
  std::printf("[acceptance] criterion %d (%s): %s\n", index, label,
              ::testing::Test::HasFailure() ? "FAIL" : "PASS");
  std::fflush(stdout);
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

TEST(Acceptance, C1PublishedCoefficientValues) {
  const ExtremalPolynomial six = compute_extremal(6);
  const double a6[] = {1.36252, 1.55595, 1.22943, 0.84332, 0.37361};
  for (int k = 2; k <= 6; ++k) {
    EXPECT_NEAR(six.coeffs[k - 1], a6[k - 2], 1e-5) << "degree 6, alpha_" << k;
  }
  const ExtremalPolynomial seven = compute_extremal(7);
  const double b7[] = {1.44834, 1.77398, 1.55232, 1.32706, 0.75810, 0.43104};
  for (int k = 2; k <= 7; ++k) {
    EXPECT_NEAR(seven.coeffs[k - 1], b7[k - 2], 1e-5)
        << "degree 7, alpha_" << k;
  }
  announce(1, "published coefficient values");
}

TEST(Acceptance, C2PublishedScalarValues) {
  EXPECT_NEAR(nu_least(6), 0.19818, 1e-5);
  const double mu7 = z_vector_mu(7).root;
  EXPECT_NEAR(mu7, 0.17364, 1e-5);
  EXPECT_NEAR(mu7, std::sin(kPi / 18.0), 1e-15);
  EXPECT_NEAR(j_value(6), 6.36485, 1e-5);
  EXPECT_NEAR(j_value(7), 8.29085, 1e-5);
  announce(2, "published scalar values");
}

TEST(Acceptance, C3BoundAttainmentLaw) {
  std::vector<int> gap_violations;
  for (int n = 1; n <= 200; ++n) {
    const double j = j_value(n);
    const double bound = upper_bound(n);
    EXPECT_LE(j, bound * (1.0 + 1e-12)) << "n=" << n;
    if (n % 2 == 1) {
      EXPECT_NEAR(j, bound, 1e-10 * bound) << "n=" << n;
    } else if (!(bound - j > 1e-4 * bound)) {
      gap_violations.push_back(n);
    }
  }
  EXPECT_TRUE(gap_violations.empty())
      << "even-degree gap at or below 1e-4 * bound for n = "
      << join_ints(gap_violations)
      << "; the gap decays like c/n and crosses that threshold near n = 140, "
         "so no correct implementation can keep it above 1e-4 * bound "
         "through n = 200";
  announce(3, "bound attainment law");
}

TEST(Acceptance, C4DeterminantIdentity) {
  Lcg rng;
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const double x = rng.uniform(0.05, 0.95);
      const ChebPoint p = ChebPoint::from_x(x);
      const double closed = u_eval(n + 1, p) * u_deriv_eval(n + 1, p) /
                            (std::ldexp(1.0, n + 2) * x);
      EXPECT_NEAR(det_pencil(x, n), closed, 1e-8 * (1.0 + std::abs(closed)))
          << "n=" << n << " x=" << x;
    }
  }
  announce(4, "determinant identity");
}

TEST(Acceptance, C5PencilEigenResiduals) {
  for (int n = 1; n <= 100; ++n) {
    const typreal::PrincipalVector v =
        n % 2 == 1 ? z_vector_mu(n) : z_vector_nu(n);
    const double lambda = 0.25 / (v.root * v.root);
    EXPECT_LE(pencil_residual(typreal::build_pencil(n), lambda, v.z), 1e-9)
        << "n=" << n;
  }
  announce(5, "pencil eigen-residuals");
}

TEST(Acceptance, C6PathAgreement) {
  for (int n = 1; n <= 99; n += 2) {
    const std::vector<double> direct = typreal::closed_form_coeffs_odd(n);
    const std::vector<double> viaVector = compute_extremal(n).coeffs;
    for (int k = 0; k < n; ++k) {
      EXPECT_NEAR(direct[k], viaVector[k], 1e-9) << "n=" << n << " k=" << k + 1;
    }
  }
  Lcg rng;
  for (int n = 3; n <= 25; n += 2) {
    const std::vector<double> alpha = typreal::closed_form_coeffs_odd(n);
    for (int trial = 0; trial < 100; ++trial) {
      const std::complex<double> z = rng.disk(0.9);
      const std::complex<double> f = typreal::brandt_eval(n, z);
      EXPECT_LE(std::abs(f - typreal::eval_poly(alpha, z)),
                1e-8 * (1.0 + std::abs(f)))
          << "n=" << n << " z=" << z;
    }
  }
  announce(6, "path agreement");
}

TEST(Acceptance, C7FeasibilityAndCertificate) {
  for (int n = 1; n <= 100; ++n) {
    const typreal::PrincipalVector v =
        n % 2 == 1 ? z_vector_mu(n) : z_vector_nu(n);
    const ExtremalPolynomial p = compute_extremal(n);
    EXPECT_GE(grid_min(p.coeffs, 100001), -1e-9) << "n=" << n;
    EXPECT_LE(sos_residual(p.coeffs, v.z, 4096), 1e-9 * p.j) << "n=" << n;
  }
  for (int n = 2; n <= 200; n += 2) {
    const typreal::PrincipalVector v = z_vector_nu(n);
    double zmax = 0.0;
    for (double zk : v.z) zmax = std::max(zmax, std::abs(zk));
    for (int k = 1; k <= n / 2; ++k) {
      EXPECT_NEAR(v.z[k - 1], v.z[n - k], 1e-10 * zmax)
          << "n=" << n << " k=" << k;
      EXPECT_GT(v.z[k - 1], 0.0) << "n=" << n << " k=" << k;
      if (k >= 2) EXPECT_GT(v.z[k - 1], v.z[k - 2]) << "n=" << n << " k=" << k;
    }
  }
  announce(7, "feasibility and certificate");
}

TEST(Acceptance, C8HandDerivedSmallCases) {
  const ExtremalPolynomial one = compute_extremal(1);
  EXPECT_NEAR(one.coeffs[0], 1.0, 1e-6);
  EXPECT_NEAR(one.j, 1.0, 1e-6);

  const ExtremalPolynomial two = compute_extremal(2);
  EXPECT_NEAR(two.coeffs[0], 1.0, 1e-6);
  EXPECT_NEAR(two.coeffs[1], 0.5, 1e-6);
  EXPECT_NEAR(two.j, 1.5, 1e-6);
  EXPECT_NEAR(two.root, 1.0 / std::sqrt(6.0), 1e-6);

  const ExtremalPolynomial three = compute_extremal(3);
  EXPECT_NEAR(three.coeffs[0], 1.0, 1e-6);
  EXPECT_NEAR(three.coeffs[1], 0.894427, 1e-6);
  EXPECT_NEAR(three.coeffs[2], 0.723607, 1e-6);
  EXPECT_NEAR(three.j, 2.618034, 1e-6);
  const double s10 = std::sin(kPi / 10.0);
  EXPECT_NEAR(three.j, 0.25 / (s10 * s10), 1e-6);
  announce(8, "hand-derived small cases");
}

TEST(Acceptance, C9CommandLineStability) {
  const char* cases[] = {"compute --n 6",
                         "compute --n 7 --format csv",
                         "certify --n 6",
                         "certify --n 7",
                         "curve --n 6 --samples 64",
                         "curve --n 7 --samples 3",
                         "sweep --from 6 --to 7",
                         "spectrum --n 6",
                         "spectrum --n 7"};
  for (const char* args : cases) {
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(b.status, 0) << args;
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
  EXPECT_EQ(run_cli("compute --n 0").status, 1);

  const auto start = std::chrono::steady_clock::now();
  const RunResult sweep = run_cli("sweep --from 1 --to 200");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  EXPECT_EQ(sweep.status, 0);
  EXPECT_LT(seconds, 10.0);
  announce(9, "command-line stability");
}

}  // namespace
