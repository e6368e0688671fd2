#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "typreal/certify.hpp"
#include "typreal/extremal.hpp"
#include "typreal/pencil.hpp"
#include "typreal/spectra.hpp"

namespace typreal {

/// %.17g: shortest fixed/scientific form with 17 significant digits, enough
/// to round-trip any double; lowercase-e, locale-independent digits.
inline std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Everything one pipeline run exports for a single degree.
struct RunReport {
  int n = 0;
  Parity parity = Parity::odd;
  RootKind root_kind = RootKind::mu;
  double root = 0.0;
  double j = 0.0;
  double bound = 0.0;
  std::vector<double> coeffs;
  bool certified = false;
  double grid_min = 0.0;
  double sos_residual = 0.0;
};

inline constexpr int kSosGrid = 4096;
inline constexpr int kMinGrid = 100001;

/// Run the full pipeline for degree n: principal vector, coefficients,
/// certificate residual on the sos grid, sine-polynomial minimum on the
/// fine grid, and the certification verdict
///   certified = sos_residual <= 1e-9 * j  &&  grid_min >= -1e-9.
inline RunReport make_run_report(int n, int sos_grid = kSosGrid,
                                 int min_grid = kMinGrid) {
  if (n < 1) throw std::invalid_argument("make_run_report: need n >= 1");
  const PrincipalVector v = (n % 2 == 1) ? z_vector_mu(n) : z_vector_nu(n);
  const ExtremalPolynomial p = detail::extremal_from_vector(v);
  RunReport r;
  r.n = n;
  r.parity = p.parity;
  r.root_kind = (p.parity == Parity::odd) ? RootKind::mu : RootKind::nu;
  r.root = p.root;
  r.j = p.j;
  r.bound = upper_bound(n);
  r.coeffs = p.coeffs;
  r.grid_min = grid_min(p.coeffs, min_grid);
  r.sos_residual = sos_residual(p.coeffs, v.z, sos_grid);
  r.certified = r.sos_residual <= 1e-9 * r.j && r.grid_min >= -1e-9;
  return r;
}

namespace detail {

inline std::string join17(const std::vector<double>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += sep;
    s += fmt17(v[i]);
  }
  return s;
}

}  // namespace detail

inline std::string to_json(const RunReport& r) {
  std::string s = "{\"n\":" + std::to_string(r.n);
  s += ",\"parity\":\"" + std::string(to_string(r.parity)) + "\"";
  s += ",\"root_kind\":\"" + std::string(to_string(r.root_kind)) + "\"";
  s += ",\"root\":" + fmt17(r.root);
  s += ",\"j\":" + fmt17(r.j);
  s += ",\"bound\":" + fmt17(r.bound);
  s += ",\"coeffs\":[" + detail::join17(r.coeffs, ',') + "]";
  s += ",\"certified\":";
  s += r.certified ? "true" : "false";
  s += ",\"grid_min\":" + fmt17(r.grid_min);
  s += ",\"sos_residual\":" + fmt17(r.sos_residual);
  s += "}\n";
  return s;
}

inline std::string to_csv(const RunReport& r) {
  std::string head = "n,parity,root_kind,root,j,bound";
  for (int k = 1; k <= r.n; ++k) head += ",alpha_" + std::to_string(k);
  head += ",certified,grid_min,sos_residual";
  std::string row = std::to_string(r.n);
  row += ",";
  row += to_string(r.parity);
  row += ",";
  row += to_string(r.root_kind);
  row += "," + fmt17(r.root) + "," + fmt17(r.j) + "," + fmt17(r.bound);
  row += "," + detail::join17(r.coeffs, ',');
  row += r.certified ? ",true" : ",false";
  row += "," + fmt17(r.grid_min) + "," + fmt17(r.sos_residual);
  return head + "\n" + row + "\n";
}

/// The certify view: just the verdict and the two residual numbers.
inline std::string certify_json(const RunReport& r) {
  std::string s = "{\"n\":" + std::to_string(r.n);
  s += ",\"j\":" + fmt17(r.j);
  s += ",\"grid_min\":" + fmt17(r.grid_min);
  s += ",\"sos_residual\":" + fmt17(r.sos_residual);
  s += ",\"certified\":";
  s += r.certified ? "true" : "false";
  s += "}\n";
  return s;
}

inline std::string certify_csv(const RunReport& r) {
  std::string s = "n,j,grid_min,sos_residual,certified\n";
  s += std::to_string(r.n);
  s += "," + fmt17(r.j) + "," + fmt17(r.grid_min) + "," + fmt17(r.sos_residual);
  s += r.certified ? ",true" : ",false";
  s += "\n";
  return s;
}

inline std::string curve_csv(const std::vector<CurveSample>& samples) {
  std::string s = "t,re,im\n";
  for (const CurveSample& c : samples) {
    s += fmt17(c.t) + "," + fmt17(c.re) + "," + fmt17(c.im) + "\n";
  }
  return s;
}

struct SweepRow {
  int n = 0;
  double root = 0.0;
  double j = 0.0;
  double bound = 0.0;
  double gap = 0.0;  // bound - j; zero (to rounding) exactly when n is odd
};

inline SweepRow make_sweep_row(int n) {
  ExtremalPolynomial p = compute_extremal(n);
  return {n, p.root, p.j, upper_bound(n), upper_bound(n) - p.j};
}

inline std::string sweep_json(const std::vector<SweepRow>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) s += ",";
    s += "{\"n\":" + std::to_string(rows[i].n);
    s += ",\"root\":" + fmt17(rows[i].root);
    s += ",\"j\":" + fmt17(rows[i].j);
    s += ",\"bound\":" + fmt17(rows[i].bound);
    s += ",\"gap\":" + fmt17(rows[i].gap) + "}";
  }
  s += "]\n";
  return s;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string s = "n,root,j,bound,gap\n";
  for (const SweepRow& r : rows) {
    s += std::to_string(r.n);
    s += "," + fmt17(r.root) + "," + fmt17(r.j) + "," + fmt17(r.bound) + "," +
         fmt17(r.gap) + "\n";
  }
  return s;
}

inline std::string spectrum_json(const Spectrum& s) {
  std::string out = "{\"n\":" + std::to_string(s.n);
  out += ",\"mu\":[" + detail::join17(s.mu, ',') + "]";
  out += ",\"nu\":[" + detail::join17(s.nu, ',') + "]";
  out += ",\"lambdas\":[";
  for (std::size_t i = 0; i < s.lambdas.size(); ++i) {
    if (i > 0) out += ",";
    out += "{\"lambda\":" + fmt17(s.lambdas[i].lambda);
    out += ",\"kind\":\"" + std::string(to_string(s.lambdas[i].kind)) + "\"";
    out += ",\"root\":" + fmt17(s.lambdas[i].root) + "}";
  }
  out += "]}\n";
  return out;
}

inline std::string spectrum_csv(const Spectrum& s) {
  std::string out = "lambda,kind,root\n";
  for (const CharacteristicNumber& c : s.lambdas) {
    out += fmt17(c.lambda);
    out += ",";
    out += to_string(c.kind);
    out += "," + fmt17(c.root) + "\n";
  }
  return out;
}

}  // namespace typreal
