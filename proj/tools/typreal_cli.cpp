// Command-line front end: compute / certify / curve / sweep / spectrum.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 certification failure,
// 3 numeric failure.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "typreal/report.hpp"

namespace {

// Writes exactly `text` to stdout or to --out (binary mode, so reruns are
// byte-identical on every platform).
int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::FILE* f = std::fopen(out_path.c_str(), "wb");
  if (f == nullptr) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return 1;
  }
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
  return 0;
}

struct Options {
  int n = 1;
  int from = 1;
  int to = 1;
  int samples = 1024;
  std::string format = "json";
  std::string out;
};

int run_compute(const Options& o) {
  const typreal::RunReport r = typreal::make_run_report(o.n);
  return emit(o.format == "csv" ? typreal::to_csv(r) : typreal::to_json(r),
              o.out);
}

int run_certify(const Options& o) {
  const typreal::RunReport r = typreal::make_run_report(o.n);
  const std::string text =
      o.format == "csv" ? typreal::certify_csv(r) : typreal::certify_json(r);
  const int rc = emit(text, o.out);
  if (rc != 0) return rc;
  return r.certified ? 0 : 2;
}

int run_curve(const Options& o) {
  const typreal::ExtremalPolynomial p = typreal::compute_extremal(o.n);
  return emit(typreal::curve_csv(typreal::curve_samples(p.coeffs, o.samples)),
              o.out);
}

int run_sweep(const Options& o) {
  if (o.from > o.to) {
    std::cerr << "error: need --from <= --to\n";
    return 1;
  }
  std::vector<typreal::SweepRow> rows;
  rows.reserve(o.to - o.from + 1);
  for (int n = o.from; n <= o.to; ++n) rows.push_back(typreal::make_sweep_row(n));
  return emit(o.format == "csv" ? typreal::sweep_csv(rows)
                                : typreal::sweep_json(rows),
              o.out);
}

int run_spectrum(const Options& o) {
  const typreal::Spectrum s = typreal::characteristic_numbers(o.n);
  return emit(o.format == "csv" ? typreal::spectrum_csv(s)
                                : typreal::spectrum_json(s),
              o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal typically real polynomials on the unit disk"};
  app.require_subcommand(1);

  Options o;
  const auto format_check = CLI::IsMember({"json", "csv"});

  CLI::App* compute = app.add_subcommand(
      "compute", "Coefficients, extremal value and certificate for one degree");
  compute->add_option("--n", o.n, "degree")->required()->check(CLI::Range(1, 10000));
  compute->add_option("--format", o.format, "json or csv")->check(format_check);
  compute->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* certify = app.add_subcommand(
      "certify", "Certificate residuals only; exit 2 if certification fails");
  certify->add_option("--n", o.n, "degree")->required()->check(CLI::Range(1, 10000));
  certify->add_option("--format", o.format, "json or csv")->check(format_check);
  certify->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* curve = app.add_subcommand(
      "curve", "Boundary curve samples t,re,im over [0, pi] (CSV)");
  curve->add_option("--n", o.n, "degree")->required()->check(CLI::Range(1, 10000));
  curve->add_option("--samples", o.samples, "sample count (default 1024)")
      ->check(CLI::Range(2, 100000000));
  curve->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Extremal value vs. bound for a range of degrees");
  sweep->add_option("--from", o.from, "first degree")->required()->check(CLI::Range(1, 2000));
  sweep->add_option("--to", o.to, "last degree")->required()->check(CLI::Range(1, 2000));
  sweep->add_option("--format", o.format, "json or csv")->check(format_check);
  sweep->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "All characteristic numbers of the degree-n pencil");
  spectrum->add_option("--n", o.n, "degree")->required()->check(CLI::Range(1, 2000));
  spectrum->add_option("--format", o.format, "json or csv")->check(format_check);
  spectrum->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(compute)) return run_compute(o);
    if (app.got_subcommand(certify)) return run_certify(o);
    if (app.got_subcommand(curve)) return run_curve(o);
    if (app.got_subcommand(sweep)) return run_sweep(o);
    if (app.got_subcommand(spectrum)) return run_spectrum(o);
  } catch (const typreal::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
