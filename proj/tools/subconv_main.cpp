// Command-line front end: file-based convolution, built-in property suites,
// runtime benchmarking across engines, and the floating-point precision
// study.
//
// Exit codes: 0 success, 1 parse/dimension/I-O errors, 2 rounding-unsafe.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subconv/convolution.hpp"
#include "subconv/fft.hpp"
#include "subconv/io.hpp"
#include "subconv/selftest.hpp"
#include "subconv/study.hpp"

namespace {

using subconv::RunReport;
using subconv::ScalarKind;
using subconv::SetFunction;
using subconv::SetFunctionVariant;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRoundingUnsafe = 2;

std::int64_t elapsed_ns(std::chrono::steady_clock::time_point from,
                        std::chrono::steady_clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count();
}

void print_report(const RunReport& report) {
  std::cerr << "report algo=" << report.algo << " n=" << report.n
            << " wall_time_ns=" << report.wall_time_ns;
  if (report.max_intermediate_magnitude > 0.0)
    std::cerr << " max_intermediate_magnitude=" << report.max_intermediate_magnitude;
  if (report.algo == "fft") std::cerr << " max_imag_residual=" << report.max_imag_residual;
  if (report.rounding_max_deviation)
    std::cerr << " rounding_max_deviation=" << *report.rounding_max_deviation;
  std::cerr << '\n';
}

struct ConvolveOptions {
  std::string f_path;
  std::string g_path;
  std::string algo = "naive";
  bool exact = false;
  std::string out_path;
};

int cmd_convolve(const ConvolveOptions& opt) {
  SetFunctionVariant f, g;
  try {
    f = subconv::load_set_function(opt.f_path);
    g = subconv::load_set_function(opt.g_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (subconv::ground_set_size(f) != subconv::ground_set_size(g)) {
    std::cerr << "error: dimension mismatch: n=" << subconv::ground_set_size(f) << " ("
              << opt.f_path << ") vs n=" << subconv::ground_set_size(g) << " (" << opt.g_path
              << ")\n";
    return kExitError;
  }

  RunReport report;
  report.algo = opt.algo;
  report.n = subconv::ground_set_size(f);
  SetFunctionVariant result;
  const bool both_int =
      subconv::kind_of(f) == ScalarKind::Int64 && subconv::kind_of(g) == ScalarKind::Int64;

  try {
    const auto start = std::chrono::steady_clock::now();
    if (opt.algo == "fft") {
      SetFunction<double> h = subconv::subset_convolve_fft(subconv::as_real(f),
                                                           subconv::as_real(g), &report);
      result = opt.exact ? SetFunctionVariant(subconv::round_to_integers(h, report))
                         : SetFunctionVariant(std::move(h));
    } else if (both_int) {
      const auto& fi = std::get<SetFunction<std::int64_t>>(f);
      const auto& gi = std::get<SetFunction<std::int64_t>>(g);
      result = opt.algo == "naive" ? subconv::subset_convolve_naive(fi, gi)
                                   : subconv::subset_convolve_zeta(fi, gi, &report);
    } else {
      SetFunction<double> h =
          opt.algo == "naive"
              ? subconv::subset_convolve_naive(subconv::as_real(f), subconv::as_real(g))
              : subconv::subset_convolve_zeta(subconv::as_real(f), subconv::as_real(g), &report);
      result = opt.exact ? SetFunctionVariant(subconv::round_to_integers(h, report))
                         : SetFunctionVariant(std::move(h));
    }
    report.wall_time_ns = elapsed_ns(start, std::chrono::steady_clock::now());
  } catch (const subconv::RoundingUnsafeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRoundingUnsafe;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    subconv::save_set_function(opt.out_path, result);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  print_report(report);
  return kExitOk;
}

int cmd_selftest() {
  const auto suites = subconv::run_selftest();
  std::uint64_t failed_suites = 0;
  for (const auto& suite : suites) {
    if (suite.passed()) {
      std::cout << "[PASS] " << suite.name << ": " << suite.checks << " checks\n";
    } else {
      std::cout << "[FAIL] " << suite.name << ": " << suite.failures << " of " << suite.checks
                << " checks failed\n";
      ++failed_suites;
    }
  }
  std::cout << (suites.size() - failed_suites) << "/" << suites.size() << " suites passed (fft backend: "
            << subconv::fft_backend_name() << ")\n";
  return failed_suites == 0 ? kExitOk : kExitError;
}

int cmd_bench(const subconv::BenchConfig& config, const std::string& csv_path) {
  try {
    std::vector<std::string> warnings;
    const auto rows = subconv::run_bench(config, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    subconv::write_bench_csv(csv_path, rows);
    std::cerr << rows.size() << " rows -> " << csv_path << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

int cmd_precision(const subconv::PrecisionConfig& config, const std::string& csv_path) {
  try {
    const auto rows = subconv::run_precision(config);
    subconv::write_precision_csv(csv_path, rows);
    std::cerr << rows.size() << " rows -> " << csv_path << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset convolution in the sum-product ring: naive, ranked zeta/Moebius, "
               "and transform-free FFT engines"};
  app.require_subcommand(1);

  ConvolveOptions conv;
  auto* convolve = app.add_subcommand("convolve", "Convolve two set-function files");
  convolve->add_option("--f", conv.f_path, "First input (JSON)")->required();
  convolve->add_option("--g", conv.g_path, "Second input (JSON)")->required();
  convolve->add_option("--algo", conv.algo, "Engine: naive|zeta|fft")
      ->check(CLI::IsMember({"naive", "zeta", "fft"}));
  convolve->add_flag("--exact", conv.exact,
                     "Round a floating-point result to exact integers; fails loudly when unsafe");
  convolve->add_option("--out", conv.out_path, "Output path (JSON)")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in property suites");

  subconv::BenchConfig bench;
  std::string bench_csv;
  auto* bench_cmd = app.add_subcommand("bench", "Time the engines on seeded random instances");
  bench_cmd->add_option("--n-min", bench.n_min, "Smallest ground-set size")->required();
  bench_cmd->add_option("--n-max", bench.n_max, "Largest ground-set size")->required();
  bench_cmd->add_option("--algos", bench.algos, "Engines to time")->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Trials per (engine, n)");
  bench_cmd->add_option("--seed", bench.seed, "Master seed for instance streams");
  bench_cmd->add_option("--csv", bench_csv, "Output CSV path")->required();

  subconv::PrecisionConfig prec;
  std::string prec_csv;
  auto* prec_cmd = app.add_subcommand(
      "precision", "Measure engine error against an exact reference on wide-magnitude inputs");
  prec_cmd->add_option("--n", prec.n, "Ground-set size")->required();
  prec_cmd->add_option("--mag", prec.magnitude_exponent,
                       "Magnitude exponent: values span 10^±mag");
  prec_cmd->add_option("--trials", prec.trials, "Instances to measure");
  prec_cmd->add_option("--seed", prec.seed, "Master seed for instance streams");
  prec_cmd->add_option("--csv", prec_csv, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (convolve->parsed()) return cmd_convolve(conv);
  if (selftest->parsed()) return cmd_selftest();
  if (bench_cmd->parsed()) return cmd_bench(bench, bench_csv);
  if (prec_cmd->parsed()) return cmd_precision(prec, prec_csv);
  return kExitError;
}
