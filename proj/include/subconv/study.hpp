#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "subconv/set_function.hpp"

namespace subconv {

// ---------------------------------------------------------------------------
// Runtime benchmark across engines.
// ---------------------------------------------------------------------------

// The naive engine is skipped (with a warning) above this size.
inline constexpr int kNaiveBenchCap = 20;

// CSV schema v1.
inline constexpr std::string_view kBenchCsvHeader = "algo,n,trial,seed,wall_time_ns";

struct BenchConfig {
  int n_min = 10;
  int n_max = 12;
  std::vector<std::string> algos = {"naive", "zeta", "fft"};
  int trials = 3;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::string algo;
  int n = 0;
  int trial = 0;
  std::uint64_t instance_seed = 0;
  std::int64_t wall_time_ns = 0;
};

// For each (algo, n, trial) runs the engine on a seeded random double
// instance (unit value bound). Instances depend only on (seed, n, trial),
// so every engine sees the same inputs and re-runs regenerate them
// identically. Rows come back sorted by (algo, n, trial).
std::vector<BenchRow> run_bench(const BenchConfig& config, std::vector<std::string>* warnings);

void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows);

// ---------------------------------------------------------------------------
// Precision study: engine error against an exact reference.
// ---------------------------------------------------------------------------

// CSV schema v1.
inline constexpr std::string_view kPrecisionCsvHeader =
    "engine,n,trial,seed,max_abs_err,max_rel_err,max_intermediate_magnitude,wall_time_ns";

struct PrecisionConfig {
  int n = 12;
  int magnitude_exponent = 6;
  int trials = 20;
  std::uint64_t seed = 1;
};

struct PrecisionRow {
  std::string engine;
  int n = 0;
  int trial = 0;
  std::uint64_t instance_seed = 0;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double max_intermediate_magnitude = 0.0;
  std::int64_t wall_time_ns = 0;
};

// A generated instance pair after quantization, plus its exact reference.
struct PrecisionInstance {
  SetFunction<double> f;
  SetFunction<double> g;
  SetFunction<double> reference;
  std::uint64_t seed = 0;
};

// Builds the trial's instance: values with log-uniform magnitudes up to
// 10^±magnitude_exponent and random signs. For n <= 14 the values are
// snapped to a power-of-two grid fine enough that the exact-integer naive
// engine can evaluate the convolution of the very same inputs; the
// reference is then exact. Above that the reference falls back to a
// compensated-summation naive evaluation (error-free products via fma,
// Neumaier accumulation).
PrecisionInstance make_precision_instance(const PrecisionConfig& config, int trial);

// Two rows per trial (zeta and fft engines), sorted by (engine, n, trial).
std::vector<PrecisionRow> run_precision(const PrecisionConfig& config);

void write_precision_csv(const std::filesystem::path& path, const std::vector<PrecisionRow>& rows);

}  // namespace subconv
