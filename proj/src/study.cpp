#include "subconv/study.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <tuple>

#include "subconv/convolution.hpp"
#include "subconv/rng.hpp"

namespace subconv {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count();
}

void require_known_algos(const std::vector<std::string>& algos) {
  if (algos.empty()) throw std::invalid_argument("bench: no engines selected");
  for (const auto& a : algos)
    if (a != "naive" && a != "zeta" && a != "fft")
      throw std::invalid_argument("bench: unknown engine \"" + a + "\"");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Exact references for the precision study.
// ---------------------------------------------------------------------------

void neumaier_add(double& sum, double& compensation, double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x))
    compensation += (sum - t) + x;
  else
    compensation += (x - t) + sum;
  sum = t;
}

// O(3^n) evaluation with error-free products (fma) and compensated sums.
// Reference path for sizes where the exact-integer route is unavailable.
SetFunction<double> compensated_naive(const SetFunction<double>& f, const SetFunction<double>& g) {
  const std::uint64_t size = f.size();
  const double* fv = f.values().data();
  const double* gv = g.values().data();
  std::vector<double> out(size);
  for (std::uint64_t s = 0; s < size; ++s) {
    double sum = 0.0, comp = 0.0;
    std::uint64_t t = s;
    while (true) {
      const double a = fv[t], b = gv[s ^ t];
      const double hi = a * b;
      const double lo = std::fma(a, b, -hi);
      neumaier_add(sum, comp, hi);
      neumaier_add(sum, comp, lo);
      if (t == 0) break;
      t = (t - 1) & s;
    }
    out[s] = sum + comp;
  }
  return SetFunction<double>(f.n(), std::move(out));
}

double max_abs_value(const std::vector<double>& v) {
  double best = 0.0;
  for (const double x : v) best = std::max(best, std::abs(x));
  return best;
}

// Values with log-uniform magnitudes in [10^-mag, 10^mag] and random signs.
std::vector<double> wide_magnitude_values(std::uint64_t seed, int n, int magnitude_exponent) {
  SplitMix64 rng(seed);
  std::vector<double> out(std::uint64_t{1} << n);
  for (auto& v : out) {
    const double exponent = rng.next_symmetric(double(magnitude_exponent));
    const double sign = (rng.next() & 1) ? 1.0 : -1.0;
    v = sign * std::pow(10.0, exponent);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Benchmark
// ---------------------------------------------------------------------------

std::vector<BenchRow> run_bench(const BenchConfig& config, std::vector<std::string>* warnings) {
  require_known_algos(config.algos);
  if (config.n_min < 0 || config.n_max < config.n_min || config.n_max > max_ground_set_size())
    throw std::invalid_argument("bench: size range outside [0, " +
                                std::to_string(max_ground_set_size()) + "]");
  if (config.trials < 1) throw std::invalid_argument("bench: trials must be positive");

  std::vector<BenchRow> rows;
  bool warned_naive_cap = false;
  for (const auto& algo : config.algos) {
    for (int n = config.n_min; n <= config.n_max; ++n) {
      if (algo == "naive" && n > kNaiveBenchCap) {
        if (!warned_naive_cap && warnings != nullptr) {
          warnings->push_back("naive engine capped at n <= " + std::to_string(kNaiveBenchCap) +
                              "; skipping larger sizes");
          warned_naive_cap = true;
        }
        continue;
      }
      for (int trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t instance_seed = derive_seed(config.seed, std::uint64_t(n), trial);
        const auto f = random_instance<double>(n, instance_seed, 1.0);
        const auto g = random_instance<double>(n, mix64(instance_seed), 1.0);

        const auto start = Clock::now();
        if (algo == "naive") {
          (void)subset_convolve_naive(f, g);
        } else if (algo == "zeta") {
          (void)subset_convolve_zeta(f, g);
        } else {
          (void)subset_convolve_fft(f, g);
        }
        const auto stop = Clock::now();

        rows.push_back({algo, n, trial, instance_seed, elapsed_ns(start, stop)});
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.algo, a.n, a.trial) < std::tie(b.algo, b.n, b.trial);
  });
  return rows;
}

void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows)
    out << r.algo << ',' << r.n << ',' << r.trial << ',' << r.instance_seed << ','
        << r.wall_time_ns << '\n';
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

// ---------------------------------------------------------------------------
// Precision study
// ---------------------------------------------------------------------------

PrecisionInstance make_precision_instance(const PrecisionConfig& config, int trial) {
  const std::uint64_t instance_seed = derive_seed(config.seed, std::uint64_t(config.n), trial);
  std::vector<double> fv = wide_magnitude_values(instance_seed, config.n, config.magnitude_exponent);
  std::vector<double> gv =
      wide_magnitude_values(mix64(instance_seed), config.n, config.magnitude_exponent);

  if (config.n <= 14) {
    // Snap the instance to a power-of-two grid fine enough that the exact
    // integer engine can convolve these very inputs: with |q| <= B*2^p and
    // 2^n*(B*2^p)^2 held under 2^62 the integer route cannot overflow, and
    // q*2^-p is exactly representable, so the reference is exact for the
    // instance the engines actually see.
    const double bf = max_abs_value(fv);
    const double bg = max_abs_value(gv);
    int p = 0;
    if (bf > 0.0 && bg > 0.0) {
      const double budget = std::ldexp(1.0, 62 - config.n) / (bf * bg);
      p = int(std::floor(0.5 * std::log2(budget)));
      p = std::min(p, 52);
      while (p > -1080 && std::ldexp(bf, p) * std::ldexp(bg, p) > std::ldexp(1.0, 62 - config.n))
        --p;
    }
    std::vector<std::int64_t> qf(fv.size()), qg(gv.size());
    for (std::size_t i = 0; i < fv.size(); ++i) {
      qf[i] = static_cast<std::int64_t>(std::nearbyint(std::ldexp(fv[i], p)));
      fv[i] = std::ldexp(double(qf[i]), -p);
      qg[i] = static_cast<std::int64_t>(std::nearbyint(std::ldexp(gv[i], p)));
      gv[i] = std::ldexp(double(qg[i]), -p);
    }
    const auto exact = subset_convolve_naive(SetFunction<std::int64_t>(config.n, std::move(qf)),
                                             SetFunction<std::int64_t>(config.n, std::move(qg)));
    std::vector<double> ref(exact.size());
    for (std::uint64_t s = 0; s < exact.size(); ++s) ref[s] = std::ldexp(double(exact[s]), -2 * p);
    return {SetFunction<double>(config.n, std::move(fv)), SetFunction<double>(config.n, std::move(gv)),
            SetFunction<double>(config.n, std::move(ref)), instance_seed};
  }

  SetFunction<double> f(config.n, std::move(fv));
  SetFunction<double> g(config.n, std::move(gv));
  SetFunction<double> ref = compensated_naive(f, g);
  return {std::move(f), std::move(g), std::move(ref), instance_seed};
}

std::vector<PrecisionRow> run_precision(const PrecisionConfig& config) {
  if (config.n < 0 || config.n > max_ground_set_size())
    throw std::invalid_argument("precision: n outside [0, " +
                                std::to_string(max_ground_set_size()) + "]");
  if (config.trials < 1) throw std::invalid_argument("precision: trials must be positive");
  if (config.magnitude_exponent < 0)
    throw std::invalid_argument("precision: magnitude exponent must be non-negative");

  std::vector<PrecisionRow> rows;
  for (int trial = 0; trial < config.trials; ++trial) {
    const PrecisionInstance instance = make_precision_instance(config, trial);

    for (const char* engine : {"zeta", "fft"}) {
      RunReport report;
      const auto start = Clock::now();
      const SetFunction<double> result =
          engine[0] == 'z' ? subset_convolve_zeta(instance.f, instance.g, &report)
                           : subset_convolve_fft(instance.f, instance.g, &report);
      const auto stop = Clock::now();

      double max_abs = 0.0, max_rel = 0.0;
      for (std::uint64_t s = 0; s < result.size(); ++s) {
        const double err = std::abs(result[s] - instance.reference[s]);
        max_abs = std::max(max_abs, err);
        if (instance.reference[s] != 0.0)
          max_rel = std::max(max_rel, err / std::abs(instance.reference[s]));
      }
      rows.push_back({engine, config.n, trial, instance.seed, max_abs, max_rel,
                      report.max_intermediate_magnitude, elapsed_ns(start, stop)});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const PrecisionRow& a, const PrecisionRow& b) {
    return std::tie(a.engine, a.n, a.trial) < std::tie(b.engine, b.n, b.trial);
  });
  return rows;
}

void write_precision_csv(const std::filesystem::path& path, const std::vector<PrecisionRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << kPrecisionCsvHeader << '\n';
  for (const auto& r : rows)
    out << r.engine << ',' << r.n << ',' << r.trial << ',' << r.instance_seed << ','
        << format_double(r.max_abs_err) << ',' << format_double(r.max_rel_err) << ','
        << format_double(r.max_intermediate_magnitude) << ',' << r.wall_time_ns << '\n';
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace subconv
