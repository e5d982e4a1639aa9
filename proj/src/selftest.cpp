// Built-in property suites behind the CLI's selftest command. Fixed seeds,
// brute-force oracles computed on the spot.

#include "subconv/selftest.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include "subconv/convolution.hpp"
#include "subconv/disjoint_sum.hpp"
#include "subconv/fft.hpp"
#include "subconv/rng.hpp"
#include "subconv/set_function.hpp"
#include "subconv/transforms.hpp"

namespace subconv {

namespace {

struct Checker {
  SuiteResult result;
  void expect(bool ok) {
    ++result.checks;
    if (!ok) ++result.failures;
  }
};

// Subset convolution by enumeration of all disjoint pairs; independent of
// the submask-loop engine.
std::vector<std::int64_t> disjoint_pair_convolution(const std::vector<std::int64_t>& f,
                                                    const std::vector<std::int64_t>& g) {
  std::vector<std::int64_t> h(f.size(), 0);
  for (std::uint64_t a = 0; a < f.size(); ++a)
    for (std::uint64_t b = 0; b < g.size(); ++b)
      if ((a & b) == 0) h[a | b] += f[a] * g[b];
  return h;
}

std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& x,
                                            bool inverse) {
  const std::size_t len = x.size();
  std::vector<std::complex<double>> out(len);
  for (std::size_t j = 0; j < len; ++j) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t t = 0; t < len; ++t) {
      const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi * double(j) * double(t) / double(len);
      sum += x[t] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[j] = inverse ? sum / double(len) : sum;
  }
  return out;
}

SuiteResult suite_chop_assemble() {
  Checker c;
  c.result.name = "setfn.chop_assemble_roundtrip";
  for (int n = 0; n <= 10; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto fi = random_instance<std::int64_t>(n, derive_seed(7, n, seed), 100);
      const auto fd = random_instance<double>(n, derive_seed(8, n, seed), 1.0);
      c.expect(assemble(chop(fi)) == fi);
      c.expect(assemble(chop(fd)) == fd);
      const auto family = chop(fi);
      for (std::uint64_t s = 0; s < fi.size(); ++s)
        for (int i = 0; i <= n; ++i)
          c.expect(family.ranks[i][s] == (std::popcount(s) == unsigned(i) ? fi[s] : 0));
    }
  }
  return c.result;
}

SuiteResult suite_clean_rank() {
  Checker c;
  c.result.name = "setfn.clean_rank_decomposition";
  for (int n = 0; n <= 8; ++n) {
    const auto h = random_instance<std::int64_t>(n, derive_seed(9, n, 0), 50);
    auto total = SetFunction<std::int64_t>::zero(n);
    for (int k = 0; k <= n; ++k) {
      const auto cleaned = clean_rank(h, k);
      c.expect(clean_rank(cleaned, k) == cleaned);
      std::vector<std::int64_t> sum = total.values();
      for (std::uint64_t s = 0; s < sum.size(); ++s) sum[s] += cleaned[s];
      total = SetFunction<std::int64_t>(n, std::move(sum));
    }
    c.expect(total == h);
  }
  return c.result;
}

SuiteResult suite_zeta_mobius_inverse() {
  Checker c;
  c.result.name = "transforms.zeta_mobius_inverse";
  for (int n = 0; n <= 12; ++n) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto f = random_instance<std::int64_t>(n, derive_seed(11, n, seed), 1000);
      c.expect(mobius(zeta(f)) == f);
      c.expect(zeta(mobius(f)) == f);
    }
  }
  return c.result;
}

SuiteResult suite_zeta_bruteforce() {
  Checker c;
  c.result.name = "transforms.zeta_bruteforce";
  for (int n = 0; n <= 8; ++n) {
    const auto f = random_instance<std::int64_t>(n, derive_seed(13, n, 0), 1000);
    const auto z = zeta(f);
    for (std::uint64_t s = 0; s < f.size(); ++s) {
      std::int64_t direct = f[0];
      for (std::uint64_t t = s; t != 0; t = (t - 1) & s) direct += f[t];
      c.expect(z[s] == direct);
    }
  }
  return c.result;
}

SuiteResult suite_fft_naive_dft() {
  Checker c;
  c.result.name = "fft.naive_dft_equivalence";
  for (std::size_t len = 1; len <= 256; len <<= 1) {
    SplitMix64 rng(derive_seed(17, len, 0));
    std::vector<std::complex<double>> x(len);
    for (auto& v : x) v = {rng.next_symmetric(1.0), rng.next_symmetric(1.0)};
    for (const bool inverse : {false, true}) {
      const auto expected = naive_dft(x, inverse);
      const auto got = fft(x, inverse ? FftDirection::Inverse : FftDirection::Forward);
      for (std::size_t j = 0; j < len; ++j)
        c.expect(std::abs(got.values[j] - expected[j]) <= 1e-10);
    }
  }
  return c.result;
}

SuiteResult suite_fft_roundtrip_parseval() {
  Checker c;
  c.result.name = "fft.roundtrip_parseval";
  for (std::size_t len = 1; len <= (std::size_t{1} << 16); len <<= 2) {
    SplitMix64 rng(derive_seed(19, len, 0));
    std::vector<std::complex<double>> x(len);
    for (auto& v : x) v = {rng.next_symmetric(1.0), rng.next_symmetric(1.0)};
    const auto spectrum = fft(x, FftDirection::Forward);
    const auto back = fft(spectrum.values, FftDirection::Inverse);
    double max_err = 0.0, time_energy = 0.0, freq_energy = 0.0;
    for (std::size_t t = 0; t < len; ++t) {
      max_err = std::max(max_err, std::abs(back.values[t] - x[t]));
      time_energy += std::norm(x[t]);
      freq_energy += std::norm(spectrum.values[t]);
    }
    c.expect(max_err <= 1e-12);
    c.expect(std::abs(time_energy - freq_energy / double(len)) <= 1e-12 * time_energy);
  }
  return c.result;
}

SuiteResult suite_convolution_theorem() {
  Checker c;
  c.result.name = "fft.convolution_theorem";
  for (std::size_t len = 1; len <= 512; len <<= 1) {
    SplitMix64 rng(derive_seed(23, len, 0));
    std::vector<double> x(len), y(len);
    for (auto& v : x) v = rng.next_symmetric(1.0);
    for (auto& v : y) v = rng.next_symmetric(1.0);
    const auto z = sequence_convolve(x, y, ConvolveMode::Cyclic);
    for (std::size_t s = 0; s < len; ++s) {
      double direct = 0.0;
      for (std::size_t a = 0; a < len; ++a) direct += x[a] * y[(s + len - a) % len];
      c.expect(std::abs(z[s] - direct) <= 1e-9);
    }
  }
  return c.result;
}

SuiteResult suite_zeta_equals_naive() {
  Checker c;
  c.result.name = "convolution.zeta_equals_naive";
  for (int n = 0; n <= 10; ++n) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto f = random_instance<std::int64_t>(n, derive_seed(29, n, seed), 50);
      const auto g = random_instance<std::int64_t>(n, derive_seed(31, n, seed), 50);
      c.expect(subset_convolve_zeta(f, g) == subset_convolve_naive(f, g));
    }
  }
  return c.result;
}

SuiteResult suite_fft_equals_naive() {
  Checker c;
  c.result.name = "convolution.fft_equals_naive_rounded";
  for (int n = 0; n <= 10; ++n) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto f = random_instance<std::int64_t>(n, derive_seed(37, n, seed), 50);
      const auto g = random_instance<std::int64_t>(n, derive_seed(41, n, seed), 50);
      RunReport report;
      c.expect(round_to_integers(subset_convolve_fft(f, g), report) ==
               subset_convolve_naive(f, g));
      c.expect(report.rounding_max_deviation.value() < 1e-4);
    }
  }
  return c.result;
}

SuiteResult suite_no_wraparound() {
  Checker c;
  c.result.name = "convolution.no_wraparound_exhaustive";
  // For every pair whose cardinalities sum to k, an index sum that wraps
  // past 2^n can never land on cardinality k. Exhaustive for n <= 12.
  for (int n = 0; n <= 12; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    std::uint64_t counterexamples = 0;
    for (std::uint64_t a = 0; a < size; ++a) {
      for (std::uint64_t b = 0; b < size; ++b) {
        const std::uint64_t sum = a + b;
        if (sum >= size &&
            std::popcount(sum & (size - 1)) == std::popcount(a) + std::popcount(b))
          ++counterexamples;
      }
    }
    c.expect(counterexamples == 0);
  }
  return c.result;
}

SuiteResult suite_ring_axioms() {
  Checker c;
  c.result.name = "convolution.ring_axioms";
  for (int n = 0; n <= 5; ++n) {
    const auto f = random_instance<std::int64_t>(n, derive_seed(43, n, 1), 5);
    const auto g = random_instance<std::int64_t>(n, derive_seed(47, n, 2), 5);
    const auto h = random_instance<std::int64_t>(n, derive_seed(53, n, 3), 5);
    const auto e = SetFunction<std::int64_t>::unit(n);
    c.expect(subset_convolve_naive(f, e) == f);
    c.expect(subset_convolve_naive(f, g) == subset_convolve_naive(g, f));
    c.expect(subset_convolve_naive(subset_convolve_naive(f, g), h) ==
             subset_convolve_naive(f, subset_convolve_naive(g, h)));
    std::vector<std::int64_t> scaled = f.values();
    for (auto& v : scaled) v *= 3;
    const SetFunction<std::int64_t> f3(n, std::move(scaled));
    std::vector<std::int64_t> expect3 = subset_convolve_naive(f, g).values();
    for (auto& v : expect3) v *= 3;
    c.expect(subset_convolve_naive(f3, g).values() == expect3);
  }
  return c.result;
}

SuiteResult suite_disjoint_sum() {
  Checker c;
  c.result.name = "disjointsum.fft_equals_naive";
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      SplitMix64 rng(derive_seed(59, n, m));
      std::vector<std::int64_t> fv((std::uint64_t{1} << n) * (m + 1)),
          gv((std::uint64_t{1} << n) * (m + 1));
      for (auto& v : fv) v = rng.next_int(0, 3);
      for (auto& v : gv) v = rng.next_int(0, 3);
      const IndexedSetFunction<std::int64_t> f(n, m, std::move(fv));
      const IndexedSetFunction<std::int64_t> g(n, m, std::move(gv));
      c.expect(round_to_integers(disjoint_set_sum_fft(f, g)) == disjoint_set_sum_naive(f, g));
    }
  }
  return c.result;
}

SuiteResult suite_pair_oracle() {
  Checker c;
  c.result.name = "convolution.disjoint_pair_oracle";
  for (int n = 0; n <= 8; ++n) {
    const auto f = random_instance<std::int64_t>(n, derive_seed(61, n, 0), 30);
    const auto g = random_instance<std::int64_t>(n, derive_seed(67, n, 0), 30);
    c.expect(subset_convolve_naive(f, g).values() ==
             disjoint_pair_convolution(f.values(), g.values()));
  }
  return c.result;
}

}  // namespace

std::vector<SuiteResult> run_selftest() {
  return {
      suite_chop_assemble(),   suite_clean_rank(),        suite_zeta_mobius_inverse(),
      suite_zeta_bruteforce(), suite_fft_naive_dft(),     suite_fft_roundtrip_parseval(),
      suite_convolution_theorem(), suite_pair_oracle(),   suite_zeta_equals_naive(),
      suite_fft_equals_naive(), suite_no_wraparound(),    suite_ring_axioms(),
      suite_disjoint_sum(),
  };
}

}  // namespace subconv
