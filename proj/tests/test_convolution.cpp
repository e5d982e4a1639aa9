#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "subconv/convolution.hpp"
#include "subconv/fft.hpp"
#include "subconv/set_function.hpp"

using namespace subconv;

namespace {
using IntFn = SetFunction<std::int64_t>;
using RealFn = SetFunction<double>;

const IntFn kF(2, {1, 2, 3, 4});
const IntFn kG(2, {5, 6, 7, 8});
const std::vector<std::int64_t> kExpected = {5, 16, 22, 60};
}  // namespace

TEST_CASE("the hand-checkable instance on all engines") {
  CHECK(subset_convolve_naive(kF, kG).values() == kExpected);
  CHECK(subset_convolve_zeta(kF, kG).values() == kExpected);

  const auto h = subset_convolve_fft(kF, kG);
  for (std::uint64_t s = 0; s < 4; ++s)
    CHECK(std::abs(h[s] - double(kExpected[s])) <= 1e-9);

  // Cross-check the frozen values against the disjoint-pair oracle.
  CHECK(oracles::disjoint_pair_convolution(kF.values(), kG.values()) == kExpected);
}

TEST_CASE("the empty-set indicator is the ring identity") {
  const auto f = random_instance<std::int64_t>(6, 11, 50);
  const auto e = IntFn::unit(6);
  CHECK(subset_convolve_naive(f, e) == f);
  CHECK(subset_convolve_zeta(f, e) == f);

  const auto fd = random_instance<double>(6, 12, 1.0);
  const auto h = subset_convolve_fft(fd, RealFn::unit(6));
  for (std::uint64_t s = 0; s < fd.size(); ++s) CHECK(std::abs(h[s] - fd[s]) <= 1e-9);
}

TEST_CASE("zero annihilates") {
  const auto g = random_instance<std::int64_t>(5, 13, 50);
  CHECK(subset_convolve_naive(IntFn::zero(5), g) == IntFn::zero(5));
}

TEST_CASE("single-point lattice multiplies scalars") {
  const auto h = subset_convolve_fft(RealFn(0, {3.5}), RealFn(0, {-2.0}));
  CHECK(std::abs(h[0] - (-7.0)) <= 1e-12);
}

TEST_CASE("naive engine matches the disjoint-pair oracle") {
  for (int n = 0; n <= 9; ++n) {
    const auto f = random_instance<std::int64_t>(n, derive_seed(31, n, 0), 40);
    const auto g = random_instance<std::int64_t>(n, derive_seed(32, n, 0), 40);
    CHECK(subset_convolve_naive(f, g).values() ==
          oracles::disjoint_pair_convolution(f.values(), g.values()));
  }
}

TEST_CASE("zeta engine equals naive exactly on integers") {
  for (int n = 0; n <= 11; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto f = random_instance<std::int64_t>(n, derive_seed(33, n, seed), 50);
      const auto g = random_instance<std::int64_t>(n, derive_seed(34, n, seed), 50);
      CHECK(subset_convolve_zeta(f, g) == subset_convolve_naive(f, g));
    }
  }
}

TEST_CASE("fft engine rounds to the exact integer result") {
  for (int n = 0; n <= 11; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto f = random_instance<std::int64_t>(n, derive_seed(35, n, seed), 50);
      const auto g = random_instance<std::int64_t>(n, derive_seed(36, n, seed), 50);
      RunReport report;
      CHECK(round_to_integers(subset_convolve_fft(f, g, &report), report) ==
            subset_convolve_naive(f, g));
      CHECK(report.rounding_max_deviation.value() < 1e-4);
      if (n > 0) CHECK(report.max_intermediate_magnitude > 0.0);
    }
  }
}

TEST_CASE("engines are commutative and bilinear on integers") {
  const int n = 6;
  const auto f = random_instance<std::int64_t>(n, 21, 30);
  const auto g = random_instance<std::int64_t>(n, 22, 30);
  CHECK(subset_convolve_naive(f, g) == subset_convolve_naive(g, f));
  CHECK(subset_convolve_zeta(f, g) == subset_convolve_zeta(g, f));

  std::vector<std::int64_t> scaled = f.values();
  for (auto& v : scaled) v *= -7;
  std::vector<std::int64_t> expected = subset_convolve_naive(f, g).values();
  for (auto& v : expected) v *= -7;
  CHECK(subset_convolve_naive(IntFn(n, std::move(scaled)), g).values() == expected);
}

TEST_CASE("associativity holds on small ground sets") {
  for (int n = 0; n <= 6; ++n) {
    const auto f = random_instance<std::int64_t>(n, derive_seed(41, n, 0), 5);
    const auto g = random_instance<std::int64_t>(n, derive_seed(42, n, 0), 5);
    const auto h = random_instance<std::int64_t>(n, derive_seed(43, n, 0), 5);
    CHECK(subset_convolve_naive(subset_convolve_naive(f, g), h) ==
          subset_convolve_naive(f, subset_convolve_naive(g, h)));
  }
}

TEST_CASE("rank-pure inputs convolve onto the summed rank") {
  const int n = 6;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const auto f = clean_rank(random_instance<std::int64_t>(n, derive_seed(51, i, j), 5), i);
      const auto g = clean_rank(random_instance<std::int64_t>(n, derive_seed(52, i, j), 5), j);
      const auto h = subset_convolve_naive(f, g);
      for (std::uint64_t s = 0; s < h.size(); ++s) {
        if (h[s] != 0) CHECK(std::popcount(s) == unsigned(i + j));
        if (i + j > n) CHECK(h[s] == 0);
      }
    }
  }
}

TEST_CASE("frequency-domain rank products leak off-rank before cleanup") {
  // Built from the public transform ops: the inverse of fhat_1 * ghat_1 has
  // mass off cardinality 2 (wrapped and overlapping index sums), yet the
  // engine's cleaned and assembled output is exact.
  const int n = 2;
  const RealFn f(n, {0, 1, 1, 0});
  const auto family = chop(f);
  std::vector<std::complex<double>> rank1(4);
  for (int s = 0; s < 4; ++s) rank1[s] = {family.ranks[1][s], 0.0};
  const auto fhat = fft(rank1, FftDirection::Forward);
  Spectrum acc = Spectrum::zero(4);
  pointwise_mul_add(acc, fhat, fhat);
  const auto raw = fft(acc.values, FftDirection::Inverse);

  double off_rank_mass = 0.0;
  for (int s = 0; s < 4; ++s)
    if (std::popcount(unsigned(s)) != 2) off_rank_mass += std::abs(raw.values[s]);
  CHECK(off_rank_mass > 0.5);  // the wrapped 1+2 and overlapping 1+1, 2+2 sums

  const auto h = subset_convolve_fft(f, f);
  const auto exact = oracles::disjoint_pair_convolution(f.values(), f.values());
  for (int s = 0; s < 4; ++s) CHECK(std::abs(h[s] - exact[s]) <= 1e-9);
}

TEST_CASE("wrapped index sums never land on the target cardinality") {
  for (int n = 0; n <= 10; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < size; ++a)
      for (std::uint64_t b = 0; b < size; ++b) {
        const std::uint64_t sum = a + b;
        if (sum >= size)
          CHECK(std::popcount(sum & (size - 1)) !=
                std::popcount(a) + std::popcount(b));
      }
  }
}

TEST_CASE("carry identity behind the rank argument") {
  SplitMix64 rng(8);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t a = rng.next() >> 1;  // keep a+b below 2^64
    const std::uint64_t b = rng.next() >> 1;
    CHECK(a + b == (a | b) + (a & b));
  }
}

TEST_CASE("cyclic rank convolution equals padded linear convolution after cleanup") {
  for (int n = 1; n <= 8; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    const auto f = random_instance<double>(n, derive_seed(61, n, 0), 1.0);
    const auto g = random_instance<double>(n, derive_seed(62, n, 0), 1.0);
    const auto ff = chop(f);
    const auto gf = chop(g);
    for (int i = 0; i + 1 <= n; ++i) {
      const auto cyc = sequence_convolve(ff.ranks[i].values(), gf.ranks[1].values(),
                                         ConvolveMode::Cyclic);
      const auto lin = sequence_convolve(ff.ranks[i].values(), gf.ranks[1].values(),
                                         ConvolveMode::Linear);
      // Restricted to the target cardinality, the wrapped tail contributes
      // nothing: both routes agree.
      detail::for_each_mask_of_rank(n, i + 1, [&](std::uint64_t mask) {
        CHECK(std::abs(cyc[mask] - lin[mask]) <= 1e-9);
      });
    }
  }
}

TEST_CASE("round_to_integers snaps and reports") {
  RunReport report;
  const auto snapped = round_to_integers(RealFn(1, {4.9999999, 16.0000001}), report);
  CHECK(snapped.values() == std::vector<std::int64_t>{5, 16});
  CHECK(report.rounding_max_deviation.value() == doctest::Approx(1e-7).epsilon(0.1));

  RunReport exact_report;
  const auto exact = round_to_integers(RealFn(1, {3.0, -4.0}), exact_report);
  CHECK(exact.values() == std::vector<std::int64_t>{3, -4});
  CHECK(exact_report.rounding_max_deviation.value() == 0.0);

  RunReport bad_report;
  CHECK_THROWS_AS(round_to_integers(RealFn(1, {4.6, 0.0}), bad_report), RoundingUnsafeError);
}

TEST_CASE("integer overflow is rejected up front") {
  const std::int64_t huge = std::int64_t{1} << 31;
  const IntFn f(2, {huge, huge, huge, huge});
  CHECK_THROWS_AS(subset_convolve_naive(f, f), std::invalid_argument);
  CHECK_THROWS_AS(subset_convolve_zeta(f, f), std::invalid_argument);

  // The zeta path's bound is the stricter one.
  const std::int64_t mid = std::int64_t{1} << 24;
  const IntFn g(8, std::vector<std::int64_t>(256, mid));
  CHECK_THROWS_AS(subset_convolve_zeta(g, g), std::invalid_argument);
}

TEST_CASE("engines reject mismatched ground sets") {
  const auto f2 = random_instance<std::int64_t>(2, 1, 5);
  const auto f3 = random_instance<std::int64_t>(3, 1, 5);
  CHECK_THROWS_AS(subset_convolve_naive(f2, f3), std::invalid_argument);
  CHECK_THROWS_AS(subset_convolve_zeta(f2, f3), std::invalid_argument);
  const auto d2 = random_instance<double>(2, 1, 1.0);
  const auto d3 = random_instance<double>(3, 1, 1.0);
  CHECK_THROWS_AS(subset_convolve_fft(d2, d3), std::invalid_argument);
}
