// Transform-free FFT engine.
//
// All 2(n+1) rank slices are transformed up front at cyclic length 2^n (the
// length is already a power of two, so no padding is involved); each target
// rank's spectrum is accumulated pointwise and inverted with a single
// inverse transform. Rank-sum index collisions that wrap past 2^n can never
// land on the target cardinality, and sub-2^n collisions with overlapping
// sets fall below it, so zeroing everything off the target rank leaves
// exactly the subset convolution.
//
// The accumulation walks frequency blocks so every spectrum slice is
// streamed once per (i, k-i) pair while the accumulator stays cached; the
// term order within one target rank is fixed (i ascending) for run-to-run
// reproducibility. The inverse scaling 1/2^n is folded into the final
// read-back.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "subconv/convolution.hpp"
#include "subconv/fft.hpp"

namespace subconv {

namespace {

using Complex = std::complex<double>;

constexpr std::size_t kBlock = 1024;  // complex elements; 16 KiB per slice

double max_modulus(const Complex* v, std::size_t len) {
  double best = 0.0;
  for (std::size_t j = 0; j < len; ++j) best = std::max(best, std::abs(v[j]));
  return best;
}

template <typename T, bool WithStats>
SetFunction<double> convolve_fft_impl(const SetFunction<T>& f, const SetFunction<T>& g,
                                      RunReport* report) {
  const int n = f.n();
  const std::uint64_t size = f.size();
  const int ranks = n + 1;

  detail::AlignedComplexBuffer fhat(std::size_t(ranks) * size);
  detail::AlignedComplexBuffer ghat(std::size_t(ranks) * size);
  detail::AlignedComplexBuffer acc(size);

  double max_magnitude = 0.0;

  // Chop and forward-transform every rank slice of both inputs.
  const T* fv = f.values().data();
  const T* gv = g.values().data();
  for (int i = 0; i < ranks; ++i) {
    Complex* fi = fhat.data() + std::size_t(i) * size;
    Complex* gi = ghat.data() + std::size_t(i) * size;
    for (std::uint64_t s = 0; s < size; ++s) {
      const bool keep = std::popcount(s) == unsigned(i);
      fi[s] = keep ? Complex(double(fv[s]), 0.0) : Complex(0.0, 0.0);
      gi[s] = keep ? Complex(double(gv[s]), 0.0) : Complex(0.0, 0.0);
    }
    detail::fft_unnormalized(fi, size, false);
    detail::fft_unnormalized(gi, size, false);
    if constexpr (WithStats) {
      max_magnitude = std::max({max_magnitude, max_modulus(fi, size), max_modulus(gi, size)});
    }
  }

  std::vector<double> out(size);
  const double scale = 1.0 / double(size);
  double max_imag = 0.0;

  for (int k = 0; k < ranks; ++k) {
    for (std::uint64_t j0 = 0; j0 < size; j0 += kBlock) {
      const std::uint64_t block = std::min<std::uint64_t>(kBlock, size - j0);
      double* c = reinterpret_cast<double*>(acc.data() + j0);
      {
        const double* a = reinterpret_cast<const double*>(fhat.data() + j0);
        const double* b = reinterpret_cast<const double*>(ghat.data() + std::size_t(k) * size + j0);
        for (std::uint64_t j = 0; j < 2 * block; j += 2) {
          const double ar = a[j], ai = a[j + 1];
          const double br = b[j], bi = b[j + 1];
          c[j] = ar * br - ai * bi;
          c[j + 1] = ar * bi + ai * br;
        }
      }
      for (int i = 1; i <= k; ++i) {
        const double* a = reinterpret_cast<const double*>(fhat.data() + std::size_t(i) * size + j0);
        const double* b =
            reinterpret_cast<const double*>(ghat.data() + std::size_t(k - i) * size + j0);
        for (std::uint64_t j = 0; j < 2 * block; j += 2) {
          const double ar = a[j], ai = a[j + 1];
          const double br = b[j], bi = b[j + 1];
          c[j] += ar * br - ai * bi;
          c[j + 1] += ar * bi + ai * br;
        }
      }
      if constexpr (WithStats)
        max_magnitude = std::max(max_magnitude, max_modulus(acc.data() + j0, block));
    }

    detail::fft_unnormalized(acc.data(), size, true);

    detail::for_each_mask_of_rank(n, k, [&](std::uint64_t mask) {
      const Complex v = acc[mask];
      out[mask] = v.real() * scale;
      max_imag = std::max(max_imag, std::abs(v.imag()) * scale);
    });
  }

  if (report != nullptr) {
    report->algo = "fft";
    report->n = n;
    report->max_imag_residual = max_imag;
    if constexpr (WithStats) report->max_intermediate_magnitude = max_magnitude;
  }
  return SetFunction<double>(n, std::move(out));
}

}  // namespace

template <typename T>
SetFunction<double> subset_convolve_fft(const SetFunction<T>& f, const SetFunction<T>& g,
                                        RunReport* report) {
  detail::require_same_n(f, g, "subset_convolve_fft");
  return report != nullptr ? convolve_fft_impl<T, true>(f, g, report)
                           : convolve_fft_impl<T, false>(f, g, nullptr);
}

template SetFunction<double> subset_convolve_fft(const SetFunction<std::int64_t>&,
                                                 const SetFunction<std::int64_t>&, RunReport*);
template SetFunction<double> subset_convolve_fft(const SetFunction<double>&,
                                                 const SetFunction<double>&, RunReport*);

}  // namespace subconv
