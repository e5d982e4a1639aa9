#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace subconv {

// Frequency-domain image of a power-of-two-length sequence.
struct Spectrum {
  std::vector<std::complex<double>> values;

  Spectrum() = default;
  explicit Spectrum(std::vector<std::complex<double>> v);
  static Spectrum zero(std::size_t len);

  std::size_t size() const noexcept { return values.size(); }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

enum class FftDirection { Forward, Inverse };

// Discrete Fourier transform for power-of-two lengths.
// Forward: X[j] = sum_t x[t] * exp(-2*pi*i*j*t/N), unnormalized.
// Inverse: positive exponent and a final 1/N, so inverse(forward(x)) == x
// up to floating-point error. Bit-identical output for identical input on
// one build. Throws std::invalid_argument for non-power-of-two lengths.
Spectrum fft(std::span<const std::complex<double>> input, FftDirection direction);

// acc[j] += a[j] * b[j]. Lengths must match. Returns the accumulator.
Spectrum& pointwise_mul_add(Spectrum& acc, const Spectrum& a, const Spectrum& b);

enum class ConvolveMode { Cyclic, Linear };

// Sequence convolution via the FFT.
// Cyclic: equal power-of-two lengths, z[s] = sum_{a+b = s mod N} x[a] y[b].
// Linear: any lengths (zero-padded internally to the next power of two
// >= |x|+|y|-1), z[s] = sum_{a+b = s} x[a] y[b] of length |x|+|y|-1.
std::vector<double> sequence_convolve(std::span<const double> x, std::span<const double> y,
                                      ConvolveMode mode);

// Name of the FFT backend compiled into this build ("fftw3" or
// "builtin-radix2"). Both satisfy the same DFT contract.
std::string_view fft_backend_name();

namespace detail {

// In-place transform without the inverse 1/N scaling; the seam behind which
// the backend may be replaced. Length must be a power of two >= 1.
void fft_unnormalized(std::complex<double>* data, std::size_t len, bool inverse);

// The self-contained iterative radix-2 kernel (bit-reversal permutation plus
// per-stage twiddle tables, cached per length). Always available; used as
// the reference implementation in backend-equivalence tests.
void fft_builtin_unnormalized(std::complex<double>* data, std::size_t len, bool inverse);

// 64-byte-aligned complex buffer, uninitialized. SIMD backends require a
// fixed alignment class across planning and execution.
class AlignedComplexBuffer {
 public:
  explicit AlignedComplexBuffer(std::size_t len);
  ~AlignedComplexBuffer();
  AlignedComplexBuffer(AlignedComplexBuffer&& other) noexcept;
  AlignedComplexBuffer& operator=(AlignedComplexBuffer&& other) noexcept;
  AlignedComplexBuffer(const AlignedComplexBuffer&) = delete;
  AlignedComplexBuffer& operator=(const AlignedComplexBuffer&) = delete;

  std::complex<double>* data() noexcept { return data_; }
  const std::complex<double>* data() const noexcept { return data_; }
  std::size_t size() const noexcept { return len_; }
  std::complex<double>& operator[](std::size_t i) noexcept { return data_[i]; }
  const std::complex<double>& operator[](std::size_t i) const noexcept { return data_[i]; }

 private:
  std::complex<double>* data_ = nullptr;
  std::size_t len_ = 0;
};

}  // namespace detail
}  // namespace subconv
