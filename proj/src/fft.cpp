#include "subconv/fft.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <new>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace subconv {

namespace {

bool is_pow2(std::size_t len) { return len != 0 && (len & (len - 1)) == 0; }

void require_pow2(std::size_t len, const char* what) {
  if (!is_pow2(len))
    throw std::invalid_argument(std::string(what) + ": length " + std::to_string(len) +
                                " is not a power of two");
}

// Bit-reversal permutation and per-stage twiddle tables for one length.
struct BuiltinPlan {
  std::vector<std::uint32_t> bitrev;
  std::vector<std::complex<double>> stage_roots;  // stage s occupies [offset[s], offset[s]+2^(s-1))
  std::vector<std::size_t> stage_offset;
};

std::shared_ptr<const BuiltinPlan> builtin_plan(std::size_t len) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const BuiltinPlan>> cache;

  std::scoped_lock lock(mutex);
  if (auto it = cache.find(len); it != cache.end()) return it->second;

  auto plan = std::make_shared<BuiltinPlan>();
  const int lg = std::countr_zero(len);
  plan->bitrev.assign(len, 0);
  for (std::size_t i = 1; i < len; ++i)
    plan->bitrev[i] = (plan->bitrev[i >> 1] >> 1) | std::uint32_t((i & 1) << (lg - 1));

  plan->stage_offset.assign(lg + 1, 0);
  std::size_t total = 0;
  for (int s = 1; s <= lg; ++s) {
    plan->stage_offset[s] = total;
    total += std::size_t{1} << (s - 1);
  }
  plan->stage_roots.resize(total);
  for (int s = 1; s <= lg; ++s) {
    const std::size_t block = std::size_t{1} << s;
    const std::size_t half = block >> 1;
    for (std::size_t j = 0; j < half; ++j) {
      const double angle = -2.0 * std::numbers::pi * double(j) / double(block);
      plan->stage_roots[plan->stage_offset[s] + j] = {std::cos(angle), std::sin(angle)};
    }
  }
  cache.emplace(len, plan);
  return cache[len];
}

}  // namespace

namespace detail {

void fft_builtin_unnormalized(std::complex<double>* data, std::size_t len, bool inverse) {
  require_pow2(len, "fft");
  if (len == 1) return;

  const auto plan = builtin_plan(len);
  const auto& rev = plan->bitrev;
  for (std::size_t i = 0; i < len; ++i)
    if (i < rev[i]) std::swap(data[i], data[rev[i]]);

  // Decimation in time; twiddles stored with the forward sign, conjugated
  // on the fly for the inverse. Manual real/imaginary arithmetic keeps the
  // butterfly free of the library complex-multiply call path.
  double* d = reinterpret_cast<double*>(data);
  const double sign = inverse ? -1.0 : 1.0;
  const int lg = std::countr_zero(len);
  for (int s = 1; s <= lg; ++s) {
    const std::size_t block = std::size_t{1} << s;
    const std::size_t half = block >> 1;
    const std::complex<double>* w = plan->stage_roots.data() + plan->stage_offset[s];
    for (std::size_t base = 0; base < len; base += block) {
      for (std::size_t j = 0; j < half; ++j) {
        const double wr = w[j].real();
        const double wi = sign * w[j].imag();
        double* lo = d + 2 * (base + j);
        double* hi = d + 2 * (base + j + half);
        const double tr = wr * hi[0] - wi * hi[1];
        const double ti = wr * hi[1] + wi * hi[0];
        hi[0] = lo[0] - tr;
        hi[1] = lo[1] - ti;
        lo[0] += tr;
        lo[1] += ti;
      }
    }
  }
}

#ifndef SUBCONV_WITH_FFTW
void fft_unnormalized(std::complex<double>* data, std::size_t len, bool inverse) {
  fft_builtin_unnormalized(data, len, inverse);
}
#endif

AlignedComplexBuffer::AlignedComplexBuffer(std::size_t len) : len_(len) {
  data_ = static_cast<std::complex<double>*>(
      ::operator new[](len * sizeof(std::complex<double>), std::align_val_t{64}));
}

AlignedComplexBuffer::~AlignedComplexBuffer() {
  if (data_ != nullptr) ::operator delete[](data_, std::align_val_t{64});
}

AlignedComplexBuffer::AlignedComplexBuffer(AlignedComplexBuffer&& other) noexcept
    : data_(std::exchange(other.data_, nullptr)), len_(std::exchange(other.len_, 0)) {}

AlignedComplexBuffer& AlignedComplexBuffer::operator=(AlignedComplexBuffer&& other) noexcept {
  if (this != &other) {
    if (data_ != nullptr) ::operator delete[](data_, std::align_val_t{64});
    data_ = std::exchange(other.data_, nullptr);
    len_ = std::exchange(other.len_, 0);
  }
  return *this;
}

}  // namespace detail

#ifndef SUBCONV_WITH_FFTW
std::string_view fft_backend_name() { return "builtin-radix2"; }
#endif

Spectrum::Spectrum(std::vector<std::complex<double>> v) : values(std::move(v)) {
  require_pow2(values.size(), "Spectrum");
}

Spectrum Spectrum::zero(std::size_t len) {
  require_pow2(len, "Spectrum");
  Spectrum s;
  s.values.assign(len, {0.0, 0.0});
  return s;
}

Spectrum fft(std::span<const std::complex<double>> input, FftDirection direction) {
  require_pow2(input.size(), "fft");
  detail::AlignedComplexBuffer work(input.size());
  std::copy(input.begin(), input.end(), work.data());
  detail::fft_unnormalized(work.data(), work.size(), direction == FftDirection::Inverse);
  Spectrum out;
  out.values.assign(work.data(), work.data() + work.size());
  if (direction == FftDirection::Inverse) {
    const double scale = 1.0 / double(input.size());
    for (auto& v : out.values) v *= scale;
  }
  return out;
}

Spectrum& pointwise_mul_add(Spectrum& acc, const Spectrum& a, const Spectrum& b) {
  if (acc.size() != a.size() || a.size() != b.size())
    throw std::invalid_argument("pointwise_mul_add: spectrum length mismatch");
  for (std::size_t j = 0; j < acc.size(); ++j) {
    const double ar = a.values[j].real(), ai = a.values[j].imag();
    const double br = b.values[j].real(), bi = b.values[j].imag();
    acc.values[j] += std::complex<double>(ar * br - ai * bi, ar * bi + ai * br);
  }
  return acc;
}

std::vector<double> sequence_convolve(std::span<const double> x, std::span<const double> y,
                                      ConvolveMode mode) {
  if (mode == ConvolveMode::Cyclic) {
    if (x.size() != y.size())
      throw std::invalid_argument("sequence_convolve: cyclic mode needs equal lengths");
    require_pow2(x.size(), "sequence_convolve");
  } else if (x.empty() || y.empty()) {
    return {};
  }

  const std::size_t out_len =
      mode == ConvolveMode::Cyclic ? x.size() : x.size() + y.size() - 1;
  const std::size_t len = mode == ConvolveMode::Cyclic ? x.size() : std::bit_ceil(out_len);

  detail::AlignedComplexBuffer xa(len), ya(len);
  for (std::size_t i = 0; i < len; ++i) {
    xa[i] = {i < x.size() ? x[i] : 0.0, 0.0};
    ya[i] = {i < y.size() ? y[i] : 0.0, 0.0};
  }
  detail::fft_unnormalized(xa.data(), len, false);
  detail::fft_unnormalized(ya.data(), len, false);
  for (std::size_t j = 0; j < len; ++j) {
    const double ar = xa[j].real(), ai = xa[j].imag();
    const double br = ya[j].real(), bi = ya[j].imag();
    xa[j] = {ar * br - ai * bi, ar * bi + ai * br};
  }
  detail::fft_unnormalized(xa.data(), len, true);

  std::vector<double> out(out_len);
  const double scale = 1.0 / double(len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = xa[i].real() * scale;
  return out;
}

}  // namespace subconv
