// FFTW-backed transform behind the DFT-contract seam. Plans are created once
// per length with FFTW_ESTIMATE (deterministic plan choice, negligible
// planning cost) on an fftw-allocated scratch buffer and reused via the
// new-array execute interface; all execution buffers share the scratch's
// alignment class (64 bytes).

#include <complex>
#include <cstddef>
#include <map>
#include <mutex>

#include <fftw3.h>

#include "subconv/fft.hpp"

namespace subconv {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  PlanPair() = default;
  PlanPair(const PlanPair&) = delete;
  PlanPair& operator=(const PlanPair&) = delete;

  ~PlanPair() {
    if (forward != nullptr) fftw_destroy_plan(forward);
    if (backward != nullptr) fftw_destroy_plan(backward);
  }
};

// Plan creation is not thread-safe in FFTW; execution on distinct arrays is.
const PlanPair& plan_pair(std::size_t len) {
  static std::mutex mutex;
  static std::map<std::size_t, PlanPair> cache;

  std::scoped_lock lock(mutex);
  auto it = cache.find(len);
  if (it == cache.end()) {
    it = cache.try_emplace(len).first;
    fftw_complex* scratch = fftw_alloc_complex(len);
    it->second.forward = fftw_plan_dft_1d(int(len), scratch, scratch, FFTW_FORWARD, FFTW_ESTIMATE);
    it->second.backward = fftw_plan_dft_1d(int(len), scratch, scratch, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_free(scratch);
  }
  return it->second;
}

}  // namespace

namespace detail {

void fft_unnormalized(std::complex<double>* data, std::size_t len, bool inverse) {
  if (len <= 1) return;
  const PlanPair& plans = plan_pair(len);
  fftw_complex* io = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(inverse ? plans.backward : plans.forward, io, io);
}

}  // namespace detail

std::string_view fft_backend_name() { return "fftw3"; }

}  // namespace subconv
