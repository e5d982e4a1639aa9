#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "subconv/set_function.hpp"

namespace subconv {

// Per-run record consumed by the CLI's report line and CSV emitters.
// Engines fill the fields they can observe; callers fill wall_time_ns and
// the error metrics against a reference of their choice.
struct RunReport {
  std::string algo;
  int n = 0;
  std::int64_t wall_time_ns = 0;
  std::optional<double> max_abs_err;
  std::optional<double> max_rel_err;
  std::optional<double> rounding_max_deviation;
  // Largest magnitude seen in any transform-domain intermediate: ranked-zeta
  // arrays (incl. the pre-inverse products) for the zeta engine, spectra for
  // the FFT engine.
  double max_intermediate_magnitude = 0.0;
  // FFT engine only: largest |imaginary part| discarded when the output is
  // read back as real.
  double max_imag_residual = 0.0;
};

// The result of an integer rounding step strayed too far from the integer
// grid to be trustworthy.
class RoundingUnsafeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Direct evaluation of (f*g)(S) = sum over T subset of S of f(T) g(S\T) by
// submask enumeration; O(3^n) multiplications. The oracle engine.
// Int64 mode rejects inputs whose conservative magnitude bound 2^n*Bf*Bg
// exceeds the signed 64-bit range.
template <typename T>
SetFunction<T> subset_convolve_naive(const SetFunction<T>& f, const SetFunction<T>& g);

// Classic ranked zeta/Moebius evaluation, O(2^n n^2): chop both inputs,
// zeta-transform every rank, combine transforms pointwise per target rank,
// Moebius-transform back, keep rank-k entries, assemble. Exact on int64
// (no division anywhere); on doubles the cancellation error is measured,
// not hidden. Int64 overflow guard: (n+1)*2^(2n)*Bf*Bg within 64-bit range.
template <typename T>
SetFunction<T> subset_convolve_zeta(const SetFunction<T>& f, const SetFunction<T>& g,
                                    RunReport* report = nullptr);

// Transform-free engine, O(2^n n^2): chop both inputs, forward-FFT all
// 2(n+1) rank slices at cyclic length 2^n (no zero padding), accumulate
// each target rank's spectrum as sum_i fhat_i * ghat_(k-i) with i ascending,
// one inverse FFT per rank, zero entries off the target cardinality, sum.
// Always computes in complex double precision; output is the real part.
template <typename T>
SetFunction<double> subset_convolve_fft(const SetFunction<T>& f, const SetFunction<T>& g,
                                        RunReport* report = nullptr);

// Snap every entry to the nearest integer. Records the largest deviation in
// report.rounding_max_deviation and throws RoundingUnsafeError when it
// exceeds 0.25 (half the distance to the nearest competing integer).
SetFunction<std::int64_t> round_to_integers(const SetFunction<double>& h, RunReport& report);

extern template SetFunction<std::int64_t> subset_convolve_naive(const SetFunction<std::int64_t>&,
                                                                const SetFunction<std::int64_t>&);
extern template SetFunction<double> subset_convolve_naive(const SetFunction<double>&,
                                                          const SetFunction<double>&);
extern template SetFunction<std::int64_t> subset_convolve_zeta(const SetFunction<std::int64_t>&,
                                                               const SetFunction<std::int64_t>&,
                                                               RunReport*);
extern template SetFunction<double> subset_convolve_zeta(const SetFunction<double>&,
                                                         const SetFunction<double>&, RunReport*);
extern template SetFunction<double> subset_convolve_fft(const SetFunction<std::int64_t>&,
                                                        const SetFunction<std::int64_t>&, RunReport*);
extern template SetFunction<double> subset_convolve_fft(const SetFunction<double>&,
                                                        const SetFunction<double>&, RunReport*);

namespace detail {

std::uint64_t max_abs_int64(const std::vector<std::int64_t>& values);

// Throws std::invalid_argument unless terms * bf * bg fits in int64.
void check_product_bound(unsigned __int128 terms, std::uint64_t bf, std::uint64_t bg,
                         const char* engine);

template <typename T>
void require_same_n(const SetFunction<T>& f, const SetFunction<T>& g, const char* engine) {
  if (f.n() != g.n())
    throw std::invalid_argument(std::string(engine) + ": ground-set size mismatch (" +
                                std::to_string(f.n()) + " vs " + std::to_string(g.n()) + ")");
}

}  // namespace detail
}  // namespace subconv
