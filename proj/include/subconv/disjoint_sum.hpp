#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "subconv/set_function.hpp"

namespace subconv {

// Weighted family over (subset, integer value) pairs: a 2^n x (m+1) grid,
// entry (S, v) counting weighted pairs with set S and value v. Stored flat,
// S-major with stride m+1.
template <typename T>
class IndexedSetFunction {
  static_assert(std::is_same_v<T, std::int64_t> || std::is_same_v<T, double>);

 public:
  IndexedSetFunction(int n, int m, std::vector<T> values)
      : n_(n), m_(m), values_(std::move(values)) {
    if (n < 0 || n > max_ground_set_size())
      throw std::invalid_argument("IndexedSetFunction: ground-set size out of range");
    if (m < 0) throw std::invalid_argument("IndexedSetFunction: max value must be non-negative");
    const std::uint64_t expect = (std::uint64_t{1} << n) * (std::uint64_t(m) + 1);
    if (values_.size() != expect)
      throw std::invalid_argument("IndexedSetFunction: expected " + std::to_string(expect) +
                                  " grid entries, got " + std::to_string(values_.size()));
  }

  static IndexedSetFunction zero(int n, int m) {
    return IndexedSetFunction(n, m, std::vector<T>((std::uint64_t{1} << n) * (m + 1), T{}));
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::uint64_t set_count() const noexcept { return std::uint64_t{1} << n_; }
  const std::vector<T>& values() const noexcept { return values_; }

  T at(std::uint64_t set, int value) const { return values_[set * (m_ + 1) + value]; }
  T& at(std::uint64_t set, int value) { return values_[set * (m_ + 1) + value]; }

  friend bool operator==(const IndexedSetFunction&, const IndexedSetFunction&) = default;

 private:
  int n_;
  int m_;
  std::vector<T> values_;
};

// h(S, t) = sum over T subset of S, i+j = t, of f(T, i) g(S\T, j), for all
// t up to 2m; the output grid has max value 2m. Direct submask-and-value
// enumeration, O(3^n m^2).
template <typename T>
IndexedSetFunction<T> disjoint_set_sum_naive(const IndexedSetFunction<T>& f,
                                             const IndexedSetFunction<T>& g);

// Same map through a single combined transform: each rank slice of the grid
// is embedded into a flat array of length 2^n * W (value field in the low
// bits, subset field in the high bits) with W the smallest power of two
// strictly greater than 2m, so index addition adds values and subsets
// independently and value carries cannot reach the subset field. One
// forward FFT per rank slice and one inverse FFT per target rank:
// O(2^n m n^2) instead of n^2 separate sequence convolutions' O(2^n m n^3).
template <typename T>
IndexedSetFunction<double> disjoint_set_sum_fft(const IndexedSetFunction<T>& f,
                                                const IndexedSetFunction<T>& g);

// Nearest-integer snap with the same 0.25 safety threshold as the
// subset-convolution rounding step. Reports the largest deviation seen.
IndexedSetFunction<std::int64_t> round_to_integers(const IndexedSetFunction<double>& h,
                                                   double* max_deviation = nullptr);

// Value-field width used by the combined transform.
std::uint64_t disjoint_sum_field_width(int m);

extern template IndexedSetFunction<std::int64_t> disjoint_set_sum_naive(
    const IndexedSetFunction<std::int64_t>&, const IndexedSetFunction<std::int64_t>&);
extern template IndexedSetFunction<double> disjoint_set_sum_naive(const IndexedSetFunction<double>&,
                                                                  const IndexedSetFunction<double>&);
extern template IndexedSetFunction<double> disjoint_set_sum_fft(
    const IndexedSetFunction<std::int64_t>&, const IndexedSetFunction<std::int64_t>&);
extern template IndexedSetFunction<double> disjoint_set_sum_fft(const IndexedSetFunction<double>&,
                                                                const IndexedSetFunction<double>&);

}  // namespace subconv
