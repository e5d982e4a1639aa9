#pragma once

#include <cstdint>
#include <vector>

#include "subconv/set_function.hpp"

namespace subconv {
namespace detail {

// Yates' sweep: one pass per bit position, O(2^n n) additions in place.
template <typename T>
void zeta_sweep(std::vector<T>& v, int n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  for (int d = 0; d < n; ++d) {
    const std::uint64_t bit = std::uint64_t{1} << d;
    for (std::uint64_t s = 0; s < size; ++s)
      if (s & bit) v[s] += v[s ^ bit];
  }
}

template <typename T>
void mobius_sweep(std::vector<T>& v, int n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  for (int d = 0; d < n; ++d) {
    const std::uint64_t bit = std::uint64_t{1} << d;
    for (std::uint64_t s = 0; s < size; ++s)
      if (s & bit) v[s] -= v[s ^ bit];
  }
}

}  // namespace detail

// Subset-sum (zeta) transform: out[S] = sum over T subset of S of f[T].
template <typename T>
SetFunction<T> zeta(const SetFunction<T>& f) {
  std::vector<T> v = f.values();
  detail::zeta_sweep(v, f.n());
  return SetFunction<T>(f.n(), std::move(v));
}

// Inverse of zeta: out[S] = sum over T subset of S of (-1)^|S\T| f[T].
// Exact on int64; on doubles the alternating signs cancel and the result
// carries the rounding error this library's precision study measures.
template <typename T>
SetFunction<T> mobius(const SetFunction<T>& f) {
  std::vector<T> v = f.values();
  detail::mobius_sweep(v, f.n());
  return SetFunction<T>(f.n(), std::move(v));
}

}  // namespace subconv
