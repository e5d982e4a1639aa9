// The O(3^n) oracle engine. Kept in its own translation unit: its inner loop
// is latency-bound on the accumulator chain and measurably regresses when
// the compiler contracts the multiply-add (see src/CMakeLists.txt).

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "subconv/convolution.hpp"

namespace subconv {

namespace detail {

std::uint64_t max_abs_int64(const std::vector<std::int64_t>& values) {
  std::uint64_t best = 0;
  for (const std::int64_t v : values) {
    const std::uint64_t a = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    if (a > best) best = a;
  }
  return best;
}

void check_product_bound(unsigned __int128 terms, std::uint64_t bf, std::uint64_t bg,
                         const char* engine) {
  if (bf == 0 || bg == 0 || terms == 0) return;
  const unsigned __int128 limit = static_cast<unsigned __int128>(INT64_MAX);
  // terms * bf * bg <= INT64_MAX, evaluated without overflowing 128 bits.
  if (static_cast<unsigned __int128>(bf) * bg > limit / terms)
    throw std::invalid_argument(std::string(engine) +
                                ": integer inputs may overflow 64-bit accumulation; "
                                "reduce the value bound or use the double scalar kind");
}

}  // namespace detail

template <typename T>
SetFunction<T> subset_convolve_naive(const SetFunction<T>& f, const SetFunction<T>& g) {
  detail::require_same_n(f, g, "subset_convolve_naive");
  const int n = f.n();
  const std::uint64_t size = f.size();

  if constexpr (std::is_same_v<T, std::int64_t>) {
    detail::check_product_bound(static_cast<unsigned __int128>(1) << n,
                                detail::max_abs_int64(f.values()),
                                detail::max_abs_int64(g.values()), "subset_convolve_naive");
  }

  const T* fv = f.values().data();
  const T* gv = g.values().data();
  std::vector<T> out(size);
  for (std::uint64_t s = 0; s < size; ++s) {
    T acc = fv[0] * gv[s];  // T = empty set
    for (std::uint64_t t = s; t != 0; t = (t - 1) & s) acc += fv[t] * gv[s ^ t];
    out[s] = acc;
  }
  return SetFunction<T>(n, std::move(out));
}

template SetFunction<std::int64_t> subset_convolve_naive(const SetFunction<std::int64_t>&,
                                                         const SetFunction<std::int64_t>&);
template SetFunction<double> subset_convolve_naive(const SetFunction<double>&,
                                                   const SetFunction<double>&);

}  // namespace subconv
