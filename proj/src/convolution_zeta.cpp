// Classic ranked zeta/Moebius engine.

#include <cmath>
#include <cstdint>
#include <vector>

#include "subconv/convolution.hpp"
#include "subconv/transforms.hpp"

namespace subconv {

namespace {

template <typename T>
double max_abs(const std::vector<T>& v) {
  double best = 0.0;
  for (const T x : v) best = std::max(best, std::abs(static_cast<double>(x)));
  return best;
}

template <typename T, bool WithStats>
SetFunction<T> convolve_zeta_impl(const SetFunction<T>& f, const SetFunction<T>& g,
                                  RunReport* report) {
  const int n = f.n();
  const std::uint64_t size = f.size();

  // Ranked zeta transforms of both inputs.
  std::vector<std::vector<T>> zf(n + 1), zg(n + 1);
  double max_magnitude = 0.0;
  for (int i = 0; i <= n; ++i) {
    zf[i].assign(size, T{});
    zg[i].assign(size, T{});
    detail::for_each_mask_of_rank(n, i, [&](std::uint64_t mask) {
      zf[i][mask] = f[mask];
      zg[i][mask] = g[mask];
    });
    detail::zeta_sweep(zf[i], n);
    detail::zeta_sweep(zg[i], n);
    if constexpr (WithStats) {
      max_magnitude = std::max({max_magnitude, max_abs(zf[i]), max_abs(zg[i])});
    }
  }

  // Per target rank: combine transforms pointwise, invert, keep rank-k values.
  std::vector<T> out(size, T{});
  std::vector<T> acc(size);
  for (int k = 0; k <= n; ++k) {
    const T* a0 = zf[0].data();
    const T* b0 = zg[k].data();
    for (std::uint64_t s = 0; s < size; ++s) acc[s] = a0[s] * b0[s];
    for (int i = 1; i <= k; ++i) {
      const T* a = zf[i].data();
      const T* b = zg[k - i].data();
      for (std::uint64_t s = 0; s < size; ++s) acc[s] += a[s] * b[s];
    }
    if constexpr (WithStats) max_magnitude = std::max(max_magnitude, max_abs(acc));
    detail::mobius_sweep(acc, n);
    detail::for_each_mask_of_rank(n, k, [&](std::uint64_t mask) { out[mask] = acc[mask]; });
  }

  if (report != nullptr) {
    report->algo = "zeta";
    report->n = n;
    report->max_intermediate_magnitude = max_magnitude;
  }
  return SetFunction<T>(n, std::move(out));
}

}  // namespace

template <typename T>
SetFunction<T> subset_convolve_zeta(const SetFunction<T>& f, const SetFunction<T>& g,
                                    RunReport* report) {
  detail::require_same_n(f, g, "subset_convolve_zeta");

  if constexpr (std::is_same_v<T, std::int64_t>) {
    // Ranked zeta values reach 2^n * B, their products 2^(2n) * Bf * Bg, and
    // each accumulator sums at most n+1 of them.
    const int n = f.n();
    detail::check_product_bound(
        (static_cast<unsigned __int128>(n) + 1) << (2 * n), detail::max_abs_int64(f.values()),
        detail::max_abs_int64(g.values()), "subset_convolve_zeta");
  }

  return report != nullptr ? convolve_zeta_impl<T, true>(f, g, report)
                           : convolve_zeta_impl<T, false>(f, g, nullptr);
}

template SetFunction<std::int64_t> subset_convolve_zeta(const SetFunction<std::int64_t>&,
                                                        const SetFunction<std::int64_t>&, RunReport*);
template SetFunction<double> subset_convolve_zeta(const SetFunction<double>&,
                                                  const SetFunction<double>&, RunReport*);

}  // namespace subconv
