// Disjoint Set Sum: combine two weighted (set, value) families over disjoint
// set unions and value sums, h(S, t) = sum_{T subset S, i+j=t} f(T,i) g(S\T,j).
//
// The fast routine packs each grid row into a flat index S*W + v with W a
// power of two strictly greater than 2m. Index addition then adds value and
// subset fields independently (value sums stay below W, so no carry reaches
// the subset bits), and the whole rank-k combination collapses into the same
// chop / forward / accumulate / single-inverse cycle as the subset
// convolution engine, one linear factor cheaper than transforming each of
// the n^2 rank pairs separately.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "subconv/convolution.hpp"
#include "subconv/disjoint_sum.hpp"
#include "subconv/fft.hpp"

namespace subconv {

namespace {

using Complex = std::complex<double>;

template <typename T>
void require_same_shape(const IndexedSetFunction<T>& f, const IndexedSetFunction<T>& g,
                        const char* routine) {
  if (f.n() != g.n() || f.m() != g.m())
    throw std::invalid_argument(std::string(routine) + ": grid shape mismatch (n " +
                                std::to_string(f.n()) + " vs " + std::to_string(g.n()) + ", m " +
                                std::to_string(f.m()) + " vs " + std::to_string(g.m()) + ")");
}

std::uint64_t grid_max_abs(const std::vector<std::int64_t>& v) {
  std::uint64_t best = 0;
  for (const std::int64_t x : v) {
    const std::uint64_t a = x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
    if (a > best) best = a;
  }
  return best;
}

}  // namespace

std::uint64_t disjoint_sum_field_width(int m) {
  return std::bit_ceil(std::uint64_t(2 * m) + 1);
}

template <typename T>
IndexedSetFunction<T> disjoint_set_sum_naive(const IndexedSetFunction<T>& f,
                                             const IndexedSetFunction<T>& g) {
  require_same_shape(f, g, "disjoint_set_sum_naive");
  const int n = f.n();
  const int m = f.m();
  const std::uint64_t sets = f.set_count();

  if constexpr (std::is_same_v<T, std::int64_t>) {
    // Each output cell sums at most 2^n * (m+1) products.
    detail::check_product_bound((static_cast<unsigned __int128>(1) << n) * (m + 1),
                                grid_max_abs(f.values()), grid_max_abs(g.values()),
                                "disjoint_set_sum_naive");
  }

  auto out = IndexedSetFunction<T>::zero(n, 2 * m);
  for (std::uint64_t s = 0; s < sets; ++s) {
    std::uint64_t t = s;
    while (true) {
      const std::uint64_t rest = s ^ t;
      for (int i = 0; i <= m; ++i) {
        const T fi = f.at(t, i);
        if (fi == T{}) continue;
        for (int j = 0; j <= m; ++j) out.at(s, i + j) += fi * g.at(rest, j);
      }
      if (t == 0) break;
      t = (t - 1) & s;
    }
  }
  return out;
}

template <typename T>
IndexedSetFunction<double> disjoint_set_sum_fft(const IndexedSetFunction<T>& f,
                                                const IndexedSetFunction<T>& g) {
  require_same_shape(f, g, "disjoint_set_sum_fft");
  const int n = f.n();
  const int m = f.m();
  const int ranks = n + 1;
  const std::uint64_t sets = f.set_count();
  const std::uint64_t width = disjoint_sum_field_width(m);
  const std::uint64_t len = sets * width;

  const std::uint64_t len_limit = std::uint64_t{1} << max_ground_set_size();
  if (len > len_limit)
    throw std::invalid_argument("disjoint_set_sum_fft: combined transform length " +
                                std::to_string(len) + " exceeds the limit " +
                                std::to_string(len_limit));

  detail::AlignedComplexBuffer fhat(std::size_t(ranks) * len);
  detail::AlignedComplexBuffer ghat(std::size_t(ranks) * len);
  detail::AlignedComplexBuffer acc(len);

  // Embed each rank slice of the grids at flat index S*W + v and transform.
  for (int i = 0; i < ranks; ++i) {
    Complex* fi = fhat.data() + std::size_t(i) * len;
    Complex* gi = ghat.data() + std::size_t(i) * len;
    for (std::uint64_t j = 0; j < len; ++j) fi[j] = gi[j] = Complex(0.0, 0.0);
    detail::for_each_mask_of_rank(n, i, [&](std::uint64_t s) {
      for (int v = 0; v <= m; ++v) {
        fi[s * width + v] = Complex(double(f.at(s, v)), 0.0);
        gi[s * width + v] = Complex(double(g.at(s, v)), 0.0);
      }
    });
    detail::fft_unnormalized(fi, len, false);
    detail::fft_unnormalized(gi, len, false);
  }

  auto out = IndexedSetFunction<double>::zero(n, 2 * m);
  const double scale = 1.0 / double(len);
  for (int k = 0; k < ranks; ++k) {
    const Complex* a0 = fhat.data();
    const Complex* b0 = ghat.data() + std::size_t(k) * len;
    for (std::uint64_t j = 0; j < len; ++j) {
      const double ar = a0[j].real(), ai = a0[j].imag();
      const double br = b0[j].real(), bi = b0[j].imag();
      acc[j] = Complex(ar * br - ai * bi, ar * bi + ai * br);
    }
    for (int i = 1; i <= k; ++i) {
      const Complex* a = fhat.data() + std::size_t(i) * len;
      const Complex* b = ghat.data() + std::size_t(k - i) * len;
      for (std::uint64_t j = 0; j < len; ++j) {
        const double ar = a[j].real(), ai = a[j].imag();
        const double br = b[j].real(), bi = b[j].imag();
        acc[j] += Complex(ar * br - ai * bi, ar * bi + ai * br);
      }
    }
    detail::fft_unnormalized(acc.data(), len, true);
    detail::for_each_mask_of_rank(n, k, [&](std::uint64_t s) {
      for (int v = 0; v <= 2 * m; ++v) out.at(s, v) = acc[s * width + v].real() * scale;
    });
  }
  return out;
}

IndexedSetFunction<std::int64_t> round_to_integers(const IndexedSetFunction<double>& h,
                                                   double* max_deviation) {
  const auto& values = h.values();
  std::vector<std::int64_t> out(values.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double rounded = std::nearbyint(values[i]);
    const double deviation = std::abs(values[i] - rounded);
    if (deviation > worst || std::isnan(deviation)) worst = deviation;
    out[i] = static_cast<std::int64_t>(rounded);
  }
  if (max_deviation != nullptr) *max_deviation = worst;
  if (!(worst <= 0.25))
    throw RoundingUnsafeError("disjoint sum rounding: deviation " + std::to_string(worst) +
                              " exceeds 0.25");
  return IndexedSetFunction<std::int64_t>(h.n(), h.m(), std::move(out));
}

template IndexedSetFunction<std::int64_t> disjoint_set_sum_naive(
    const IndexedSetFunction<std::int64_t>&, const IndexedSetFunction<std::int64_t>&);
template IndexedSetFunction<double> disjoint_set_sum_naive(const IndexedSetFunction<double>&,
                                                           const IndexedSetFunction<double>&);
template IndexedSetFunction<double> disjoint_set_sum_fft(const IndexedSetFunction<std::int64_t>&,
                                                         const IndexedSetFunction<std::int64_t>&);
template IndexedSetFunction<double> disjoint_set_sum_fft(const IndexedSetFunction<double>&,
                                                         const IndexedSetFunction<double>&);

}  // namespace subconv
