// Brute-force reference implementations used only by the test suites. Each
// follows the defining formula directly and shares no code with the library
// paths it checks.
#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracles {

// zeta by definition: out[S] = sum over T subset of S of f[T].
template <typename T>
std::vector<T> brute_zeta(const std::vector<T>& f) {
  std::vector<T> out(f.size(), T{});
  for (std::uint64_t s = 0; s < f.size(); ++s)
    for (std::uint64_t t = 0; t < f.size(); ++t)
      if ((t & s) == t) out[s] += f[t];
  return out;
}

// Moebius by definition: out[S] = sum over T subset of S of (-1)^|S\T| f[T].
template <typename T>
std::vector<T> brute_mobius(const std::vector<T>& f) {
  std::vector<T> out(f.size(), T{});
  for (std::uint64_t s = 0; s < f.size(); ++s)
    for (std::uint64_t t = 0; t < f.size(); ++t)
      if ((t & s) == t) {
        const int parity = std::popcount(s & ~t) & 1;
        out[s] += parity ? -f[t] : f[t];
      }
  return out;
}

// Subset convolution over all disjoint index pairs (not a submask loop).
template <typename T>
std::vector<T> disjoint_pair_convolution(const std::vector<T>& f, const std::vector<T>& g) {
  std::vector<T> h(f.size(), T{});
  for (std::uint64_t a = 0; a < f.size(); ++a)
    for (std::uint64_t b = 0; b < g.size(); ++b)
      if ((a & b) == 0) h[a | b] += f[a] * g[b];
  return h;
}

// O(N^2) DFT straight from the sum.
inline std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& x,
                                                   bool inverse) {
  const std::size_t len = x.size();
  std::vector<std::complex<double>> out(len);
  for (std::size_t j = 0; j < len; ++j) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t t = 0; t < len; ++t) {
      const double angle =
          (inverse ? 2.0 : -2.0) * std::numbers::pi * double(j) * double(t) / double(len);
      sum += x[t] * std::complex<double>{std::cos(angle), std::sin(angle)};
    }
    out[j] = inverse ? sum / double(len) : sum;
  }
  return out;
}

inline std::vector<double> schoolbook_linear(const std::vector<double>& x,
                                             const std::vector<double>& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<double> z(x.size() + y.size() - 1, 0.0);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) z[a + b] += x[a] * y[b];
  return z;
}

inline std::vector<double> direct_cyclic(const std::vector<double>& x,
                                         const std::vector<double>& y) {
  const std::size_t len = x.size();
  std::vector<double> z(len, 0.0);
  for (std::size_t a = 0; a < len; ++a)
    for (std::size_t b = 0; b < len; ++b) z[(a + b) % len] += x[a] * y[b];
  return z;
}

// Disjoint set sum over all (disjoint pair, value pair) quadruples.
template <typename T>
std::vector<std::vector<T>> triple_loop_disjoint_sum(const std::vector<std::vector<T>>& f,
                                                     const std::vector<std::vector<T>>& g, int m) {
  const std::uint64_t sets = f.size();
  std::vector<std::vector<T>> h(sets, std::vector<T>(2 * m + 1, T{}));
  for (std::uint64_t a = 0; a < sets; ++a)
    for (std::uint64_t b = 0; b < sets; ++b) {
      if ((a & b) != 0) continue;
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) h[a | b][i + j] += f[a][i] * g[b][j];
    }
  return h;
}

}  // namespace oracles
