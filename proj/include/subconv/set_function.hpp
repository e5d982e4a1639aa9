#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "subconv/rng.hpp"

namespace subconv {

enum class ScalarKind { Int64, Real };

// Largest supported ground-set size. Defaults to 22 (the FFT engine peaks at
// ~2*(n+1)*2^n complex scalars, about 2.3 GiB at n = 22); override with the
// environment variable SUBCONV_MAX_N. Read once per process.
int max_ground_set_size();

// Dense set function on the subset lattice of order n: values[S] holds f(S),
// where subset S of {1..n} is encoded as the bitmask with bit i-1 set iff
// element i is in S. Index 0 is the empty set, index 2^n - 1 the full set,
// so popcount(S) equals |S|. Immutable after construction.
template <typename T>
class SetFunction {
  static_assert(std::is_same_v<T, std::int64_t> || std::is_same_v<T, double>,
                "scalar kind must be int64 or double");

 public:
  SetFunction() : n_(0), values_(1, T{}) {}

  SetFunction(int n, std::vector<T> values) : n_(n), values_(std::move(values)) {
    if (n < 0 || n > max_ground_set_size())
      throw std::invalid_argument("SetFunction: ground-set size " + std::to_string(n) +
                                  " outside [0, " + std::to_string(max_ground_set_size()) + "]");
    if (values_.size() != (std::uint64_t{1} << n))
      throw std::invalid_argument("SetFunction: expected 2^" + std::to_string(n) + " = " +
                                  std::to_string(std::uint64_t{1} << n) + " values, got " +
                                  std::to_string(values_.size()));
  }

  static SetFunction zero(int n) { return SetFunction(n, std::vector<T>(std::uint64_t{1} << n, T{})); }

  // Identity element of the subset-convolution ring: 1 at the empty set.
  static SetFunction unit(int n) {
    std::vector<T> v(std::uint64_t{1} << n, T{});
    v[0] = T{1};
    return SetFunction(n, std::move(v));
  }

  int n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return values_.size(); }
  const std::vector<T>& values() const noexcept { return values_; }
  T operator[](std::uint64_t mask) const { return values_[mask]; }

  static constexpr ScalarKind kind() noexcept {
    return std::is_same_v<T, std::int64_t> ? ScalarKind::Int64 : ScalarKind::Real;
  }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  int n_;
  std::vector<T> values_;
};

// The n+1 rank slices of a set function: ranks[i] keeps the values on sets
// of cardinality exactly i and is zero elsewhere.
template <typename T>
struct RankedFamily {
  int n = 0;
  std::vector<SetFunction<T>> ranks;
};

namespace detail {

// Visit every n-bit mask of the given popcount in increasing order
// (Gosper's hack).
template <typename F>
void for_each_mask_of_rank(int n, int rank, F&& fn) {
  const std::uint64_t size = std::uint64_t{1} << n;
  if (rank == 0) {
    fn(std::uint64_t{0});
    return;
  }
  if (rank > n) return;
  std::uint64_t mask = (std::uint64_t{1} << rank) - 1;
  while (mask < size) {
    fn(mask);
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = r | (((r ^ mask) >> 2) / c);
  }
}

}  // namespace detail

// Split f into its n+1 rank slices.
template <typename T>
RankedFamily<T> chop(const SetFunction<T>& f) {
  const int n = f.n();
  RankedFamily<T> family;
  family.n = n;
  family.ranks.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<T> slice(f.size(), T{});
    detail::for_each_mask_of_rank(n, i, [&](std::uint64_t mask) { slice[mask] = f[mask]; });
    family.ranks.emplace_back(n, std::move(slice));
  }
  return family;
}

// Keep only the entries of cardinality exactly `rank`; zero the rest.
template <typename T>
SetFunction<T> clean_rank(const SetFunction<T>& h, int rank) {
  if (rank < 0 || rank > h.n())
    throw std::invalid_argument("clean_rank: rank " + std::to_string(rank) +
                                " outside [0, " + std::to_string(h.n()) + "]");
  std::vector<T> out(h.size(), T{});
  detail::for_each_mask_of_rank(h.n(), rank, [&](std::uint64_t mask) { out[mask] = h[mask]; });
  return SetFunction<T>(h.n(), std::move(out));
}

// Entrywise sum of the n+1 members. Accepts any family of matching sizes;
// the members need not be rank-pure.
template <typename T>
SetFunction<T> assemble(const RankedFamily<T>& family) {
  if (family.ranks.size() != static_cast<std::size_t>(family.n) + 1)
    throw std::invalid_argument("assemble: expected " + std::to_string(family.n + 1) +
                                " members, got " + std::to_string(family.ranks.size()));
  std::vector<T> out(std::uint64_t{1} << family.n, T{});
  for (const auto& member : family.ranks) {
    if (member.n() != family.n)
      throw std::invalid_argument("assemble: member size mismatch");
    const auto& v = member.values();
    for (std::uint64_t s = 0; s < out.size(); ++s) out[s] += v[s];
  }
  return SetFunction<T>(family.n, std::move(out));
}

// Seeded uniform instance with values in [-value_bound, value_bound].
// Deterministic for a fixed (n, seed, value_bound, scalar kind).
template <typename T>
SetFunction<T> random_instance(int n, std::uint64_t seed, T value_bound) {
  if (!(value_bound > T{0})) throw std::invalid_argument("random_instance: value_bound must be positive");
  SplitMix64 rng(seed);
  std::vector<T> values(std::uint64_t{1} << n);
  for (auto& v : values) {
    if constexpr (std::is_same_v<T, std::int64_t>)
      v = rng.next_int(-value_bound, value_bound);
    else
      v = rng.next_symmetric(value_bound);
  }
  return SetFunction<T>(n, std::move(values));
}

}  // namespace subconv
