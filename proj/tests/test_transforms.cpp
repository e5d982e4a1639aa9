#include <doctest.h>

#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "subconv/transforms.hpp"

using namespace subconv;

namespace {
using IntFn = SetFunction<std::int64_t>;
}

TEST_CASE("zeta of a small function") {
  CHECK(zeta(IntFn(2, {1, 2, 3, 4})).values() == std::vector<std::int64_t>{1, 3, 4, 10});
  CHECK(zeta(IntFn(0, {5})).values() == std::vector<std::int64_t>{5});
}

TEST_CASE("zeta of the empty-set indicator is all ones") {
  const auto z = zeta(IntFn::unit(4));
  for (const auto v : z.values()) CHECK(v == 1);
}

TEST_CASE("mobius inverts the small example") {
  CHECK(mobius(IntFn(2, {1, 3, 4, 10})).values() == std::vector<std::int64_t>{1, 2, 3, 4});
  const auto ones = IntFn(3, std::vector<std::int64_t>(8, 1));
  CHECK(mobius(ones) == IntFn::unit(3));
}

TEST_CASE("zeta and mobius are exact inverses on integers") {
  for (int n = 0; n <= 14; ++n) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto f = random_instance<std::int64_t>(n, derive_seed(5, n, seed), 1000000);
      CHECK(mobius(zeta(f)) == f);
      CHECK(zeta(mobius(f)) == f);
    }
  }
}

TEST_CASE("transforms match their defining sums") {
  for (int n = 0; n <= 8; ++n) {
    const auto f = random_instance<std::int64_t>(n, derive_seed(6, n, 0), 500);
    CHECK(zeta(f).values() == oracles::brute_zeta(f.values()));
    CHECK(mobius(f).values() == oracles::brute_mobius(f.values()));
  }
}

TEST_CASE("zeta is linear") {
  const int n = 6;
  const auto f = random_instance<std::int64_t>(n, 100, 50);
  const auto g = random_instance<std::int64_t>(n, 101, 50);
  std::vector<std::int64_t> combo(f.size());
  for (std::uint64_t s = 0; s < f.size(); ++s) combo[s] = 3 * f[s] + g[s];
  const auto lhs = zeta(IntFn(n, std::move(combo)));
  const auto zf = zeta(f);
  const auto zg = zeta(g);
  for (std::uint64_t s = 0; s < f.size(); ++s) CHECK(lhs[s] == 3 * zf[s] + zg[s]);
}

TEST_CASE("zeta grows pointwise on non-negative input") {
  const int n = 8;
  auto raw = random_instance<std::int64_t>(n, 55, 40).values();
  for (auto& v : raw) v = v < 0 ? -v : v;
  const IntFn f(n, std::move(raw));
  const auto z = zeta(f);
  for (std::uint64_t s = 0; s < f.size(); ++s) CHECK(z[s] >= f[s]);
}
