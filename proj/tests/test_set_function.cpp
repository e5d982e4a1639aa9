#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "subconv/set_function.hpp"

using namespace subconv;

namespace {
using IntFn = SetFunction<std::int64_t>;
}

TEST_CASE("construction validates the value count") {
  CHECK_NOTHROW(IntFn(2, {1, 2, 3, 4}));
  CHECK_THROWS_AS(IntFn(2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(IntFn(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(IntFn(max_ground_set_size() + 1, {}), std::invalid_argument);
}

TEST_CASE("chop splits by cardinality") {
  const auto family = chop(IntFn(2, {1, 2, 3, 4}));
  REQUIRE(family.ranks.size() == 3);
  CHECK(family.ranks[0].values() == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(family.ranks[1].values() == std::vector<std::int64_t>{0, 2, 3, 0});
  CHECK(family.ranks[2].values() == std::vector<std::int64_t>{0, 0, 0, 4});
}

TEST_CASE("chop on the one-point lattice") {
  const auto family = chop(IntFn(0, {7}));
  REQUIRE(family.ranks.size() == 1);
  CHECK(family.ranks[0].values() == std::vector<std::int64_t>{7});
}

TEST_CASE("assemble inverts chop") {
  for (int n = 0; n <= 12; ++n) {
    const auto fi = random_instance<std::int64_t>(n, derive_seed(1, n, 0), 100);
    CHECK(assemble(chop(fi)) == fi);
    const auto fd = random_instance<double>(n, derive_seed(2, n, 0), 1.0);
    CHECK(assemble(chop(fd)) == fd);
  }
}

TEST_CASE("chop partitions every index") {
  const auto f = random_instance<std::int64_t>(7, 42, 9);
  const auto family = chop(f);
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    int nonzero = 0;
    for (int i = 0; i <= 7; ++i) {
      if (family.ranks[i][s] != 0) {
        ++nonzero;
        CHECK(i == std::popcount(s));
      }
    }
    CHECK(nonzero == (f[s] != 0 ? 1 : 0));
  }
}

TEST_CASE("assemble accepts relaxed families and checks sizes") {
  RankedFamily<std::int64_t> family;
  family.n = 1;
  family.ranks = {IntFn(1, {1, 0}), IntFn(1, {0, 2})};
  CHECK(assemble(family).values() == std::vector<std::int64_t>{1, 2});

  RankedFamily<std::int64_t> zero3;
  zero3.n = 3;
  zero3.ranks.assign(4, IntFn::zero(3));
  CHECK(assemble(zero3) == IntFn::zero(3));

  RankedFamily<std::int64_t> bad;
  bad.n = 1;
  bad.ranks = {IntFn(1, {1, 0}), IntFn::zero(2)};
  CHECK_THROWS_AS(assemble(bad), std::invalid_argument);

  RankedFamily<std::int64_t> short_family;
  short_family.n = 2;
  short_family.ranks = {IntFn::zero(2)};
  CHECK_THROWS_AS(assemble(short_family), std::invalid_argument);
}

TEST_CASE("clean_rank keeps exactly one cardinality") {
  const IntFn h(2, {9, 8, 7, 6});
  CHECK(clean_rank(h, 0).values() == std::vector<std::int64_t>{9, 0, 0, 0});
  CHECK(clean_rank(h, 1).values() == std::vector<std::int64_t>{0, 8, 7, 0});
  CHECK(clean_rank(h, 2).values() == std::vector<std::int64_t>{0, 0, 0, 6});
  CHECK_THROWS_AS(clean_rank(h, 3), std::invalid_argument);
  CHECK_THROWS_AS(clean_rank(h, -1), std::invalid_argument);
}

TEST_CASE("clean_rank is idempotent and decomposes the identity") {
  for (int n = 0; n <= 9; ++n) {
    const auto h = random_instance<std::int64_t>(n, derive_seed(3, n, 0), 100);
    std::vector<std::int64_t> sum(h.size(), 0);
    for (int k = 0; k <= n; ++k) {
      const auto cleaned = clean_rank(h, k);
      CHECK(clean_rank(cleaned, k) == cleaned);
      for (std::uint64_t s = 0; s < h.size(); ++s) sum[s] += cleaned[s];
    }
    CHECK(sum == h.values());
  }
}
