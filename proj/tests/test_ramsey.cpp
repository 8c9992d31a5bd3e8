#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fsw/ramsey.hpp"
#include "helpers.hpp"

using namespace fsw;
using fswtest::bs;

namespace {

coloring constant_coloring(unsigned ground, unsigned colors, std::uint8_t value) {
  coloring c{ground, colors, {}};
  c.cells.assign((std::size_t(1) << ground) - 1, value);
  return c;
}

bfamily basis(unsigned n) {
  bfamily x;
  for (unsigned i = 0; i < n; ++i) x.push_back(bs({i}));
  return x;
}

}  // namespace

TEST_CASE("find_monochromatic_fu") {
  SECTION("m=1 always succeeds") {
    auto r = find_monochromatic_fu(constant_coloring(1, 2, 0), 1);
    REQUIRE(r.has_value());
    CHECK(r->parts == std::vector<bset>{bs({0})});
  }
  SECTION("constant coloring, m=2, ground 2") {
    auto r = find_monochromatic_fu(constant_coloring(2, 2, 1), 2);
    REQUIRE(r.has_value());
    CHECK(r->parts == std::vector<bset>{bs({0}), bs({1})});
    CHECK(r->color == 1);
  }
  SECTION("m=2 needs two disjoint parts, so ground 1 fails") {
    CHECK_FALSE(find_monochromatic_fu(constant_coloring(1, 2, 0), 2).has_value());
  }
}

TEST_CASE("folkman_number trivial rows") {
  auto one = folkman_number(1, 2, 4);
  REQUIRE(one.value.has_value());
  CHECK(*one.value == 1);

  for (std::size_t m = 1; m <= 3; ++m) {
    auto mono = folkman_number(m, 1, 6);
    REQUIRE(mono.value.has_value());
    CHECK(*mono.value == m);
  }
}

TEST_CASE("folkman_number(2, 2) is 5, with an avoiding coloring at 4") {
  auto r = folkman_number(2, 2, 6);
  REQUIRE(r.value.has_value());
  CHECK(*r.value == 5);
  REQUIRE(r.avoiding_prev.has_value());
  CHECK(r.avoiding_prev->ground == 4);
  // the certificate really avoids
  CHECK_FALSE(find_monochromatic_fu(*r.avoiding_prev, 2).has_value());
}

TEST_CASE("folkman_number is monotone in m and in colors") {
  auto v12 = folkman_number(1, 2, 6), v22 = folkman_number(2, 2, 6);
  auto v21 = folkman_number(2, 1, 6);
  REQUIRE((v12.value && v22.value && v21.value));
  CHECK(*v12.value <= *v22.value);
  CHECK(*v21.value <= *v22.value);
}

TEST_CASE("folkman_number exhaustion reports the best witness") {
  auto r = folkman_number(2, 2, 3);  // the answer is 5, so 3 exhausts
  CHECK_FALSE(r.value.has_value());
  REQUIRE(r.avoiding_prev.has_value());
  CHECK(r.avoiding_prev->ground == 3);
  CHECK_FALSE(find_monochromatic_fu(*r.avoiding_prev, 2).has_value());
}

TEST_CASE("pigeonhole_collision") {
  std::vector<int> twice{7, 7};
  auto p = pigeonhole_collision(twice);
  REQUIRE(p.has_value());
  CHECK(*p == std::make_pair(std::size_t(0), std::size_t(1)));

  std::vector<int> distinct{1, 2, 3};
  CHECK_FALSE(pigeonhole_collision(distinct).has_value());

  // k+1 tags over k values force a pair
  std::vector<int> forced{0, 1, 2, 1};
  auto q = pigeonhole_collision(forced);
  REQUIRE(q.has_value());
  CHECK(*q == std::make_pair(std::size_t(1), std::size_t(3)));
}

TEST_CASE("partition_adequate") {
  bfamily x = basis(static_cast<unsigned>(find_suitable_base_need(4)));
  bfamily y = find_suitable(x, 4);
  // the 4-block of Y is its own 4-witness; FS of it is the ambient set
  bfamily block(y.end() - 4, y.end());
  adequacy_witness wit;
  wit.pairs = {{x, y}};
  wit.m = 4;
  wit.a_seq = block;
  wit.per_pair = {{6, 7, 8, 9}};  // the block's positions in Y
  auto a = fs_b(block);
  REQUIRE(validate_adequacy_witness(ambient_of(a), wit).ok);

  SECTION("A0 = A lands in cell 0") {
    auto [cell, w] = partition_adequate(a, a, {{x, y}}, 2, wit);
    CHECK(cell == 0);
    CHECK(validate_adequacy_witness(ambient_of(a), w).ok);
  }
  SECTION("A0 = {} lands in cell 1") {
    auto [cell, w] = partition_adequate(a, {}, {{x, y}}, 2, wit);
    CHECK(cell == 1);
  }
  SECTION("random partitions always yield a revalidating cell") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<bset> a0;
      for (bset v : a)
        if (rng() & 1) a0.push_back(v);
      auto [cell, w] = partition_adequate(a, a0, {{x, y}}, 2, wit);
      std::vector<bset> cellset;
      auto in0 = ambient_of(a0);
      for (bset v : a)
        if ((cell == 0) == in0(v)) cellset.push_back(v);
      CHECK(validate_adequacy_witness(ambient_of(cellset), w).ok);
    }
  }
  SECTION("a mismatched pair family is rejected") {
    CHECK_THROWS_AS(partition_adequate(a, a, {}, 2, wit), hypothesis_error);
  }
}

TEST_CASE("partition_adequate reports InsufficientM") {
  // M = 4 is below the forcing bound: color FS(a) by the avoiding coloring
  bfamily x = basis(static_cast<unsigned>(find_suitable_base_need(4)));
  bfamily y = find_suitable(x, 4);
  bfamily block(y.end() - 4, y.end());
  adequacy_witness wit{{{x, y}}, 4, block, {{6, 7, 8, 9}}};
  auto a = fs_b(block);

  auto folkman = folkman_number(2, 2, 6);
  REQUIRE(folkman.avoiding_prev.has_value());
  const coloring& avoid = *folkman.avoiding_prev;  // ground 4
  // subset sums of the block, indexed by mask, colored by the avoiding table
  std::vector<bset> sums(16);
  std::vector<bset> a0;
  for (std::size_t mask = 1; mask < 16; ++mask) {
    sums[mask] = sums[mask & (mask - 1)] ^ block[std::countr_zero(mask)];
    if (avoid.at(mask) == 0) a0.push_back(sums[mask]);
  }
  CHECK_THROWS_AS(partition_adequate(a, a0, {{x, y}}, 2, wit), insufficient_m_error);
}
