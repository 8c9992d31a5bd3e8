#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fsw/group_elem.hpp"
#include "fsw/torus.hpp"
#include "helpers.hpp"

using namespace fsw;
using fswtest::ge;
using fswtest::tq;

namespace {

// independent oracle: least n with nx = 0, by repeated addition
bigint order_by_repeated_add(const group_elem& x) {
  group_elem acc = x;
  bigint n = 1;
  while (!acc.is_zero()) {
    acc = acc + x;
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("torus addition lands on the canonical representative") {
  CHECK(tq(1, 2) + tq(1, 2) == tq(0, 1));
  CHECK(tq(3, 8) + tq(3, 8) == tq(-1, 4));
  CHECK(tq(1, 3) + tq(0, 1) == tq(1, 3));
  CHECK(tq(-3, 8) + tq(0, 1) == tq(-3, 8));

  // 1/2 is the canonical representative, -1/2 is not
  CHECK(tq(-1, 2) == tq(1, 2));
  CHECK(tq(7, 8) == tq(-1, 8));
  CHECK(tq(6, 8) == tq(-1, 4));
}

TEST_CASE("torus canonical form invariants hold on random sums") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    torus_elem a = fswtest::random_torus(rng, {2, 3, 4, 8, 16, 5, 7, 9});
    torus_elem b = fswtest::random_torus(rng, {2, 3, 4, 8, 16, 5, 7, 9});
    torus_elem c = a + b;
    CHECK(c.den() >= 1);
    CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(c.num()), c.den()) == 1);
    CHECK(2 * c.num() <= c.den());
    CHECK(2 * c.num() > -c.den());
  }
}

TEST_CASE("group addition and scaling") {
  group_elem x = ge({{0, 1, 8}});
  CHECK(x + group_elem() == x);
  CHECK((x + (-x)).is_zero());
  CHECK(x + x == ge({{0, 1, 4}}));
  CHECK(g_scalar(4, ge({{0, 1, 8}})) == ge({{0, 1, 2}}));
  CHECK(g_scalar(4, ge({{0, 1, 4}})).is_zero());
  CHECK(g_scalar(0, ge({{0, 1, 8}, {3, 1, 3}})).is_zero());
}

TEST_CASE("group laws on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    group_elem a = fswtest::random_elem(rng, 3, 6, {2, 3, 4, 8, 16});
    group_elem b = fswtest::random_elem(rng, 3, 6, {2, 3, 4, 8, 16});
    group_elem c = fswtest::random_elem(rng, 3, 6, {2, 3, 4, 8, 16});
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("order matches the repeated-addition oracle") {
  CHECK(order(ge({{0, 1, 2}})) == 2);
  CHECK(order(ge({{0, 1, 8}})) == 8);
  CHECK(order(group_elem()) == 1);

  // frozen from the oracle: lcm(2, 3) = 6
  group_elem two_coords = ge({{0, 1, 2}, {1, 1, 3}});
  CHECK(order_by_repeated_add(two_coords) == 6);
  CHECK(order(two_coords) == 6);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    group_elem x = fswtest::random_elem(rng, 3, 6, {2, 3, 4, 8, 16});
    bigint o = order(x);
    CHECK(o == order_by_repeated_add(x));
    CHECK(g_scalar(o, x).is_zero());
    for (bigint k = 1; k < o; ++k) CHECK_FALSE(g_scalar(k, x).is_zero());
  }
}

TEST_CASE("projection") {
  CHECK(proj(group_elem(), 5).is_zero());
  CHECK(proj(ge({{3, 1, 8}}), 3) == tq(1, 8));
  CHECK(proj(ge({{3, 1, 8}}), 2).is_zero());
}

TEST_CASE("min_index") {
  CHECK(min_index(ge({{5, 1, 2}})) == 5);
  CHECK(min_index(ge({{0, 1, 3}, {2, 1, 7}})) == 0);
  CHECK_THROWS_AS(min_index(group_elem()), zero_element_error);
}

TEST_CASE("rho skips the 4-torsion coordinates") {
  CHECK(rho(ge({{0, 1, 8}})) == 0);
  CHECK(rho(ge({{0, 1, 4}, {1, 1, 8}})) == 1);
  CHECK_THROWS_AS(rho(ge({{0, 1, 2}})), not_in_q_error);
  CHECK_THROWS_AS(rho(ge({{0, 1, 3}})), not_in_q_error);  // order 3
  CHECK_THROWS_AS(rho(group_elem()), not_in_q_error);     // order 1
}

TEST_CASE("rho is bounded by the largest support index whenever defined") {
  std::mt19937_64 rng(17);
  int defined = 0;
  for (int i = 0; i < 2000; ++i) {
    group_elem x = fswtest::random_elem(rng, 3, 6, {2, 3, 4, 8, 16});
    if (x.order() <= 4) continue;
    ++defined;
    std::uint32_t r = rho(x);
    CHECK(r <= x.coords().back().first);
    CHECK_FALSE(x.proj(r).four_torsion());
  }
  CHECK(defined > 100);
}
