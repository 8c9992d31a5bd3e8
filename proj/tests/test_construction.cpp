#include <catch2/catch_amalgamated.hpp>

#include "fsw/construction.hpp"
#include "helpers.hpp"

using namespace fsw;
using fswtest::bs;

namespace {

bfamily basis(unsigned n) {
  bfamily x;
  for (unsigned i = 0; i < n; ++i) x.push_back(bs({i}));
  return x;
}

}  // namespace

TEST_CASE("poset order is reverse inclusion") {
  bfamily x = basis(8);
  ambient_set amb = ambient_set::span(x);
  condition w{{x[0]}, x, amb};
  condition z{{x[0], x[1]}, x, amb};
  CHECK(poset_leq(w, w));
  CHECK(poset_leq(z, w));
  CHECK_FALSE(poset_leq(w, z));
  condition other{{x[2]}, x, amb};
  CHECK_FALSE(poset_leq(other, w));
  CHECK_FALSE(poset_leq(w, other));

  condition foreign{{x[0]}, x, ambient_set::explicit_set({x[0]})};
  CHECK_THROWS_AS(poset_leq(foreign, w), mismatched_ambient_error);
}

TEST_CASE("dense_meet with no pairs extends the empty condition") {
  bfamily x = basis(16);
  condition z{{}, x, ambient_set::span(x)};
  // supply drawn from the high basis elements
  bfamily supply(x.begin() + 8, x.end());

  SECTION("m=1 gives one element combining a witness and one auxiliary") {
    auto res = dense_meet(z, {}, 1, supply);
    REQUIRE(res.extended.w.size() == 1);
    CHECK(res.supply_used.size() == 2);
    CHECK(poset_leq(res.extended, z));
    // b0 = a0 ^ x0 with a0 a fresh singleton and x0 a sum of two supply elements
    CHECK(res.extended.w[0].size() == 3);
  }
  SECTION("m=2 links the two elements through a shared auxiliary") {
    auto res = dense_meet(z, {}, 2, supply);
    REQUIRE(res.extended.w.size() == 2);
    CHECK(res.supply_used.size() == 6);  // three auxiliaries, two elements each
    bset inter = res.extended.w[0] & res.extended.w[1];
    // with disjoint fresh witnesses the intersection is exactly the link
    CHECK(inter.size() == 2);
    auto v = validate_adequacy_witness(z.target.pred(), res.witness);
    CHECK(v.ok);
  }
  SECTION("insufficient supply") {
    bfamily tiny(x.begin() + 8, x.begin() + 9);
    CHECK_THROWS_AS(dense_meet(z, {}, 1, tiny), supply_exhausted_error);
  }
}

TEST_CASE("dense_meet honours a pair constraint") {
  bfamily x = basis(24);
  bfamily y = find_suitable(x, 2);  // uses x[0..3]
  condition z{{}, x, ambient_set::span(x)};
  bfamily supply = {y[1], y[2]};  // the 2-block, fresh relative to the empty W

  auto res = dense_meet(z, {{x, y}}, 1, supply);
  REQUIRE(res.extended.w.size() == 1);
  auto v = validate_adequacy_witness(z.target.pred(), res.witness);
  CHECK(v.ok);
  // the witness element lies inside FS(Y)
  gf2_solver ys(y);
  CHECK(ys.in_span(res.extended.w[0]));
}

TEST_CASE("run_stages produces self-consistent logs") {
  SECTION("empty schedule") { CHECK(run_stages({}).empty()); }

  SECTION("one stage") {
    auto cfg = default_run_config(1, 2, 7, 32);
    auto logs = run_stages(cfg);
    REQUIRE(logs.size() == 1);
    CHECK(logs[0].built_y.size() == 2);
    CHECK(logs[0].cert.m_max == 2);
    auto v = verify_stages(logs);
    CHECK(v.ok);
  }

  SECTION("two stages share the base family") {
    auto cfg = default_run_config(2, 2, 0, 64);
    auto logs = run_stages(cfg);
    REQUIRE(logs.size() == 2);
    CHECK(logs[1].chosen_x == logs[0].chosen_x);
    // the second stage's Y lives inside FS of the first stage's Y
    gf2_solver s0(logs[0].built_y);
    for (bset v : logs[1].built_y) CHECK(s0.in_span(v));
    CHECK(check_suitable(logs[1].chosen_x, logs[1].built_y, 2).ok);
    auto v = verify_stages(logs);
    CHECK(v.ok);
  }

  SECTION("verification notices tampering") {
    auto logs = run_stages(default_run_config(1, 2, 7, 32));
    logs[0].built_y[0] = bs({31});
    CHECK_FALSE(verify_stages(logs).ok);

    auto logs2 = run_stages(default_run_config(1, 2, 7, 32));
    logs2[0].meets[0].witness.a_seq[0] = bs({30, 31});
    CHECK_FALSE(verify_stages(logs2).ok);
  }

  SECTION("a stage target steers the built family") {
    auto cfg = default_run_config(1, 1, 3, 16);
    // target: all sets containing index 0 (plenty of span elements qualify)
    std::vector<bset> target;
    for (std::uint64_t m = 1; m < (1u << 10); ++m)
      if (m & 1) target.push_back(bset(m));
    cfg.schedule[0].target = target;
    auto logs = run_stages(cfg);
    REQUIRE(logs.size() == 1);
    CHECK(logs[0].target_side >= 0);
    CHECK(verify_stages(logs).ok);
  }
}

TEST_CASE("default_run_config sizes stages geometrically") {
  auto cfg = default_run_config(2, 2, 0, 64);
  REQUIRE(cfg.schedule.size() == 2);
  CHECK(cfg.schedule[1].request_ms == std::vector<std::size_t>{2});
  CHECK(cfg.schedule[0].request_ms.size() == 5);  // ceil(8/2) + 1
  CHECK(estimate_base_need(cfg, 2) == 40);
}
