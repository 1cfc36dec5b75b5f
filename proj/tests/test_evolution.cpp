#include <catch_amalgamated.hpp>

#include "f2ca/checks.hpp"
#include "f2ca/evolution.hpp"
#include "f2ca/random.hpp"

using namespace f2ca;

TEST_CASE("single step, hand-checked sweeps") {
  CHECK(step(parse_state("0:1101")) == parse_state("0:1011"));
  CHECK(step(parse_state("0:111")) == parse_state("0:111"));
  CHECK(step(parse_state("0:10011")) == parse_state("0:11001"));
  CHECK(step(CaState{}).zero());
  CHECK(step(parse_state("0:1")) == parse_state("0:1"));
  // Wider solid blocks are not fixed; the interior breaks into defects.
  CHECK(step(parse_state("0:1111")) == parse_state("0:1001"));
  CHECK(step(parse_state("0:11111")) == parse_state("0:10011"));
  // A 15-site island with single and double defects.
  CHECK(step(parse_state("0:111011111001111")) == parse_state("0:110100111100111"));
  // Translation invariance of the rule.
  CHECK(step(parse_state("-7:1101")) == parse_state("-7:1011"));
}

TEST_CASE("evolve produces step-consistent trajectories") {
  const Trajectory traj = evolve(parse_state("0:1101"), 2);
  REQUIRE(traj.states.size() == 3);
  CHECK(format_state(traj.states[0]) == "0:1101");
  CHECK(format_state(traj.states[1]) == "0:1011");
  CHECK(format_state(traj.states[2]) == "0:1101");

  const Trajectory fixed = evolve(parse_state("0:1"), 5);
  REQUIRE(fixed.states.size() == 6);
  for (const CaState& s : fixed.states) CHECK(s == parse_state("0:1"));

  CHECK(evolve(parse_state("0:10011"), 0).states.size() == 1);
  CHECK_THROWS_AS(evolve(parse_state("0:1"), -1), std::invalid_argument);
}

TEST_CASE("orbit structure of small islands") {
  CHECK(orbit_period(parse_state("0:1")) == 1);
  CHECK(orbit_period(parse_state("0:11")) == 1);
  CHECK(orbit_period(parse_state("0:111")) == 1);
  CHECK(orbit_period(parse_state("0:101")) == 1);
  CHECK(orbit_period(parse_state("0:1101")) == 2);
  CHECK(orbit_period(parse_state("0:1001")) == 2);
  CHECK(orbit_period(parse_state("0:11111")) == 3);
}

TEST_CASE("reverse step inverts the dynamics") {
  CHECK(reverse_step(parse_state("0:1011")) == parse_state("0:1101"));
  CHECK(reverse_step(parse_state("0:111")) == parse_state("0:111"));
  CHECK(reverse_step(CaState{}).zero());
  StateGen gen(42);
  for (int i = 0; i < 300; ++i) {
    const CaState s = gen.window_state(18);
    CHECK(reverse_step(step(s)) == s);
    CHECK(step(reverse_step(s)) == s);
  }
}

TEST_CASE("mod-2 and exact forms are the same map, exhaustively to width 16") {
  const CheckResult res = check_form_equivalence_window(16);
  INFO(res.detail);
  CHECK(res.pass);
  CHECK(res.cases == 65536);
  const CheckResult wide = check_form_equivalence_random(3, 300, 40);
  INFO(wide.detail);
  CHECK(wide.pass);
}

TEST_CASE("border conservation and island independence") {
  StateGen gen(1234);
  for (int i = 0; i < 150; ++i) {
    const CaState s = gen.multi_island(10);
    const CaState next = step(s);
    const auto before = islands(s);
    const auto after = islands(next);
    REQUIRE(before.size() == after.size());
    for (std::size_t j = 0; j < before.size(); ++j) {
      CHECK(before[j].k1 == after[j].k1);
      CHECK(before[j].kN == after[j].kN);
    }
    CHECK(next == step_by_islands(s));
  }
}

TEST_CASE("exact-form arithmetic stays in {0,1} site by site") {
  StateGen gen(77);
  for (int i = 0; i < 200; ++i) {
    const CaState s = gen.window_state(20);
    const CaState next = step(s, RuleForm::Exact);
    for (Site n = next.zero() ? 0 : next.lo(); !next.zero() && n <= next.hi(); ++n)
      CHECK((next.bit(n) == 0 || next.bit(n) == 1));
  }
}
