#include <catch_amalgamated.hpp>

#include "f2ca/checks.hpp"
#include "f2ca/invariants.hpp"
#include "f2ca/random.hpp"

using namespace f2ca;

TEST_CASE("invariant records of small islands") {
  SECTION("0:1101") {
    const auto recs = invariant_record(parse_state("0:1101"));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].k1 == 0);
    CHECK(recs[0].kN == 3);
    CHECK(recs[0].f2_k1 == 1);
    CHECK(recs[0].n_parity == 1);
    CHECK(recs[0].x_k1_mod2 == F2Poly{1, 0, 0, 1});
    CHECK(recs[0].to_string() == "island [0,3]: f2=1 parity=1 xk1=1001");
  }
  SECTION("0:111") {
    const auto recs = invariant_record(parse_state("0:111"));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].f2_k1 == 0);
    CHECK(recs[0].x_k1_mod2 == F2Poly{1, 0, 1});  // (1+z)^2 mod 2
    CHECK(recs[0].n_parity == 1);
  }
  SECTION("0:1") {
    const auto recs = invariant_record(parse_state("0:1"));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].k1 == 0);
    CHECK(recs[0].kN == 0);
    CHECK(recs[0].f2_k1 == 0);
    CHECK(recs[0].x_k1_mod2 == F2Poly::one());
    CHECK(recs[0].n_parity == 1);
  }
  SECTION("zero state and multi-island states") {
    CHECK(invariant_record(CaState{}).empty());
    CHECK(invariant_record(parse_state("0:1000101")).size() == 2);
  }
}

TEST_CASE("conservation along trajectories") {
  SECTION("the 2-cycle conserves everything") {
    const TrajectoryReport rep = check_trajectory(evolve(parse_state("0:1101"), 10));
    CHECK(rep.pass);
    CHECK(rep.x_k1_exact_conserved);
  }
  SECTION("0:10011 conserves with f2 = 0") {
    const CaState s = parse_state("0:10011");
    CHECK(invariant_record(s)[0].f2_k1 == 0);
    CHECK(check_trajectory(evolve(s, 10)).pass);
  }
  SECTION("zero state trajectory") {
    CHECK(check_trajectory(evolve(CaState{}, 4)).pass);
  }
  SECTION("random islands over many steps") {
    const CheckResult res = check_conservation(909, 100, 16, 40);
    INFO(res.detail << " " << res.counterexample);
    CHECK(res.pass);
  }
  SECTION("a doctored trajectory is flagged") {
    Trajectory bad;
    bad.states = {parse_state("0:1101"), parse_state("0:1111")};
    const TrajectoryReport rep = check_trajectory(bad);
    CHECK_FALSE(rep.pass);
    CHECK(rep.first_violation.find("step 1") != std::string::npos);
  }
}

TEST_CASE("x_k1 over Z is not conserved in general, only mod 2") {
  // 0:1100101 steps to 0:1111011: the gap multiset changes, so the integer
  // polynomial changes while its mod-2 image stays put.
  const CaState s = parse_state("0:1100101");
  CHECK(step(s) == parse_state("0:1111011"));
  const TrajectoryReport rep = check_trajectory(evolve(s, 6));
  CHECK(rep.pass);
  CHECK_FALSE(rep.x_k1_exact_conserved);
}

TEST_CASE("f2 transport law") {
  CHECK(f2_transport_check(parse_state("0:1101")));
  CHECK(f2_transport_check(parse_state("0:111")));
  CHECK(f2_transport_check(parse_state("0:1")));
  CHECK_THROWS_AS(f2_transport_check(parse_state("0:1000101")), std::invalid_argument);
  const CheckResult res = check_f2_transport(910, 200, 16);
  INFO(res.detail << " " << res.counterexample);
  CHECK(res.pass);
}

TEST_CASE("f1 and f3 at k1 are not conserved") {
  // 0:1001 -> 0:1111 swaps a 2-defect for three neighbor pairs.
  const CaState s = parse_state("0:1001");
  const auto f13 = [](const CaState& state) {
    const MeasureVector mv = f_measures(state, state.lo(), 3);
    return std::pair<long long, long long>(mv.at(1), mv.at(3));
  };
  CHECK(f13(s) != f13(step(s)));
  const CheckResult res = check_nonconservation_witness(8);
  INFO(res.detail);
  CHECK(res.pass);
}
