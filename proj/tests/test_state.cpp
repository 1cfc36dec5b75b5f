#include <catch_amalgamated.hpp>

#include "f2ca/random.hpp"
#include "f2ca/state.hpp"

using namespace f2ca;

TEST_CASE("parsing the state text format") {
  const CaState s = parse_state("0:1101");
  CHECK(s.bit(0) == 1);
  CHECK(s.bit(1) == 1);
  CHECK(s.bit(2) == 0);
  CHECK(s.bit(3) == 1);
  CHECK(s.bit(4) == 0);
  CHECK(s.bit(-1) == 0);

  const CaState unit = parse_state("-2:1");
  CHECK(unit.lo() == -2);
  CHECK(unit.hi() == -2);

  SECTION("normalization trims to the outermost units") {
    const CaState t = parse_state("5:00100");
    CHECK(t.offset == 7);
    CHECK(t.cells == std::vector<std::uint8_t>{1});
  }
  SECTION("bare bitstring means offset 0") {
    CHECK(parse_state("1101") == parse_state("0:1101"));
  }
  SECTION("zero states") {
    CHECK(parse_state("0:").zero());
    CHECK(parse_state("3:000").zero());
    CHECK(parse_state("0:") == parse_state("7:0"));
  }
}

TEST_CASE("parse errors name the byte position") {
  CHECK_THROWS_WITH(parse_state("0:12"), Catch::Matchers::ContainsSubstring("byte 3"));
  CHECK_THROWS_WITH(parse_state("a:11"), Catch::Matchers::ContainsSubstring("offset"));
  CHECK_THROWS_AS(parse_state(""), std::runtime_error);
  CHECK_THROWS_AS(parse_state("12x"), std::runtime_error);
  CHECK_THROWS_AS(parse_state(":11"), std::runtime_error);
}

TEST_CASE("format round trip") {
  CHECK(format_state(parse_state("0:1101")) == "0:1101");
  CHECK(format_state(parse_state("-2:1")) == "-2:1");
  CHECK(format_state(parse_state("5:00100")) == "7:1");
  CHECK(format_state(CaState{}) == "0:");
  StateGen gen(99);
  for (int i = 0; i < 200; ++i) {
    const CaState s = gen.window_state(14);
    CHECK(parse_state(format_state(s)) == s);
  }
}

TEST_CASE("support extraction") {
  CHECK(support(parse_state("0:1101")).sites == std::vector<Site>{0, 1, 3});
  CHECK(support(CaState{}).empty());
  CHECK(support(parse_state("-2:10011")).sites == std::vector<Site>{-2, 1, 2});
}

TEST_CASE("island decomposition") {
  SECTION("one island") {
    const auto isl = islands(parse_state("0:1101"));
    REQUIRE(isl.size() == 1);
    CHECK(isl[0].k1 == 0);
    CHECK(isl[0].kN == 3);
  }
  SECTION("a support gap of 4 splits") {
    const auto isl = islands(parse_state("0:1000101"));
    REQUIRE(isl.size() == 2);
    CHECK(isl[0].k1 == 0);
    CHECK(isl[0].kN == 0);
    CHECK(isl[1].k1 == 4);
    CHECK(isl[1].kN == 6);
  }
  SECTION("a support gap of 3 stays one island") {
    CHECK(islands(parse_state("0:10011")).size() == 1);
  }
  SECTION("zero state has no islands") {
    CHECK(islands(CaState{}).empty());
  }
  SECTION("islands reassemble the state and are pairwise far apart") {
    StateGen gen(5);
    for (int i = 0; i < 200; ++i) {
      const CaState s = gen.multi_island(9);
      const auto parts = islands(s);
      for (std::size_t j = 0; j + 1 < parts.size(); ++j)
        CHECK(parts[j + 1].k1 - parts[j].kN >= 4);
      std::vector<std::uint8_t> bits(std::size_t(s.hi() - s.lo() + 1), 0);
      for (const Island& p : parts)
        for (Site n = p.k1; n <= p.kN; ++n)
          bits[std::size_t(n - s.lo())] = std::uint8_t(p.state.bit(n));
      CHECK(make_state(s.lo(), bits) == s);
    }
  }
}

TEST_CASE("reflection") {
  CHECK(reflect(parse_state("0:1101")) == parse_state("-3:1011"));
  CHECK(reflect(parse_state("0:1")) == parse_state("0:1"));
  CHECK(reflect(CaState{}).zero());
  StateGen gen(17);
  for (int i = 0; i < 200; ++i) {
    const CaState s = gen.window_state(12);
    CHECK(reflect(reflect(s)) == s);
    const auto orig = support(s).sites;
    auto refl = support(reflect(s)).sites;
    for (Site& k : refl) k = -k;
    std::reverse(refl.begin(), refl.end());
    CHECK(refl == orig);
  }
}
