#include "catch2/catch_amalgamated.hpp"
#include "pileshuffle/algebra.hpp"
#include "pileshuffle/chain.hpp"
#include "pileshuffle/family.hpp"

using namespace pileshuffle;

TEST_CASE("chain transitions") {
  const ChainAutomaton chain("qs");
  REQUIRE(chain.terminal() == 2);
  REQUIRE(chain.step(0, 'a') == 0);  // queue holds on ascents
  REQUIRE(chain.step(0, 'd') == 1);
  REQUIRE(chain.step(1, 'a') == 2);  // stack holds on descents
  REQUIRE(chain.step(1, 'd') == 1);
  REQUIRE(chain.step(2, 'a') == 2);  // sink absorbs
  REQUIRE(chain.trace(0, "dda") == std::vector<int>{0, 1, 1, 2});
  REQUIRE_THROWS_AS(chain.step(0, 'x'), ContractViolation);
  REQUIRE_THROWS_AS(chain.step(3, 'a'), ContractViolation);
}

TEST_CASE("chain acceptance equals sortability") {
  // Delta(pi) is accepted by the chain of x iff x sorts pi
  for (int len = 0; len <= 6; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string profile;
      for (int i = 0; i < len; ++i) profile.push_back((bits >> i) & 1 ? 'd' : 'a');
      const Permutation pi = realize_permutation(profile);
      for (const TypeWord& x : {TypeWord("q"), TypeWord("s"), TypeWord("qs"),
                                TypeWord("sq"), TypeWord("qsq"), TypeWord("ssq")}) {
        REQUIRE(ChainAutomaton(x).accepts(profile) == minimal_sort(pi, x).has_value());
      }
    }
  }
}

TEST_CASE("multi-round acceptance goes through the composed word") {
  const TypeSchedule sched{"qs", "sq"};
  const ChainAutomaton chain(compose_fold(sched));
  REQUIRE(chain.terminal() == 4);
  const Permutation pi({4, 8, 7, 5, 3, 1, 2, 6});
  REQUIRE(chain.accepts(change_profile(pi)) ==
          multi_round_sort(pi, sched).has_value());
}

TEST_CASE("state coordinate helpers") {
  const std::vector<int> widths{3, 2, 2};  // beat, measure, phrase
  const std::vector<int> coords{0, 1, 1};
  REQUIRE(flat_state(coords, widths) == 9);
  REQUIRE(state_coordinates(9, widths) == coords);
  for (int flat = 0; flat < 12; ++flat)
    REQUIRE(flat_state(state_coordinates(flat, widths), widths) == flat);
  REQUIRE_THROWS_AS(flat_state(std::vector<int>{3, 0, 0}, widths), ContractViolation);
}

TEST_CASE("round specs instantiate and count") {
  REQUIRE(RoundSpec::Fixed("qqs").count() == 1);
  REQUIRE(RoundSpec::Fixed("qqs").instantiate(0) == "qqs");
  REQUIRE(RoundSpec::Free(3).count() == 8);
  REQUIRE(RoundSpec::Free(3).instantiate(5) == "sqs");  // low bit is leftmost
  REQUIRE(RoundSpec::Power("qs", 3).instantiate(0) == "qsqsqs");
  REQUIRE(RoundSpec::Seeded("qs", 2).width() == 4);
  REQUIRE(RoundSpec::Seeded("qs", 2).count() == 4);
  REQUIRE(RoundSpec::Seeded("qs", 2).instantiate(2) == "qsqs");
  REQUIRE_THROWS_AS(RoundSpec::Free(0), ContractViolation);
}

TEST_CASE("family enumeration covers the product exactly once") {
  const FactoredFamily fam{{RoundSpec::Fixed("q"), RoundSpec::Free(2)}};
  REQUIRE(fam.schedule_count() == 4);
  std::vector<std::string> seen;
  fam.for_each_schedule([&](const TypeSchedule& sched) {
    seen.push_back(sched[0] + "/" + sched[1]);
    return true;
  });
  std::sort(seen.begin(), seen.end());
  REQUIRE(seen == std::vector<std::string>{"q/qq", "q/qs", "q/sq", "q/ss"});
  // early stop propagates
  int visits = 0;
  REQUIRE_FALSE(fam.for_each_schedule([&](const TypeSchedule&) { return ++visits < 2; }));
  REQUIRE(visits == 2);
}

TEST_CASE("family grammar round-trips") {
  const FactoredFamily fam = parse_family("qqqqss/A3/qs+A2/qq^2");
  REQUIRE(fam.rounds.size() == 4);
  REQUIRE(fam.rounds[0].kind == RoundSpec::Kind::fixed);
  REQUIRE(fam.rounds[1].kind == RoundSpec::Kind::free);
  REQUIRE(fam.rounds[2].kind == RoundSpec::Kind::seeded);
  REQUIRE(fam.rounds[3].kind == RoundSpec::Kind::power);
  REQUIRE(fam.spec_text() == "qqqqss/A3/qs+A2/qq^2");
  REQUIRE(fam.schedule_count() == 8 * 4);
  REQUIRE_THROWS_AS(parse_family("qqx"), ParseError);
  REQUIRE_THROWS_AS(parse_family("A0"), ParseError);
  REQUIRE_THROWS_AS(parse_family("qs/"), ParseError);
}
