#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "pileshuffle/arrows.hpp"
#include "pileshuffle/decide.hpp"

using namespace pileshuffle;

TEST_CASE("sat brute force") {
  REQUIRE(sat_brute_force({1, {{1}}}) == TruthAssignment{true});
  REQUIRE(sat_brute_force({1, {{-1}}}) == TruthAssignment{false});
  REQUIRE_FALSE(sat_brute_force({1, {{1}, {-1}}}).has_value());
  REQUIRE(sat_brute_force({2, {{-1, 2}}}) == TruthAssignment{true, true});  // true first
  CnfFormula big;
  big.num_vars = 21;
  big.clauses.push_back({1});
  REQUIRE_THROWS_AS(sat_brute_force(big), CapExceeded);
}

TEST_CASE("naive decision on explicit families") {
  const FactoredFamily fam{{RoundSpec::Free(2), RoundSpec::Free(2)}};
  // addd needs >= 4 virtual piles starting descending-capable
  const auto w = decide_feasibility("dadad", fam, DecideStrategy::naive);
  REQUIRE(w.has_value());
  REQUIRE(ChainAutomaton(compose_fold(*w)).accepts("dadad"));
  // 6 alternations cannot fit 4 virtual piles of any types
  REQUIRE_FALSE(
      decide_feasibility("dadadadad", fam, DecideStrategy::naive).has_value());
  DecideOptions tight;
  tight.naive_cap = 8;
  REQUIRE_THROWS_AS(decide_feasibility("a", fam, DecideStrategy::naive, tight),
                    CapExceeded);
  REQUIRE_THROWS_AS(decide_feasibility("xya", fam, DecideStrategy::naive),
                    ContractViolation);
}

TEST_CASE("structured decision agrees with naive on random instances") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    // random family of 1-3 rounds mixing all four round kinds
    FactoredFamily fam;
    const int rounds = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < rounds; ++t) {
      switch (rng() % 4) {
        case 0: fam.rounds.push_back(RoundSpec::Free(1 + static_cast<int>(rng() % 3))); break;
        case 1: fam.rounds.push_back(RoundSpec::Fixed((rng() % 2) ? "qs" : "sq")); break;
        case 2: fam.rounds.push_back(RoundSpec::Power("qs", 1 + static_cast<int>(rng() % 2))); break;
        default: fam.rounds.push_back(RoundSpec::Seeded("q", 1 + static_cast<int>(rng() % 2))); break;
      }
    }
    std::string profile;
    const int len = static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i) profile.push_back((rng() % 2) ? 'a' : 'd');

    const auto naive = decide_feasibility(profile, fam, DecideStrategy::naive);
    const auto structured = decide_feasibility(profile, fam, DecideStrategy::structured);
    REQUIRE(naive.has_value() == structured.has_value());
    if (structured) {
      REQUIRE(ChainAutomaton(compose_fold(*structured)).accepts(profile));
      // the witness really belongs to the family
      REQUIRE(structured->size() == fam.rounds.size());
      for (size_t t = 0; t < fam.rounds.size(); ++t) {
        const RoundSpec& r = fam.rounds[t];
        REQUIRE(static_cast<int>((*structured)[t].size()) == r.width());
        if (r.kind == RoundSpec::Kind::fixed || r.kind == RoundSpec::Kind::power)
          REQUIRE((*structured)[t] == r.instantiate(0));
        if (r.kind == RoundSpec::Kind::seeded)
          REQUIRE((*structured)[t].substr(0, r.word.size()) == r.word);
      }
    }
  }
}

TEST_CASE("question overloads") {
  const ChainQuestion cq{"ad", {{RoundSpec::Free(2)}}};
  REQUIRE(decide_feasibility(cq, DecideStrategy::structured).has_value());
  const SortQuestion sq{realize_permutation("dd"), {{RoundSpec::Fixed("q")}}};
  REQUIRE_FALSE(decide_feasibility(sq, DecideStrategy::naive).has_value());
}

TEST_CASE("arrow harness finds violations and refuses over cap") {
  const FactoredFamily fam{{RoundSpec::Fixed("q"), RoundSpec::Free(1)}};
  const auto ok = verify_arrow(
      fam, "d",
      [](const ChainAutomaton&, const TypeSchedule&, std::vector<int>& s) { s.push_back(0); },
      [](const ChainAutomaton&, const TypeSchedule& sched, int, int end) {
        return end == (sched[1] == "q" ? 1 : 0);  // q\s composes to the single stack s
      });
  REQUIRE(ok.passed);
  REQUIRE(ok.cases == 2);
  const auto bad = verify_arrow(
      fam, "d",
      [](const ChainAutomaton&, const TypeSchedule&, std::vector<int>& s) { s.push_back(0); },
      [](const ChainAutomaton&, const TypeSchedule&, int, int end) { return end == 0; });
  REQUIRE_FALSE(bad.passed);
  REQUIRE_FALSE(bad.detail.empty());
  const auto refused = verify_arrow(
      FactoredFamily{{RoundSpec::Free(30)}}, "d",
      [](const ChainAutomaton&, const TypeSchedule&, std::vector<int>& s) { s.push_back(0); },
      [](const ChainAutomaton&, const TypeSchedule&, int, int) { return true; }, 1 << 10);
  REQUIRE(refused.refused);
  REQUIRE_FALSE(refused.passed);
}
