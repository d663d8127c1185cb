#include "catch2/catch_amalgamated.hpp"
#include "pileshuffle/reduction.hpp"

using namespace pileshuffle;

namespace {
const CnfFormula kSmall{2, {make_clause({1, -2}), make_clause({2})}};
}

TEST_CASE("reduction family shapes") {
  REQUIRE(reduce(FormulaVariant::I, kSmall).family.spec_text() == "qqqqss/A3/qq");
  REQUIRE(reduce(FormulaVariant::II, kSmall).family.spec_text() == "qqqqss/A4/A2");
  REQUIRE(reduce(FormulaVariant::III, kSmall).family.spec_text() == "A6/A41/A2");
  REQUIRE(reduce(FormulaVariant::V, kSmall, 1).family.spec_text() == "qqqqss^1/A6/A6");
  REQUIRE(reduce(FormulaVariant::V, kSmall, 2).family.spec_text() == "qqqqss^2/A12/A12");
  REQUIRE(reduce(FormulaVariant::I, kSmall).profile ==
          build_formula(FormulaVariant::I, kSmall));
  REQUIRE_THROWS_AS(reduce(FormulaVariant::I, CnfFormula{1, {}}), ContractViolation);
  // tautological clauses would be transcribed one-sided; refused
  REQUIRE_THROWS_AS(reduce(FormulaVariant::I, CnfFormula{1, {make_clause({1, -1})}}),
                    ContractViolation);
}

TEST_CASE("padding for the repeated-round variant") {
  REQUIRE(min_repetition(kSmall) == 1);
  REQUIRE(min_repetition(CnfFormula{5, {make_clause({1})}}) == 2);
  CnfFormula wide;
  wide.num_vars = 1;
  for (int j = 0; j < 7; ++j) wide.clauses.push_back(make_clause({1}));
  REQUIRE(min_repetition(wide) == 2);
  const CnfFormula padded = pad_formula(kSmall, 2);
  REQUIRE(padded.num_vars == 10);
  REQUIRE(padded.clauses.size() == 12);
  REQUIRE(padded.clauses[2] == kSmall.clauses[0]);  // duplicates cycle
  REQUIRE_THROWS_AS(reduce(FormulaVariant::V, wide, 1), ContractViolation);
}

TEST_CASE("reduce_to_sort realizes the profile") {
  const ChainQuestion q = reduce(FormulaVariant::I, kSmall);
  const SortQuestion s = reduce_to_sort(q);
  REQUIRE(change_profile(s.perm) == q.profile);
  REQUIRE(s.family.spec_text() == q.family.spec_text());
}

TEST_CASE("decoding witnesses") {
  // variant I: round 2 = Psi(x) q
  REQUIRE(decode_assignment(FormulaVariant::I, {"qqqqss", "qsq", "qq"}, 2) ==
          TruthAssignment{true, false});
  // equivalence-class normalization: round 3 leading with s
  REQUIRE(decode_assignment(FormulaVariant::I, {"qqqqss", dual_word("qsq"), "ss"}, 2) ==
          TruthAssignment{true, false});
  REQUIRE(decode_assignment(FormulaVariant::II, {"qqqqss", "qsqq", "qq"}, 2) ==
          TruthAssignment{false, true});
  const std::string guard = [] {
    std::string g;
    for (int i = 0; i < 13; ++i) g += "qs";
    return g;
  }();
  REQUIRE(decode_assignment(FormulaVariant::III, {"qqqqss", guard + "sq", "q"}, 1) ==
          TruthAssignment{false});
  // variant V ignores dummy padding variables
  REQUIRE(decode_assignment(FormulaVariant::V, {"qqqqss", "qsqqqq", "qqqqqq"}, 2, 1) ==
          TruthAssignment{false, true});
  REQUIRE_THROWS_AS(decode_assignment(FormulaVariant::I, {"qsq", "qq"}, 2), DecodeError);
  REQUIRE_THROWS_AS(decode_assignment(FormulaVariant::I, {"qqqqss", "qss", "qq"}, 2),
                    DecodeError);  // missing trailing q
  REQUIRE_THROWS_AS(decode_assignment(FormulaVariant::I, {"qqqqss", "qq", "qq"}, 2),
                    DecodeError);  // wrong width
  const std::string broken = "s" + guard.substr(1);
  REQUIRE_THROWS_AS(decode_assignment(FormulaVariant::III, {"qqqqss", broken + "sq", "q"}, 1),
                    DecodeError);  // guard parity broken
}
