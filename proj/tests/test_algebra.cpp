#include "catch2/catch_amalgamated.hpp"
#include "pileshuffle/algebra.hpp"

using namespace pileshuffle;

namespace {

std::vector<TypeWord> all_words(int max_len) {
  std::vector<TypeWord> out;
  for (int len = 1; len <= max_len; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      TypeWord w;
      for (int i = 0; i < len; ++i) w.push_back((bits >> i) & 1 ? 's' : 'q');
      out.push_back(w);
    }
  return out;
}

}  // namespace

TEST_CASE("invert and dual") {
  REQUIRE(invert_word("qqs") == "ssq");
  REQUIRE(dual_word("q") == "s");
  REQUIRE(dual_word("qqqqss") == "qqssss");
  for (const auto& w : all_words(5)) {
    REQUIRE(dual_word(dual_word(w)) == w);
    REQUIRE(invert_word(invert_word(w)) == w);
  }
}

TEST_CASE("worked composition example") {
  REQUIRE(compose_pair("qqs", compose_pair("qss", "s")) == "qqsqqsqss");
  REQUIRE(compose_pair(compose_pair("qqs", "qss"), "s") == "qqsqqsqss");
}

TEST_CASE("composition is associative and empty fold is the unit q") {
  const auto words = all_words(3);
  for (const auto& a : words)
    for (const auto& b : words)
      for (const auto& c : words)
        REQUIRE(compose_pair(a, compose_pair(b, c)) ==
                compose_pair(compose_pair(a, b), c));
  REQUIRE(compose_fold({}) == "q");
  for (const auto& a : words) {
    REQUIRE(compose_pair("q", a) == a);
    REQUIRE(compose_pair(a, "q") == a);
  }
}

TEST_CASE("composition commutes with duality") {
  for (const auto& a : all_words(4))
    for (const auto& b : all_words(3))
      REQUIRE(compose_pair(a, b) == compose_pair(dual_word(a), invert_word(b)));
}

TEST_CASE("indicator recurrence equals direct composition") {
  REQUIRE(compose_recurrence({"q", "s"}) == "s");
  REQUIRE(compose_recurrence({"qq", "qs"}) == "qqss");
  const auto words = all_words(3);
  for (const auto& a : words)
    for (const auto& b : words)
      for (const auto& c : words)
        REQUIRE(compose_recurrence({a, b, c}) == compose_fold({a, b, c}));
}

TEST_CASE("virtualize and devirtualize are inverse") {
  const TypeSchedule sched{"qs", "sq", "qq"};
  const size_t n = 5;
  std::vector<PileAssignment> rounds(3, PileAssignment(n));
  for (int code = 0; code < 64; ++code) {
    for (size_t i = 0; i < n; ++i) {
      rounds[0][i] = (code >> static_cast<int>(i)) & 1;
      rounds[1][i] = static_cast<int>(i) % 2;
      rounds[2][i] = (static_cast<int>(i) + code) % 2;
    }
    const auto vhat = virtualize_assignments(sched, rounds);
    REQUIRE(devirtualize_assignments(sched, vhat) == rounds);
  }
  REQUIRE(virtualize_assignments({}, {}).empty());
}

TEST_CASE("multi_round_sort sorts through the composed word") {
  const Permutation pi({4, 8, 7, 5, 3, 1, 2, 6});
  const TypeSchedule sched{"qs", "qq"};  // composes to qsqs
  const auto rounds = multi_round_sort(pi, sched);
  REQUIRE(rounds.has_value());
  REQUIRE(shuffle_multi(pi, sched, *rounds).is_identity());
  // an unsortable case: 8 strict descents need 3 queue piles, not 2
  REQUIRE_FALSE(multi_round_sort(realize_permutation("ddddddd"), {"qq"}).has_value());
  // the empty schedule sorts only the identity
  REQUIRE(multi_round_sort(Permutation::identity(3), {}).has_value());
  REQUIRE_FALSE(multi_round_sort(pi, {}).has_value());
}
