#include "braidcones/ball.hpp"

#include <stdexcept>
#include <unordered_set>

#include "braidcones/errors.hpp"
#include "doctest.h"

using namespace braidcones;

TEST_SUITE_BEGIN("ball");

TEST_CASE("counts match 2n(2n-1)^{k-1} layers") {
  CHECK(enumerate_ball(3, 1, BallMode::All).members.size() == 6);
  CHECK(enumerate_ball(3, 2, BallMode::All).members.size() == 36);
  CHECK(enumerate_ball(3, 2, BallMode::ZeroSum).members.size() == 12);

  for (int k = 1; k <= 6; ++k) {
    const auto ball = enumerate_ball(3, k, BallMode::All);
    CHECK(ball.members.size() == reduced_word_count(3, k, kDefaultBallCap));
    std::size_t exact_k = 0;
    for (const Word& w : ball.members) {
      if (w.length() == k) ++exact_k;
    }
    std::size_t expected = 6;
    for (int j = 1; j < k; ++j) expected *= 5;
    CHECK(exact_k == expected);
  }
}

TEST_CASE("members are canonical, closed under inverses, and reduced") {
  for (BallMode mode : {BallMode::All, BallMode::ZeroSum}) {
    const auto ball = enumerate_ball(2, 4, mode);
    std::unordered_set<Word, WordHash> set(ball.members.begin(),
                                           ball.members.end());
    CHECK(set.size() == ball.members.size());
    for (std::size_t i = 0; i + 1 < ball.members.size(); ++i) {
      CHECK(shortlex_less(ball.members[i], ball.members[i + 1]));
    }
    for (const Word& w : ball.members) {
      CHECK(!w.is_identity());
      CHECK(set.contains(inv(w)));
      if (mode == BallMode::ZeroSum) {
        CHECK(w.exponent_sum() == 0);
        CHECK(w.length() % 2 == 0);
      }
    }
  }
}

TEST_CASE("strict total order on an enumerated ball") {
  const auto ball = enumerate_ball(2, 3, BallMode::All);
  for (const Word& a : ball.members) {
    CHECK(compare_words(a, a) == std::strong_ordering::equal);
    for (const Word& b : ball.members) {
      auto ab = compare_words(a, b);
      auto ba = compare_words(b, a);
      if (ab == std::strong_ordering::less) {
        CHECK(ba == std::strong_ordering::greater);
      }
      if (ab == std::strong_ordering::equal) CHECK(a == b);
      for (const Word& c : ball.members) {
        if (ab == std::strong_ordering::less &&
            compare_words(b, c) == std::strong_ordering::less) {
          CHECK(compare_words(a, c) == std::strong_ordering::less);
        }
      }
    }
  }
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(enumerate_ball(3, 12, BallMode::All, 1000),
                  ResourceLimitError);
  CHECK_THROWS_AS(enumerate_ball(3, 12, BallMode::ZeroSum, 1000),
                  ResourceLimitError);
}

TEST_SUITE_END();
