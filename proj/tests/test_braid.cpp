#include "braidcones/autom.hpp"
#include "braidcones/braid.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "support.hpp"

using namespace braidcones;

TEST_SUITE_BEGIN("braid");

TEST_CASE("generator_action") {
  auto s1 = FreeAutomorphism::generator_action(1, 3, 1);
  CHECK(s1.image(1) == Word::generator(3, 2));
  CHECK(s1.image(2) == Word::reduce(3, {-2, 1, 2}));
  CHECK(s1.image(3) == Word::generator(3, 3));

  auto s2 = FreeAutomorphism::generator_action(2, 3, 1);
  CHECK(s2.image(1) == Word::generator(3, 1));
  CHECK(s2.image(2) == Word::generator(3, 3));
  CHECK(s2.image(3) == Word::reduce(3, {-3, 2, 3}));

  auto s2_inv = FreeAutomorphism::generator_action(2, 3, -1);
  CHECK(s2_inv.image(2) == Word::reduce(3, {2, 3, -2}));
  CHECK(s2_inv.image(3) == Word::generator(3, 2));
  CHECK(compose(s2, s2_inv) == FreeAutomorphism::identity(3));
  CHECK(compose(s2_inv, s2) == FreeAutomorphism::identity(3));

  CHECK_THROWS_AS(FreeAutomorphism::generator_action(3, 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(FreeAutomorphism::generator_action(0, 3, 1),
                  std::invalid_argument);
}

TEST_CASE("braid parsing and inversion") {
  BraidWord b = parse_braid("s1 s2^-3");
  CHECK(b.strands == 3);
  CHECK(b.letters == std::vector<Letter>{1, -2, -2, -2});
  CHECK(parse_braid("[1,-2,-2,-2]") == b);
  CHECK(braid_str(b) == "s1 s2^-3");

  CHECK(invert(b).letters == std::vector<Letter>{2, 2, 2, -1});
  CHECK(invert(parse_braid("1", 3)).letters.empty());
  CHECK(invert(parse_braid("s1 s2 s1")).letters ==
        std::vector<Letter>{-1, -2, -1});

  CHECK_THROWS_AS(parse_braid("bad!!"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("s9", 3), std::invalid_argument);
}

TEST_CASE("braid_to_auto") {
  CHECK(FreeAutomorphism::from_braid(parse_braid("1", 3)) ==
        FreeAutomorphism::identity(3));
  CHECK(FreeAutomorphism::from_braid(parse_braid("s1", 3)) ==
        FreeAutomorphism::generator_action(1, 3, 1));

  SUBCASE("rightmost letter acts first") {
    // s1 s2 maps x1 through s2 first (fixing it), then s1: x1 -> x2.
    auto a = FreeAutomorphism::from_braid(parse_braid("s1 s2"));
    CHECK(a.image(1) == Word::generator(3, 2));
  }

  SUBCASE("s1 s2^-3: images composed by hand") {
    // s2^-1 three times sends x2 to x2 x3 x2 x3 x2^-1 x3^-1 x2^-1 and x3 to
    // x2 x3 x2 x3^-1 x2^-1; substituting the s1 images then gives
    auto b = FreeAutomorphism::from_braid(parse_braid("s1 s2^-3"));
    CHECK(b.image(1) == Word::generator(3, 2));
    CHECK(b.image(2) == Word::reduce(3, {-2, 1, 2, 3, -2, 1, 2, 3, -2, -1, 2,
                                         -3, -2, -1, 2}));
    CHECK(b.image(3) ==
          Word::reduce(3, {-2, 1, 2, 3, -2, 1, 2, -3, -2, -1, 2}));
  }

  SUBCASE("inverse braid gives the inverse automorphism") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
      BraidWord b = testing::random_braid(rng, 3, 6);
      auto fwd = FreeAutomorphism::from_braid(b);
      auto bwd = FreeAutomorphism::from_braid(invert(b));
      Word w = testing::random_reduced_word(rng, 3, 8);
      CHECK(fwd.apply(bwd.apply(w)) == w);
    }
  }
}

TEST_CASE("apply") {
  // the explicit rank-3 automorphism with x1 -> x2, x2 -> x2^-1 x1 x2 x3 x2^-1 x1^-1 x2,
  // x3 -> x2^-1 x1 x2 (the m = 0 member of the family)
  auto f = FreeAutomorphism::from_images(
      3, {Word::generator(3, 2), Word::reduce(3, {-2, 1, 2, 3, -2, -1, 2}),
          Word::reduce(3, {-2, 1, 2})});
  CHECK(f.apply(Word::reduce(3, {-2, 3})) == Word::reduce(3, {-2, 1, 2, -3}));
  CHECK(f.apply(Word::reduce(3, {-3, 2})) == Word::reduce(3, {3, -2, -1, 2}));
  CHECK(FreeAutomorphism::identity(3).apply(Word::reduce(3, {1, -2, 3})) ==
        Word::reduce(3, {1, -2, 3}));
  CHECK_THROWS_AS(f.apply(Word::generator(2, 1)), std::invalid_argument);
}

TEST_CASE("compose") {
  auto s1 = FreeAutomorphism::generator_action(1, 3, 1);
  CHECK(compose(s1, FreeAutomorphism::identity(3)) == s1);
  CHECK(compose(FreeAutomorphism::identity(3), s1) == s1);
  // compose(a, b) applies b first
  auto s2 = FreeAutomorphism::generator_action(2, 3, 1);
  CHECK(compose(s1, s2).image(1) == Word::generator(3, 2));
}

TEST_CASE("braid relations hold as automorphisms") {
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      auto lhs = FreeAutomorphism::from_braid(
          make_braid(n, {i, i + 1, i}));
      auto rhs = FreeAutomorphism::from_braid(
          make_braid(n, {i + 1, i, i + 1}));
      CHECK(lhs == rhs);
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        auto lhs = FreeAutomorphism::from_braid(make_braid(n, {i, j}));
        auto rhs = FreeAutomorphism::from_braid(make_braid(n, {j, i}));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("braid action preserves exponent sum") {
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord b = testing::random_braid(rng, 4, 8);
    auto a = FreeAutomorphism::from_braid(b);
    for (int i = 1; i <= 4; ++i) CHECK(a.image(i).exponent_sum() == 1);
    Word w = testing::random_reduced_word(rng, 4, 10);
    CHECK(a.apply(w).exponent_sum() == w.exponent_sum());
  }
}

TEST_CASE("inner_reduce") {
  SUBCASE("identity is already minimal") {
    auto r = inner_reduce(FreeAutomorphism::identity(3));
    CHECK(r.autom == FreeAutomorphism::identity(3));
    CHECK(r.conjugator.is_identity());
  }

  SUBCASE("strips a shared conjugating letter") {
    // images c x_i c^-1 with c = x2^-1: one descent step recovers them all
    Word c = inv(Word::generator(3, 2));
    std::vector<Word> images;
    for (int i = 1; i <= 3; ++i) {
      images.push_back(conj(Word::generator(3, i), c));
    }
    auto a = FreeAutomorphism::from_images(3, images);
    auto r = inner_reduce(a);
    CHECK(r.autom == FreeAutomorphism::identity(3));
    CHECK(r.conjugator == Word::generator(3, 2));
    for (int i = 1; i <= 3; ++i) {
      CHECK(r.autom.image(i) == conj(a.image(i), r.conjugator));
    }
  }

  SUBCASE("never worse than the explicit family images at m = -2") {
    Word w = Word::reduce(3, {-2, 1, 2, 3});
    Word f1 = mul(mul(power(w, 2), Word::generator(3, 2)), power(w, -2));
    int f_max = std::max({f1.length(), 7, 3});
    auto braid_auto = FreeAutomorphism::from_braid(parse_braid("s1 s2^-3"));
    auto r = inner_reduce(braid_auto);
    int reduced_max = 0;
    for (int i = 1; i <= 3; ++i) {
      reduced_max = std::max(reduced_max, r.autom.image(i).length());
      CHECK(r.autom.image(i) == conj(braid_auto.image(i), r.conjugator));
    }
    CHECK(reduced_max <= f_max);
  }
}

TEST_SUITE_END();
