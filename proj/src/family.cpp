#include "braidcones/family.hpp"

namespace braidcones {

namespace {
constexpr int kRank = 3;
}

Word family_w() {
  return Word::reduce(kRank, {-2, 1, 2, 3});
}

FamilyAutomorphism family_auto(int m) {
  const Word w = family_w();
  const Word x2 = Word::generator(kRank, 2);
  std::vector<Word> images;
  images.push_back(mul(mul(power(w, -m), x2), power(w, m)));
  images.push_back(Word::reduce(kRank, {-2, 1, 2, 3, -2, -1, 2}));
  images.push_back(Word::reduce(kRank, {-2, 1, 2}));
  return FamilyAutomorphism{m, FreeAutomorphism::from_images(kRank,
                                                             std::move(images))};
}

FamilyReplay replay_family_proof(int m) {
  const FreeAutomorphism f = family_auto(m).f;
  const Word w = family_w();
  const Word x1 = Word::generator(kRank, 1);
  const Word x2 = Word::generator(kRank, 2);
  const Word x3 = Word::generator(kRank, 3);
  const Word seed = mul(inv(x1), x2);  // x1^-1 x2

  // (i) f(x2^-1 x3) = x2^-1 x1 x2 x3^-1
  const Word alpha = mul(inv(x2), x3);
  if (!(f.apply(alpha) == Word::reduce(kRank, {-2, 1, 2, -3}))) {
    return {false, "(i) f(x2^-1 x3) = x2^-1 x1 x2 x3^-1"};
  }

  // (ii) (x1^-1 x2) f(x2^-1 x3) (x3 x2^-1) = 1
  if (!mul(mul(seed, f.apply(alpha)), mul(x3, inv(x2))).is_identity()) {
    return {false, "(ii) (x1^-1 x2) f(x2^-1 x3) (x3 x2^-1) = 1"};
  }

  // (iii) (x1^-1 x2)^(x3) . f(x3^-1 x2) = x3 x1^-2 x2
  const Word lhs3 = mul(conj(seed, x3), f.apply(mul(inv(x3), x2)));
  const Word target3 = Word::reduce(kRank, {3, -1, -1, 2});
  if (!(lhs3 == target3)) {
    return {false, "(iii) (x1^-1 x2)^(x3) f(x3^-1 x2) = x3 x1^-2 x2"};
  }

  // (iv) f(x3 x1^-2 x2) = x2^-1 x1 x2 . w^-m . x2^-2 . w^{m+1} . x2^-1 x1^-1 x2
  Word rhs4 = Word::reduce(kRank, {-2, 1, 2});
  rhs4 = mul(rhs4, power(w, -m));
  rhs4 = mul(rhs4, Word::reduce(kRank, {-2, -2}));
  rhs4 = mul(rhs4, power(w, m + 1));
  rhs4 = mul(rhs4, Word::reduce(kRank, {-2, -1, 2}));
  if (!(f.apply(target3) == rhs4)) {
    return {false, "(iv) f(x3 x1^-2 x2) = x2^-1 x1 x2 w^-m x2^-2 w^{m+1} x2^-1 x1^-1 x2"};
  }

  // (v) x2^-1 [ x2^-1 (x2^-1 x1) x2 . (x3 x2^-1) ] x2 = x2^-2 w
  const Word inner = mul(conj(mul(inv(x2), x1), inv(x2)), mul(x3, inv(x2)));
  const Word lhs5 = conj(inner, inv(x2));
  if (!(lhs5 == mul(power(x2, -2), w))) {
    return {false, "(v) x2^-1 [x2^-1 (x2^-1 x1) x2 . x3 x2^-1] x2 = x2^-2 w"};
  }

  return {true, ""};
}

}  // namespace braidcones
