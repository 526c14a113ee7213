#pragma once

#include <string>

#include "braidcones/autom.hpp"
#include "braidcones/word.hpp"

namespace braidcones {

/// The explicit rank-3 automorphism family f_m with
///   f(x1) = w^{-m} x2 w^m,   f(x2) = x2^-1 x1 x2 x3 x2^-1 x1^-1 x2,
///   f(x3) = x2^-1 x1 x2,     where w = x2^-1 x1 x2 x3.
struct FamilyAutomorphism {
  int m = 0;
  FreeAutomorphism f;
};

FamilyAutomorphism family_auto(int m);

/// The conjugating word w = x2^-1 x1 x2 x3.
Word family_w();

struct FamilyReplay {
  bool ok = true;
  std::string failing;  // name of the first failing identity when !ok
};

/// Mechanically rechecks, by free-group arithmetic alone, the chain of
/// identities showing f_m preserves no positive cone of F_3:
///   (i)   f(x2^-1 x3) = x2^-1 x1 x2 x3^-1
///   (ii)  (x1^-1 x2) f(x2^-1 x3) (x3 x2^-1) = 1
///   (iii) (x1^-1 x2)^(x3) . f(x3^-1 x2) = x3 x1^-2 x2
///   (iv)  f(x3 x1^-2 x2) = x2^-1 x1 x2 w^-m x2^-2 w^{m+1} x2^-1 x1^-1 x2
///   (v)   x2^-1 [ x2^-1 (x2^-1 x1) x2 . x3 x2^-1 ] x2 = x2^-2 w
FamilyReplay replay_family_proof(int m);

}  // namespace braidcones
