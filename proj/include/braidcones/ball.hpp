#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "braidcones/word.hpp"

namespace braidcones {

enum class BallMode { All, ZeroSum };

const char* mode_name(BallMode m);            // "pre" / "zero"
BallMode mode_from_name(std::string_view s);  // accepts pre|all, zero|zero-sum

inline constexpr std::size_t kDefaultBallCap = 10'000'000;

/// The nonidentity reduced words of length <= radius in canonical shortlex
/// order; ZeroSum mode keeps only words with exponent sum zero.
struct WordBall {
  int rank = 0;
  int radius = 0;
  BallMode mode = BallMode::All;
  std::vector<Word> members;
};

/// Count of nonidentity reduced words of length <= k in F_n, i.e. the sum of
/// 2n(2n-1)^{j-1} over j = 1..k, saturating at `limit`.
std::uint64_t reduced_word_count(int n, int k, std::uint64_t limit);

/// Throws ResourceLimitError when the full ball W_k would exceed `cap`
/// members (the zero-sum ball is a subset, so the same guard applies).
WordBall enumerate_ball(int n, int k, BallMode mode,
                        std::size_t cap = kDefaultBallCap);

}  // namespace braidcones
