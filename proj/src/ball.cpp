#include "braidcones/ball.hpp"

#include <stdexcept>
#include <string>

#include "braidcones/errors.hpp"

namespace braidcones {

const char* mode_name(BallMode m) {
  return m == BallMode::All ? "pre" : "zero";
}

BallMode mode_from_name(std::string_view s) {
  if (s == "pre" || s == "all") return BallMode::All;
  if (s == "zero" || s == "zero-sum" || s == "zerosum") return BallMode::ZeroSum;
  throw std::invalid_argument("unknown mode '" + std::string(s) +
                              "' (expected pre or zero)");
}

std::uint64_t reduced_word_count(int n, int k, std::uint64_t limit) {
  std::uint64_t total = 0;
  std::uint64_t layer = 2 * static_cast<std::uint64_t>(n);
  const std::uint64_t factor = 2 * static_cast<std::uint64_t>(n) - 1;
  for (int j = 1; j <= k; ++j) {
    if (layer > limit - total) return limit + 1;
    total += layer;
    if (layer > limit / factor) layer = limit + 1;  // next layer overflows
    else layer *= factor;
  }
  return total;
}

WordBall enumerate_ball(int n, int k, BallMode mode, std::size_t cap) {
  if (n < 2) throw std::invalid_argument("ball rank must be >= 2");
  if (k < 1) throw std::invalid_argument("ball radius must be >= 1");
  if (reduced_word_count(n, k, cap) > cap) {
    throw ResourceLimitError("word ball of rank " + std::to_string(n) +
                                 " radius " + std::to_string(k) +
                                 " exceeds the configured cap of " +
                                 std::to_string(cap) + " members",
                             k);
  }

  // One bucket per length keeps the output in shortlex order: a depth-first
  // walk in canonical letter order emits each length lexicographically.
  std::vector<std::vector<Word>> buckets(static_cast<std::size_t>(k) + 1);
  std::vector<Letter> prefix;
  prefix.reserve(static_cast<std::size_t>(k));

  const bool zero = mode == BallMode::ZeroSum;
  auto walk = [&](auto&& self, int sum) -> void {
    const int len = static_cast<int>(prefix.size());
    if (len > 0 && (!zero || sum == 0)) {
      buckets[static_cast<std::size_t>(len)].push_back(
          Word::from_reduced(n, prefix));
    }
    if (len == k) return;
    // In zero-sum mode a prefix is viable only if the remaining letters can
    // cancel its exponent sum.
    for (int pos = 0; pos < 2 * n; ++pos) {
      Letter l = letter_at_position(pos);
      if (!prefix.empty() && prefix.back() == -l) continue;
      int next_sum = sum + (l > 0 ? 1 : -1);
      if (zero && (next_sum > k - len - 1 || -next_sum > k - len - 1)) continue;
      prefix.push_back(l);
      self(self, next_sum);
      prefix.pop_back();
    }
  };
  walk(walk, 0);

  WordBall ball{n, k, mode, {}};
  std::size_t total = 0;
  for (const auto& b : buckets) total += b.size();
  ball.members.reserve(total);
  for (auto& b : buckets) {
    for (auto& w : b) ball.members.push_back(std::move(w));
  }
  return ball;
}

}  // namespace braidcones
