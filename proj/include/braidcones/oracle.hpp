#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "braidcones/ball.hpp"
#include "braidcones/braid.hpp"
#include "braidcones/word.hpp"

namespace braidcones {

inline constexpr std::size_t kOraclePairCap = 24;

/// Exhaustive census of the k-precones (All mode) or k-zerocones (ZeroSum
/// mode): every sign assignment over the inverse pairs of the ball is tested
/// literally against the cone axioms.
struct ConeCensus {
  int n = 0;
  int k = 0;
  BallMode mode = BallMode::All;
  std::uint64_t total = 0;      // assignments satisfying the cone axioms
  std::uint64_t preserved = 0;  // of those, closed under the braid action
  std::vector<std::vector<Word>> witnesses;  // the preserved cones
};

/// Census without a braid filter (preserved == total). Throws
/// ResourceLimitError when the ball has more than `pair_cap` inverse pairs.
ConeCensus enumerate_cones(int n, int k, BallMode mode,
                           std::size_t pair_cap = kOraclePairCap,
                           bool collect_witnesses = true);

/// Census filtered by preservation under the raw braid action (and, when
/// two_sided, its inverse), optionally restricted to cones containing
/// `require`.
ConeCensus enumerate_preserved(const BraidWord& braid, int n, int k,
                               BallMode mode,
                               const std::optional<Word>& require = {},
                               bool two_sided = true,
                               std::size_t pair_cap = kOraclePairCap,
                               bool collect_witnesses = true);

/// Literal check of the cone axioms for an arbitrary set: partition of the
/// ball by the set and its inverses, in-ball products, and in-ball
/// conjugates by every ball word.
bool is_precone(std::span<const Word> cone, int n, int k, BallMode mode);

/// Number of inverse pairs in the mode ball.
std::size_t inverse_pair_count(int n, int k, BallMode mode);

struct CrosscheckReport {
  bool ok = true;
  bool all_mode_compared = false;
  bool all_search_found = false;
  bool all_census_nonempty = false;
  bool zero_mode_compared = false;
  bool zero_search_found = false;
  bool zero_census_nonempty = false;
};

/// Compares the search verdicts against the brute-force censuses at (n, k):
/// the All-mode search seeded with x1 against the precone census requiring
/// x1, and the ZeroSum search seeded with x1^-1 x2 (strict contradiction
/// rule, no inner reduction, so the two sides decide the same notion)
/// against the zerocone census requiring x1^-1 x2 when it fits the ball.
/// Comparisons whose census exceeds the pair cap are skipped and flagged.
CrosscheckReport crosscheck(const BraidWord& braid, int n, int k,
                            std::size_t pair_cap = kOraclePairCap);

}  // namespace braidcones
