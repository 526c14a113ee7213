#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidcones/braid.hpp"
#include "braidcones/certificate.hpp"
#include "braidcones/cone.hpp"
#include "braidcones/word.hpp"

namespace braidcones {

enum class Verdict { PreconeFound, NoPrecone };

struct SearchStats {
  std::uint64_t nodes = 0;       // saturation calls across the branch tree
  std::size_t max_cone_size = 0;
  double wall_ms = 0.0;
};

struct SearchOptions {
  bool inner_reduction = true;
  bool strict_paper_mode = false;
  std::size_t ball_cap = kDefaultBallCap;
  int threads = 1;  // branch-parallel exploration; output matches threads = 1
};

struct SearchResult {
  Verdict verdict = Verdict::PreconeFound;
  int k = 0;
  std::optional<Certificate> certificate;  // NoPrecone only; always verifies
  SearchStats stats;
};

/// Branching search over full k-precones (no overflow tracking, raw braid
/// action unless options request otherwise). Seeds must fit in the ball.
/// NoPrecone means no two-sided preserved k-precone contains the seed.
SearchResult preserve_precone(const BraidWord& braid, std::vector<Word> seed,
                              int k, const SearchOptions& options = {});

/// Branching search over k-zerocones with the overflow set E. Seeds must
/// have exponent sum zero; seeds longer than k are remembered in E. With
/// inner reduction the forward/inverse actions are shortened by inner
/// automorphisms, which cannot change which positive cones are preserved.
SearchResult mod_preserve_precone(const BraidWord& braid,
                                  std::vector<Word> seed, int k,
                                  const SearchOptions& options = {});

struct DriverResult {
  bool proven_not_order_preserving = false;
  int k = 0;  // refuting radius, or the last radius tried when inconclusive
  std::optional<Certificate> certificate;
  SearchStats stats;  // accumulated over all radii
};

/// Runs the search for k = 1, 2, ... until a radius admits no preserved
/// cone (then the braid preserves no bi-order of F_n) or max_k is exhausted
/// (inconclusive: order-preserving braids are never refuted at any k).
/// An empty seed list selects the canonical seed: x1^-1 x2 in ZeroSum mode
/// (any cone or its inverse contains it), x1 in All mode.
DriverResult obstruct(const BraidWord& braid, int max_k = 8,
                      std::vector<Word> seed = {},
                      BallMode mode = BallMode::ZeroSum,
                      const SearchOptions& options = {});

}  // namespace braidcones
