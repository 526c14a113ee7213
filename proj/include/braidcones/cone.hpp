#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "braidcones/autom.hpp"
#include "braidcones/ball.hpp"
#include "braidcones/derivation.hpp"
#include "braidcones/errors.hpp"
#include "braidcones/word.hpp"

namespace braidcones {

/// An inverse pair found in the prospective cone. `witness` is the
/// compare_words-least member of the pair.
struct ContradictionWitness {
  Word witness;
  Word witness_inverse;
};

struct ConeOptions {
  /// When set, contradictions fire only through a derived identity (the
  /// literal rule of the published procedure); otherwise any inverse pair
  /// across P and the overflow set E fires immediately.
  bool strict_paper_mode = false;
  /// Upper bound on |P| + |E|; exceeding it raises ResourceLimitError.
  std::size_t member_cap = 50'000'000;
};

/// The prospective-cone state machine.
///
/// P holds candidate cone members inside the ball of the given radius (and
/// exponent sum zero in ZeroSum mode); E holds derived words longer than the
/// radius (ZeroSum mode only — All mode discards overflow). Saturation closes
/// P under pairwise products, conjugation by the 2n signed generators, and
/// the forward/inverse actions, intersected with the ball; overflow never
/// feeds back into the closure. Every member records how it was derived.
///
/// Single-letter conjugation suffices for full conjugation invariance within
/// the ball: for reduced g, the lengths of the intermediate conjugates of w
/// by the suffixes of g first fall, then rise (a prepended letter can cancel
/// only while cancellation is still running), so they never exceed
/// max(|w|, |g w g^-1|). Hence every in-ball conjugate g w g^-1 with g in W_k
/// is reached through in-ball single-letter steps.
///
/// The search backtracks by rolling the state back to a Mark; states are
/// copyable for parallel branch exploration.
class ConeState {
 public:
  ConeState(int radius, BallMode mode, FreeAutomorphism forward,
            FreeAutomorphism inverse, const WordBall* ball,
            ConeOptions opts = {});

  /// Adds a starting word. Words longer than the radius are remembered in E
  /// (ZeroSum mode) but contribute nothing to the closure.
  void add_seed(const Word& w);
  /// Adds a branch assumption (must be an undecided ball member).
  void add_branch(const Word& w);
  /// Runs the closure to its least fixed point, or stops at the first
  /// contradiction. Idempotent on a quiescent state.
  void saturate();

  bool contradicted() const { return contradiction_.has_value(); }
  const ContradictionWitness& contradiction() const { return *contradiction_; }

  /// The compare_words-least ball member with neither itself nor its inverse
  /// in P; nullopt when the state is total. Saturated, uncontradicted states
  /// only.
  std::optional<Word> next_undecided();
  bool is_total() { return !next_undecided().has_value(); }

  /// Derivation chain for a member of P or E, parents before children.
  std::vector<ChainStep> extract_chain(const Word& target) const;

  struct Mark {
    std::uint32_t p_size = 0;
    std::uint32_t e_size = 0;
    std::uint32_t processed = 0;
    std::uint32_t scan = 0;
  };
  Mark mark() const;
  /// Restores the state to a previous mark and clears any contradiction.
  void rollback(const Mark& m);

  int radius() const { return radius_; }
  BallMode mode() const { return mode_; }
  int rank() const { return forward_.rank(); }
  std::size_t cone_size() const { return p_order_.size(); }
  std::size_t overflow_size() const { return e_order_.size(); }
  std::vector<Word> cone_words() const { return p_order_; }
  std::vector<Word> overflow_words() const { return e_order_; }
  bool in_cone(const Word& w) const { return p_index_.contains(w); }
  bool in_overflow(const Word& w) const { return e_index_.contains(w); }

 private:
  bool in_ball(const Word& w) const;
  void insert(const Word& w, const Derivation& d);
  void record_pair(const Word& a, const Word& b);
  const Derivation* find_derivation(const Word& w) const;

  int radius_;
  BallMode mode_;
  FreeAutomorphism forward_, inverse_;
  const WordBall* ball_;
  ConeOptions opts_;

  std::vector<Word> p_order_, e_order_;
  std::vector<Derivation> p_derivs_, e_derivs_;
  std::unordered_map<Word, std::uint32_t, WordHash> p_index_, e_index_;
  std::uint32_t processed_ = 0;
  std::uint32_t scan_ = 0;
  std::optional<ContradictionWitness> contradiction_;
};

/// Q together with every positive-exponent-sum word of length <= k: the lift
/// of a k-zerocone to a k-precone. Returned in canonical order.
std::vector<Word> pos_lift(std::span<const Word> zerocone, int n, int k,
                           std::size_t ball_cap = kDefaultBallCap);

}  // namespace braidcones
