#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidcones {

/// Signed generator index: +i denotes x_i, -i denotes x_i^{-1}. Never zero.
using Letter = int;

/// Position of a letter in the canonical alphabet x1 < x1^-1 < x2 < x2^-1 < ...
constexpr int letter_position(Letter l) {
  return 2 * ((l > 0 ? l : -l) - 1) + (l < 0 ? 1 : 0);
}

constexpr Letter letter_at_position(int pos) {
  return (pos % 2 == 0) ? (pos / 2 + 1) : -(pos / 2 + 1);
}

/// A freely reduced word in the free group F_n.
///
/// Words are immutable values; every operation returns a new word. Letters
/// are stored as signed bytes, which limits the rank to 127 (far beyond
/// anything the search can enumerate) and keeps short words heap-free.
class Word {
 public:
  Word() = default;  // rank-0 placeholder; real words come from the factories

  /// The empty word, the group identity of F_n.
  static Word identity(int rank);
  /// The one-letter word for letter l (use -i for an inverse generator).
  static Word generator(int rank, Letter l);
  /// Freely reduces an arbitrary letter sequence. Idempotent.
  static Word reduce(int rank, std::span<const Letter> letters);
  static Word reduce(int rank, std::initializer_list<Letter> letters);
  /// Like reduce, but rejects sequences that are not already reduced.
  static Word from_reduced(int rank, std::span<const Letter> letters);
  /// Parses `x1^-1 x2` tokens, the token `1` (identity), or a compact
  /// signed-integer array `[-1, 2]`. The input is reduced if necessary.
  static Word parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  Letter letter(int i) const {
    return static_cast<signed char>(letters_[static_cast<std::size_t>(i)]);
  }
  std::vector<Letter> letters() const;

  /// Sum of letter signs (the abelianization map F_n -> Z).
  int exponent_sum() const;

  /// Space-separated `x<i>` / `x<i>^-1` tokens; the identity renders as "1".
  /// parse(str(), rank()) round-trips.
  std::string str() const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }

  friend Word mul(const Word&, const Word&);
  friend Word inv(const Word&);
  friend Word conj(const Word&, const Word&);
  friend Word conj_by_letter(const Word&, Letter);
  friend std::strong_ordering compare_words(const Word&, const Word&);
  friend struct WordHash;
  friend class FreeAutomorphism;

 private:
  Word(int rank, std::string letters);
  static void check_rank(int rank);

  std::string letters_;
  std::int8_t rank_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string>{}(w.letters_);
  }
};

/// Reduced product a.b. Throws std::invalid_argument on rank mismatch.
Word mul(const Word& a, const Word& b);
/// Reversed, sign-flipped letters.
Word inv(const Word& a);
/// g conjugated by h, that is h.g.h^{-1} (the notation g^h).
Word conj(const Word& g, const Word& h);
/// g conjugated by the one-letter word for l.
Word conj_by_letter(const Word& g, Letter l);
/// w^e with w^0 the identity.
Word power(const Word& w, int e);
/// Shortlex total order: length first, ties by the canonical alphabet.
std::strong_ordering compare_words(const Word& a, const Word& b);
inline bool shortlex_less(const Word& a, const Word& b) {
  return compare_words(a, b) == std::strong_ordering::less;
}

}  // namespace braidcones
