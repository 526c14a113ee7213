#pragma once

#include <vector>

#include "braidcones/braid.hpp"
#include "braidcones/word.hpp"

namespace braidcones {

/// An automorphism of F_n, stored as the images of the n generators.
class FreeAutomorphism {
 public:
  FreeAutomorphism() = default;

  static FreeAutomorphism identity(int rank);
  /// The inner automorphism w -> c w c^{-1}.
  static FreeAutomorphism inner(const Word& c);
  /// The action of sigma_i^{sign} on F_n:
  ///   sign +1:  x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
  ///   sign -1:  x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
  /// with all other generators fixed.
  static FreeAutomorphism generator_action(int i, int n, int sign);
  /// Composite action of a braid word, rightmost letter applied first.
  /// The empty braid gives the identity automorphism.
  static FreeAutomorphism from_braid(const BraidWord& b);
  static FreeAutomorphism from_images(int rank, std::vector<Word> images);

  int rank() const { return rank_; }
  /// Image of x_i, 1-based.
  const Word& image(int generator) const;
  const std::vector<Word>& images() const { return images_; }

  /// Substitutes images for letters and reduces.
  Word apply(const Word& w) const;

  bool operator==(const FreeAutomorphism&) const = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

/// after . before: the automorphism applying `before` first, then `after`.
FreeAutomorphism compose(const FreeAutomorphism& after,
                         const FreeAutomorphism& before);

struct InnerReduction {
  FreeAutomorphism autom;  // inner(conjugator) composed after the input
  Word conjugator;
};

/// Greedy descent shortening the generator images by a common conjugation:
/// repeatedly conjugate all images by a single letter, accepting the first
/// letter in canonical alphabet order that strictly decreases the key
/// (max image length, then total image length); stops at a local minimum.
InnerReduction inner_reduce(const FreeAutomorphism& a);

}  // namespace braidcones
