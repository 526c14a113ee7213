#pragma once

#include <optional>
#include <random>
#include <vector>

#include "braidcones/autom.hpp"
#include "braidcones/braid.hpp"
#include "braidcones/word.hpp"

namespace braidcones::testing {

/// Uniform random letter sequence, not necessarily reduced.
inline std::vector<Letter> random_letters(std::mt19937& rng, int rank,
                                          int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> pos_dist(0, 2 * rank - 1);
  std::vector<Letter> letters;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    letters.push_back(letter_at_position(pos_dist(rng)));
  }
  return letters;
}

/// Random reduced word: a random walk that never immediately backtracks.
inline Word random_reduced_word(std::mt19937& rng, int rank, int len) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<int> first(0, 2 * rank - 1);
  for (int i = 0; i < len; ++i) {
    for (;;) {
      Letter l = letter_at_position(first(rng));
      if (!letters.empty() && letters.back() == -l) continue;
      letters.push_back(l);
      break;
    }
  }
  return Word::from_reduced(rank, letters);
}

inline BraidWord random_braid(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(1, strands - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<Letter> letters;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    letters.push_back(gen_dist(rng) * (sign_dist(rng) ? 1 : -1));
  }
  return make_braid(strands, std::move(letters));
}

/// Solves for the inverse of an automorphism by greedy length reduction of
/// its image tuple: elementary moves t[i] <- t[i] t[j]^±1 (or the left
/// version) are recorded until every image is a single letter, which pins the
/// inverse up to a signed permutation. Returns nullopt when the greedy
/// descent stalls; good enough for the small automorphisms the tests solve.
inline std::optional<FreeAutomorphism> solve_inverse(
    const FreeAutomorphism& f, int max_steps = 10000) {
  const int n = f.rank();
  std::vector<Word> t = f.images();
  FreeAutomorphism mu = FreeAutomorphism::identity(n);
  auto total_length = [&] {
    long s = 0;
    for (const Word& w : t) s += w.length();
    return s;
  };
  for (int step = 0; step < max_steps && total_length() > n; ++step) {
    bool moved = false;
    for (int i = 0; i < n && !moved; ++i) {
      for (int j = 0; j < n && !moved; ++j) {
        if (i == j) continue;
        for (int sign : {1, -1}) {
          for (bool left : {false, true}) {
            Word tj = sign == 1 ? t[j] : inv(t[j]);
            Word cand = left ? mul(tj, t[i]) : mul(t[i], tj);
            if (cand.length() >= t[i].length()) continue;
            t[i] = std::move(cand);
            // record the Nielsen move x_i -> x_i x_j^sign (or the left form)
            std::vector<Word> nu_images;
            for (int g = 1; g <= n; ++g) {
              nu_images.push_back(Word::generator(n, g));
            }
            Word move = sign == 1 ? Word::generator(n, j + 1)
                                  : inv(Word::generator(n, j + 1));
            nu_images[static_cast<std::size_t>(i)] =
                left ? mul(move, Word::generator(n, i + 1))
                     : mul(Word::generator(n, i + 1), move);
            mu = compose(mu, FreeAutomorphism::from_images(n, nu_images));
            moved = true;
            break;
          }
          if (moved) break;
        }
      }
    }
    if (!moved) return std::nullopt;
  }
  if (total_length() != n) return std::nullopt;
  // t[i] is now a signed generator: invert the signed permutation.
  std::vector<Word> rho_inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Letter l = t[static_cast<std::size_t>(i)].letter(0);
    int g = l > 0 ? l : -l;
    rho_inv[static_cast<std::size_t>(g) - 1] =
        l > 0 ? Word::generator(n, i + 1) : inv(Word::generator(n, i + 1));
  }
  return compose(mu, FreeAutomorphism::from_images(n, std::move(rho_inv)));
}

}  // namespace braidcones::testing
