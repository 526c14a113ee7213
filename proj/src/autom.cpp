#include "braidcones/autom.hpp"

#include <stdexcept>
#include <utility>

namespace braidcones {

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return from_images(rank, std::move(images));
}

FreeAutomorphism FreeAutomorphism::inner(const Word& c) {
  const int n = c.rank();
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    images.push_back(conj(Word::generator(n, i), c));
  }
  return from_images(n, std::move(images));
}

FreeAutomorphism FreeAutomorphism::generator_action(int i, int n, int sign) {
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("generator index " + std::to_string(i) +
                                " out of range for " + std::to_string(n) +
                                " strands");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images.push_back(Word::generator(n, j));
  const Word xi = Word::generator(n, i);
  const Word xi1 = Word::generator(n, i + 1);
  if (sign == 1) {
    images[static_cast<std::size_t>(i) - 1] = xi1;
    images[static_cast<std::size_t>(i)] = mul(mul(inv(xi1), xi), xi1);
  } else {
    images[static_cast<std::size_t>(i) - 1] = mul(mul(xi, xi1), inv(xi));
    images[static_cast<std::size_t>(i)] = xi;
  }
  return from_images(n, std::move(images));
}

FreeAutomorphism FreeAutomorphism::from_braid(const BraidWord& b) {
  FreeAutomorphism result = identity(b.strands);
  for (Letter l : b.letters) {
    result = compose(result, generator_action(l > 0 ? l : -l, b.strands,
                                              l > 0 ? 1 : -1));
  }
  return result;
}

FreeAutomorphism FreeAutomorphism::from_images(int rank,
                                               std::vector<Word> images) {
  if (rank < 1 || static_cast<int>(images.size()) != rank) {
    throw std::invalid_argument("automorphism needs one image per generator");
  }
  for (const Word& w : images) {
    if (w.rank() != rank) {
      throw std::invalid_argument("image rank mismatch");
    }
  }
  FreeAutomorphism a;
  a.rank_ = rank;
  a.images_ = std::move(images);
  return a;
}

const Word& FreeAutomorphism::image(int generator) const {
  if (generator < 1 || generator > rank_) {
    throw std::invalid_argument("no generator " + std::to_string(generator));
  }
  return images_[static_cast<std::size_t>(generator) - 1];
}

Word FreeAutomorphism::apply(const Word& w) const {
  if (w.rank() != rank_) {
    throw std::invalid_argument("word rank " + std::to_string(w.rank()) +
                                " does not match automorphism rank " +
                                std::to_string(rank_));
  }
  std::string out;
  for (int i = 0; i < w.length(); ++i) {
    Letter l = w.letter(i);
    const std::string& im =
        images_[static_cast<std::size_t>(l > 0 ? l : -l) - 1].letters_;
    if (l > 0) {
      for (char c : im) {
        if (!out.empty() &&
            static_cast<signed char>(out.back()) == -static_cast<signed char>(c))
          out.pop_back();
        else
          out.push_back(c);
      }
    } else {
      for (auto it = im.rbegin(); it != im.rend(); ++it) {
        char c = static_cast<char>(-static_cast<signed char>(*it));
        if (!out.empty() &&
            static_cast<signed char>(out.back()) == -static_cast<signed char>(c))
          out.pop_back();
        else
          out.push_back(c);
      }
    }
  }
  return Word(rank_, std::move(out));
}

FreeAutomorphism compose(const FreeAutomorphism& after,
                         const FreeAutomorphism& before) {
  if (after.rank() != before.rank()) {
    throw std::invalid_argument("automorphism rank mismatch");
  }
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(after.rank()));
  for (int i = 1; i <= after.rank(); ++i) {
    images.push_back(after.apply(before.image(i)));
  }
  return FreeAutomorphism::from_images(after.rank(), std::move(images));
}

namespace {

struct ImageKey {
  int max_len = 0;
  long total_len = 0;
  friend auto operator<=>(const ImageKey&, const ImageKey&) = default;
};

ImageKey key_of(const std::vector<Word>& images) {
  ImageKey k;
  for (const Word& w : images) {
    k.max_len = std::max(k.max_len, w.length());
    k.total_len += w.length();
  }
  return k;
}

}  // namespace

InnerReduction inner_reduce(const FreeAutomorphism& a) {
  const int n = a.rank();
  std::vector<Word> images = a.images();
  Word conjugator = Word::identity(n);
  ImageKey best = key_of(images);
  for (;;) {
    bool improved = false;
    for (int pos = 0; pos < 2 * n && !improved; ++pos) {
      Letter l = letter_at_position(pos);
      std::vector<Word> trial;
      trial.reserve(images.size());
      for (const Word& w : images) trial.push_back(conj_by_letter(w, l));
      ImageKey k = key_of(trial);
      if (k < best) {
        images = std::move(trial);
        conjugator = mul(Word::generator(n, l), conjugator);
        best = k;
        improved = true;
      }
    }
    if (!improved) break;
  }
  return InnerReduction{FreeAutomorphism::from_images(n, std::move(images)),
                        std::move(conjugator)};
}

}  // namespace braidcones
