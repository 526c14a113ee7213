#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidcones/word.hpp"

namespace braidcones {

/// A word in the Artin generators of the n-strand braid group: letter +i is
/// sigma_i, -i its inverse. Read right to left, so the rightmost letter acts
/// first on the free group.
struct BraidWord {
  int strands = 2;
  std::vector<Letter> letters;
  bool operator==(const BraidWord&) const = default;
};

/// Validates 2 <= strands and |letter| in 1..strands-1.
BraidWord make_braid(int strands, std::vector<Letter> letters);

/// Parses `s1 s2^-3` tokens, the token `1` (trivial braid), or an array
/// `[1,-2,-2,-2]`. Strand count defaults to max |letter| + 1 (at least 2).
BraidWord parse_braid(std::string_view text, std::optional<int> strands = {});

/// Renders with exponent run-compression, e.g. "s1 s2^-3"; trivial is "1".
std::string braid_str(const BraidWord& b);

/// Letters reversed with signs flipped.
BraidWord invert(const BraidWord& b);

}  // namespace braidcones
