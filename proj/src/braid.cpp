#include "braidcones/braid.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace braidcones {

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

BraidWord make_braid(int strands, std::vector<Letter> letters) {
  if (strands < 2 || strands > 127) {
    throw std::invalid_argument("strand count must be in 2..127");
  }
  for (Letter l : letters) {
    if (l == 0 || l >= strands || l <= -strands) {
      throw std::invalid_argument("braid letter " + std::to_string(l) +
                                  " out of range for " +
                                  std::to_string(strands) + " strands");
    }
  }
  return BraidWord{strands, std::move(letters)};
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos >= text.size()) throw std::invalid_argument("empty braid text");

  if (text[pos] == '[') {
    std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("unterminated array form");
    }
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::size_t p = 0;
    while (p < body.size()) {
      while (p < body.size() &&
             (body[p] == ',' ||
              std::isspace(static_cast<unsigned char>(body[p]))))
        ++p;
      if (p >= body.size()) break;
      std::size_t e = p;
      while (e < body.size() && body[e] != ',' &&
             !std::isspace(static_cast<unsigned char>(body[e])))
        ++e;
      letters.push_back(parse_int(body.substr(p, e - p)));
      p = e;
    }
  } else if (text.substr(pos) == "1") {
    // trivial braid
  } else {
    while (pos < text.size()) {
      skip_ws();
      if (pos >= text.size()) break;
      std::size_t end = pos;
      while (end < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[end])))
        ++end;
      std::string_view tok = text.substr(pos, end - pos);
      pos = end;
      if (tok[0] != 's') {
        throw std::invalid_argument("bad braid token '" + std::string(tok) +
                                    "' (expected s<i> or s<i>^<e>)");
      }
      tok.remove_prefix(1);
      std::size_t caret = tok.find('^');
      int index = parse_int(caret == std::string_view::npos
                                ? tok
                                : tok.substr(0, caret));
      int exp = 1;
      if (caret != std::string_view::npos) exp = parse_int(tok.substr(caret + 1));
      if (index < 1) throw std::invalid_argument("braid index must be >= 1");
      for (int i = 0, n = exp >= 0 ? exp : -exp; i < n; ++i) {
        letters.push_back(exp > 0 ? index : -index);
      }
    }
  }

  int n;
  if (strands) {
    n = *strands;
  } else {
    int max_index = 1;
    for (Letter l : letters) max_index = std::max(max_index, l > 0 ? l : -l);
    n = max_index + 1;
  }
  return make_braid(n, std::move(letters));
}

std::string braid_str(const BraidWord& b) {
  if (b.letters.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < b.letters.size()) {
    std::size_t j = i;
    while (j < b.letters.size() && b.letters[j] == b.letters[i]) ++j;
    Letter l = b.letters[i];
    int run = static_cast<int>(j - i);
    if (!out.empty()) out += ' ';
    out += 's';
    out += std::to_string(l > 0 ? l : -l);
    int exp = l > 0 ? run : -run;
    if (exp != 1) {
      out += '^';
      out += std::to_string(exp);
    }
    i = j;
  }
  return out;
}

BraidWord invert(const BraidWord& b) {
  std::vector<Letter> letters;
  letters.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    letters.push_back(-*it);
  }
  return BraidWord{b.strands, std::move(letters)};
}

}  // namespace braidcones
