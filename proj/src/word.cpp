#include "braidcones/word.hpp"

#include <charconv>
#include <stdexcept>

namespace braidcones {

namespace {

void require_same_rank(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("word rank mismatch: " +
                                std::to_string(a.rank()) + " vs " +
                                std::to_string(b.rank()));
  }
}

void push_reduced(std::string& s, char c) {
  if (!s.empty() && static_cast<signed char>(s.back()) ==
                        -static_cast<signed char>(c)) {
    s.pop_back();
  } else {
    s.push_back(c);
  }
}

void check_letter(Letter l, int rank) {
  if (l == 0) throw std::invalid_argument("letter 0 is not a generator");
  if (l > rank || l < -rank) {
    throw std::invalid_argument("letter " + std::to_string(l) +
                                " out of range for rank " +
                                std::to_string(rank));
  }
}

}  // namespace

Word::Word(int rank, std::string letters)
    : letters_(std::move(letters)), rank_(static_cast<std::int8_t>(rank)) {}

void Word::check_rank(int rank) {
  if (rank < 1 || rank > 127) {
    throw std::invalid_argument("rank must be in 1..127, got " +
                                std::to_string(rank));
  }
}

Word Word::identity(int rank) {
  check_rank(rank);
  return Word(rank, std::string());
}

Word Word::generator(int rank, Letter l) {
  check_rank(rank);
  check_letter(l, rank);
  return Word(rank, std::string(1, static_cast<char>(l)));
}

Word Word::reduce(int rank, std::span<const Letter> letters) {
  check_rank(rank);
  std::string out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(l, rank);
    push_reduced(out, static_cast<char>(l));
  }
  return Word(rank, std::move(out));
}

Word Word::reduce(int rank, std::initializer_list<Letter> letters) {
  return reduce(rank, std::span<const Letter>(letters.begin(), letters.size()));
}

Word Word::from_reduced(int rank, std::span<const Letter> letters) {
  Word w = reduce(rank, letters);
  if (w.length() != static_cast<int>(letters.size())) {
    throw std::invalid_argument("letter sequence is not freely reduced");
  }
  return w;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (char c : letters_) out.push_back(static_cast<signed char>(c));
  return out;
}

int Word::exponent_sum() const {
  int sum = 0;
  for (char c : letters_) sum += static_cast<signed char>(c) > 0 ? 1 : -1;
  return sum;
}

std::string Word::str() const {
  if (is_identity()) return "1";
  std::string out;
  for (int i = 0; i < length(); ++i) {
    if (i > 0) out += ' ';
    Letter l = letter(i);
    out += 'x';
    out += std::to_string(l > 0 ? l : -l);
    if (l < 0) out += "^-1";
  }
  return out;
}

Word mul(const Word& a, const Word& b) {
  require_same_rank(a, b);
  std::string out = a.letters_;
  out.reserve(a.letters_.size() + b.letters_.size());
  for (char c : b.letters_) push_reduced(out, c);
  return Word(a.rank(), std::move(out));
}

Word inv(const Word& a) {
  std::string out;
  out.reserve(a.letters_.size());
  for (auto it = a.letters_.rbegin(); it != a.letters_.rend(); ++it) {
    out.push_back(static_cast<char>(-static_cast<signed char>(*it)));
  }
  return Word(a.rank(), std::move(out));
}

Word conj(const Word& g, const Word& h) {
  require_same_rank(g, h);
  std::string out = h.letters_;
  out.reserve(h.letters_.size() * 2 + g.letters_.size());
  for (char c : g.letters_) push_reduced(out, c);
  for (auto it = h.letters_.rbegin(); it != h.letters_.rend(); ++it) {
    push_reduced(out, static_cast<char>(-static_cast<signed char>(*it)));
  }
  return Word(g.rank(), std::move(out));
}

Word conj_by_letter(const Word& g, Letter l) {
  check_letter(l, g.rank());
  std::string out(1, static_cast<char>(l));
  out.reserve(g.letters_.size() + 2);
  for (char c : g.letters_) push_reduced(out, c);
  push_reduced(out, static_cast<char>(-l));
  return Word(g.rank(), std::move(out));
}

Word power(const Word& w, int e) {
  Word result = Word::identity(w.rank());
  const Word base = e >= 0 ? w : inv(w);
  for (int i = 0, n = e >= 0 ? e : -e; i < n; ++i) result = mul(result, base);
  return result;
}

std::strong_ordering compare_words(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() <=> b.length();
  for (int i = 0; i < a.length(); ++i) {
    int pa = letter_position(a.letter(i));
    int pb = letter_position(b.letter(i));
    if (pa != pb) return pa <=> pb;
  }
  return std::strong_ordering::equal;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  }
  return value;
}

std::vector<Letter> parse_int_array(std::string_view body) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() &&
           (body[pos] == ',' || std::isspace(static_cast<unsigned char>(body[pos]))))
      ++pos;
    if (pos >= body.size()) break;
    std::size_t end = pos;
    while (end < body.size() && body[end] != ',' &&
           !std::isspace(static_cast<unsigned char>(body[end])))
      ++end;
    letters.push_back(parse_int(body.substr(pos, end - pos)));
    pos = end;
  }
  return letters;
}

}  // namespace

Word Word::parse(std::string_view text, int rank) {
  check_rank(rank);
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty word text");
  if (s == "1") return identity(rank);
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated array form");
    auto letters = parse_int_array(s.substr(1, s.size() - 2));
    return reduce(rank, letters);
  }
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos >= s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end])))
      ++end;
    std::string_view tok = s.substr(pos, end - pos);
    pos = end;
    if (tok.empty()) continue;
    if (tok[0] != 'x') {
      throw std::invalid_argument("bad word token '" + std::string(tok) +
                                  "' (expected x<i> or x<i>^<e>)");
    }
    tok.remove_prefix(1);
    std::size_t caret = tok.find('^');
    int index = parse_int(caret == std::string_view::npos ? tok
                                                          : tok.substr(0, caret));
    int exp = 1;
    if (caret != std::string_view::npos) exp = parse_int(tok.substr(caret + 1));
    if (index < 1) throw std::invalid_argument("generator index must be >= 1");
    for (int i = 0, n = exp >= 0 ? exp : -exp; i < n; ++i) {
      letters.push_back(exp > 0 ? index : -index);
    }
  }
  return reduce(rank, letters);
}

}  // namespace braidcones
