#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdlib>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bql {

/// One signed generator symbol; `generator` is 1-based.
struct Letter {
  int generator;
  int sign;  // +1 or -1

  static Letter from_int(int v) {
    if (v == 0) throw std::invalid_argument("letter value must be nonzero");
    return v > 0 ? Letter{v, +1} : Letter{-v, -1};
  }
  int to_int() const { return sign * generator; }
  Letter inverse() const { return Letter{generator, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

namespace detail {

inline void check_letter(const Letter& l) {
  if (l.generator < 1) throw std::invalid_argument("generator index must be >= 1");
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
}

inline std::vector<Letter> reduce_letters(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    check_letter(l);
    if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace detail

/// Freely reduced word over an abstract alphabet of 1-based generators.
/// Constructors reduce eagerly; instances are immutable afterwards.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& raw) : letters_(detail::reduce_letters(raw)) {}
  Word(std::initializer_list<int> ints) {
    std::vector<Letter> raw;
    raw.reserve(ints.size());
    for (int v : ints) raw.push_back(Letter::from_int(v));
    letters_ = detail::reduce_letters(raw);
  }

  /// Text syntax: whitespace-separated signed integers, e.g. "2 -1".
  /// The empty string is the identity. Rejects 0 and non-integer tokens.
  static Word parse(std::string_view text) {
    std::vector<Letter> raw;
    size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == text.size()) break;
      size_t end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
      if (ec != std::errc() || ptr != text.data() + end)
        throw std::invalid_argument("bad word token: '" + std::string(text.substr(pos, end - pos)) + "'");
      if (value == 0) throw std::invalid_argument("word letters must be nonzero");
      raw.push_back(Letter::from_int(value));
      pos = end;
    }
    return Word(raw);
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  /// Largest generator index appearing, 0 for the identity.
  int max_generator() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.generator);
    return m;
  }

  std::string str() const {
    std::string out;
    for (const Letter& l : letters_) {
      if (!out.empty()) out += ' ';
      out += std::to_string(l.to_int());
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    for (size_t i = 0; i < a.letters_.size(); ++i)
      if (auto c = a.letters_[i].to_int() <=> b.letters_[i].to_int(); c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of a raw letter sequence.
inline Word reduce(const std::vector<Letter>& raw) { return Word(raw); }

inline Word multiply(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters();
  raw.insert(raw.end(), b.letters().begin(), b.letters().end());
  return Word(raw);
}

inline Word invert(const Word& a) {
  std::vector<Letter> raw;
  raw.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) raw.push_back(it->inverse());
  return Word(raw);
}

inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

/// g a g^-1.
inline Word conjugate(const Word& a, const Word& g) {
  return multiply(multiply(g, a), invert(g));
}

inline Word power(const Word& a, int k) {
  Word base = k >= 0 ? a : invert(a);
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out = multiply(out, base);
  return out;
}

/// Signed letter count; the abelianization map for braid words.
inline long long exponent_sum(const Word& a) {
  long long s = 0;
  for (const Letter& l : a.letters()) s += l.sign;
  return s;
}

/// Strips any conjugating shell x ... x^-1 around the word.
inline Word cyclically_reduce(const Word& a) {
  std::vector<Letter> ls = a.letters();
  size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
}

/// All cyclic rotations of the cyclically reduced core of `a`.
inline std::set<Word> cyclic_conjugates(const Word& a) {
  Word core = cyclically_reduce(a);
  std::set<Word> out;
  if (core.empty()) {
    out.insert(Word());
    return out;
  }
  std::vector<Letter> ls = core.letters();
  for (size_t r = 0; r < ls.size(); ++r) {
    std::vector<Letter> rot(ls.begin() + r, ls.end());
    rot.insert(rot.end(), ls.begin(), ls.begin() + r);
    out.insert(Word(rot));
  }
  return out;
}

}  // namespace bql
