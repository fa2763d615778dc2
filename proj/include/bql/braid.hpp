#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bql/perm.hpp"
#include "bql/word.hpp"

namespace bql {

/// Word in the Artin generators of the n-strand braid group. Equality here is
/// literal (free-group) equality; equality in the braid group is decided by
/// words_equal() in garside.hpp.
struct BraidWord {
  int strands;
  Word word;

  BraidWord(int n, Word w) : strands(n), word(std::move(w)) {
    if (strands < 2) throw std::invalid_argument("braid words need at least 2 strands");
    if (word.max_generator() > strands - 1)
      throw std::invalid_argument("letter " + std::to_string(word.max_generator()) +
                                  " out of range on " + std::to_string(strands) + " strands");
  }

  /// Text syntax "n: w", e.g. "5: 2 -1".
  static BraidWord parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("braid word needs 'n: w' syntax");
    int n = std::stoi(std::string(text.substr(0, colon)));
    return BraidWord(n, Word::parse(text.substr(colon + 1)));
  }
  std::string str() const { return std::to_string(strands) + ": " + word.str(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline BraidWord artin(int i, int n) {
  if (i < 1 || i > n - 1)
    throw std::out_of_range("artin generator " + std::to_string(i) + " out of range for n=" + std::to_string(n));
  return BraidWord(n, Word({i}));
}

namespace detail {
inline void check_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
}
}  // namespace detail

inline BraidWord multiply(const BraidWord& a, const BraidWord& b) {
  detail::check_same_strands(a, b);
  return BraidWord(a.strands, multiply(a.word, b.word));
}
inline BraidWord operator*(const BraidWord& a, const BraidWord& b) { return multiply(a, b); }
inline BraidWord inverse(const BraidWord& a) { return BraidWord(a.strands, invert(a.word)); }
inline BraidWord conjugate(const BraidWord& a, const BraidWord& g) {
  detail::check_same_strands(a, g);
  return BraidWord(a.strands, conjugate(a.word, g.word));
}
inline BraidWord power(const BraidWord& a, int k) { return BraidWord(a.strands, power(a.word, k)); }

enum class BandSide { above, below };

/// Band generator: the half twist swapping punctures i and j along an arc
/// passing above (or below) the punctures in between. For j = i+1 both sides
/// collapse to the Artin generator. The permutation image is always (i j) and
/// the exponent sum is always 1.
inline BraidWord band_generator(int i, int j, int n, BandSide side = BandSide::above) {
  if (i < 1 || j <= i || j > n) throw std::invalid_argument("band generator needs 1 <= i < j <= n");
  std::vector<Letter> raw;
  for (int m = j - 1; m > i; --m) raw.push_back({m, side == BandSide::above ? 1 : -1});
  raw.push_back({i, 1});
  for (int m = i + 1; m <= j - 1; ++m) raw.push_back({m, side == BandSide::above ? -1 : 1});
  return BraidWord(n, Word(raw));
}

/// Image under the forgetful projection to S_n, reading the word left to right.
inline Permutation permutation_image(const BraidWord& b) {
  std::vector<int> img(b.strands), pos(b.strands);
  for (int x = 0; x < b.strands; ++x) img[x] = pos[x] = x;
  for (const Letter& l : b.word.letters()) {
    int a = l.generator - 1, c = l.generator;  // 0-based values to swap
    int xa = pos[a], xc = pos[c];
    std::swap(img[xa], img[xc]);
    std::swap(pos[a], pos[c]);
  }
  return Permutation::from_images0(std::move(img));
}

struct Triple {
  int i, j, k;
};

/// The named elements used throughout the verification suite.
enum class NamedElement { u, v, w, c1, alpha, beta, f };

inline NamedElement named_element_from_string(std::string_view s) {
  if (s == "u") return NamedElement::u;
  if (s == "v") return NamedElement::v;
  if (s == "w") return NamedElement::w;
  if (s == "c1") return NamedElement::c1;
  if (s == "alpha") return NamedElement::alpha;
  if (s == "beta") return NamedElement::beta;
  if (s == "f") return NamedElement::f;
  throw std::invalid_argument("unknown element name: " + std::string(s));
}

/// u, v, w, c1 and f need n >= 5; alpha and beta take a triple i < j < k <= n.
inline BraidWord named_element(NamedElement name, int n, std::optional<Triple> t = std::nullopt) {
  auto need5 = [&] {
    if (n < 5) throw std::invalid_argument("this element needs n >= 5");
  };
  switch (name) {
    case NamedElement::u:
      need5();
      return BraidWord(n, Word({2, -1}));
    case NamedElement::v:
      need5();
      return BraidWord(n, Word({1, 2, -1, -1}));
    case NamedElement::w:
      need5();
      return BraidWord(n, Word({2, 3, -1, -2}));
    case NamedElement::c1:
      need5();
      return BraidWord(n, Word({3, -1}));
    case NamedElement::f: {
      need5();
      BraidWord u2 = power(BraidWord(n, Word({2, -1})), 2);
      BraidWord rho24 = band_generator(2, 4, n);
      return u2 * rho24 * inverse(u2) * inverse(rho24);
    }
    case NamedElement::alpha:
    case NamedElement::beta: {
      if (!t) throw std::invalid_argument("alpha/beta need a triple (i, j, k)");
      auto [i, j, k] = *t;
      if (!(1 <= i && i < j && j < k && k <= n)) throw std::invalid_argument("need 1 <= i < j < k <= n");
      BraidWord rho_jk = band_generator(j, k, n);
      BraidWord rho_ij_inv = inverse(band_generator(i, j, n));
      return name == NamedElement::alpha ? rho_jk * rho_ij_inv : rho_ij_inv * rho_jk;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace bql
