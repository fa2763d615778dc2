#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bql {

/// Bijection of {1..n}. Composition convention throughout is left-to-right:
/// compose(p, q) applies p first, then q.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree) : images_(degree) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    std::iota(images_.begin(), images_.end(), 0);
  }

  /// One-line notation with 1-based values, e.g. {2,3,1} for the 3-cycle.
  static Permutation from_one_line(const std::vector<int>& one_based) {
    Permutation p;
    p.images_.resize(one_based.size());
    std::vector<bool> seen(one_based.size(), false);
    for (size_t i = 0; i < one_based.size(); ++i) {
      int v = one_based[i];
      if (v < 1 || v > static_cast<int>(one_based.size()) || seen[v - 1])
        throw std::invalid_argument("one-line notation is not a bijection");
      seen[v - 1] = true;
      p.images_[i] = v - 1;
    }
    return p;
  }

  static Permutation transposition(int degree, int a, int b) {
    Permutation p(degree);
    if (a < 1 || b < 1 || a > degree || b > degree || a == b)
      throw std::invalid_argument("bad transposition points");
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
  }

  /// Accepts cycle notation "(1 2 3)(4 5)" (also with commas) and one-line
  /// notation "[2 3 1 5 4]". Cycle notation needs an explicit degree.
  static Permutation parse(std::string_view text, int degree = 0);

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of a 1-based point.
  int apply(int point) const {
    if (point < 1 || point > degree()) throw std::out_of_range("point out of range");
    return images_[point - 1] + 1;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  std::vector<int> one_line() const {
    std::vector<int> out(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
    return out;
  }

  std::string cycle_str() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      int j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        first = false;
        j = images_[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.images_.size() <=> b.images_.size(); c != 0) return c;
    for (size_t i = 0; i < a.images_.size(); ++i)
      if (auto c = a.images_[i] <=> b.images_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  // 0-based internal access, used by the algorithm kernels.
  int image0(int i) const { return images_[i]; }
  static Permutation from_images0(std::vector<int> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

 private:
  std::vector<int> images_;
};

/// Apply p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q.image0(p.image0(i));
  return Permutation::from_images0(std::move(img));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[p.image0(i)] = i;
  return Permutation::from_images0(std::move(img));
}

/// Unordered cycle lengths, fixed points included; e.g. identity on 5 -> {1,1,1,1,1}.
inline std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = p.image0(j);
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return lengths;
}

enum class Parity { even, odd };

inline Parity parity(const Permutation& p) {
  int transpositions = 0;
  for (int len : cycle_type(p)) transpositions += len - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

inline bool is_even(const Permutation& p) { return parity(p) == Parity::even; }

inline int order(const Permutation& p) {
  long long o = 1;
  for (int len : cycle_type(p)) o = std::lcm(o, static_cast<long long>(len));
  return static_cast<int>(o);
}

inline bool is_three_cycle(const Permutation& p) {
  auto ct = cycle_type(p);
  return !ct.empty() && ct[0] == 3 && (ct.size() < 2 || ct[1] == 1);
}

inline Permutation Permutation::parse(std::string_view text, int degree) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  auto read_int = [&]() {
    skip_ws();
    size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc() || end == pos) throw std::invalid_argument("bad permutation literal");
    pos = end;
    return value;
  };

  skip_ws();
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    std::vector<int> one_based;
    skip_ws();
    while (pos < text.size() && text[pos] != ']') {
      one_based.push_back(read_int());
      skip_ws();
    }
    if (pos == text.size()) throw std::invalid_argument("unterminated one-line notation");
    ++pos;
    return from_one_line(one_based);
  }

  // Cycle notation; "()" is the identity.
  std::vector<std::vector<int>> cycles;
  int max_point = degree;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      int v = read_int();
      if (v < 1) throw std::invalid_argument("cycle points are 1-based");
      max_point = std::max(max_point, v);
      cycle.push_back(v);
      skip_ws();
    }
    if (pos == text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;
    if (!cycle.empty()) cycles.push_back(cycle);
  }
  Permutation p(max_point);
  std::vector<int> img(max_point);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cycle : cycles) {
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i] - 1;
      int to = cycle[(i + 1) % cycle.size()] - 1;
      if (img[from] != from) throw std::invalid_argument("point repeated across cycles");
      img[from] = to;
    }
  }
  return Permutation::from_images0(std::move(img));
}

struct PermutationHash {
  size_t operator()(const Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < p.degree(); ++i) {
      h ^= static_cast<size_t>(p.image0(i));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace bql
