#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bql {

/// 64-bit integer whose arithmetic throws std::overflow_error instead of wrapping.
struct CheckedInt {
  long long v = 0;

  CheckedInt() = default;
  CheckedInt(long long x) : v(x) {}

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    long long r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw std::overflow_error("integer overflow in +");
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    long long r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw std::overflow_error("integer overflow in -");
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    long long r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw std::overflow_error("integer overflow in *");
    return r;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (b.v == 0) throw std::domain_error("division by zero");
    if (a.v == std::numeric_limits<long long>::min() && b.v == -1)
      throw std::overflow_error("integer overflow in /");
    return a.v / b.v;
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) { return a.v % b.v; }
  friend CheckedInt operator-(CheckedInt a) {
    if (a.v == std::numeric_limits<long long>::min()) throw std::overflow_error("integer overflow in negate");
    return -a.v;
  }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v == b.v; }
  friend bool operator<(CheckedInt a, CheckedInt b) { return a.v < b.v; }
  friend bool operator>(CheckedInt a, CheckedInt b) { return a.v > b.v; }
};

inline CheckedInt abs_val(CheckedInt a) { return a.v < 0 ? -a : a; }
inline boost::multiprecision::cpp_int abs_val(const boost::multiprecision::cpp_int& a) {
  return a < 0 ? boost::multiprecision::cpp_int(-a) : a;
}
inline bool is_zero(CheckedInt a) { return a.v == 0; }
inline bool is_zero(const boost::multiprecision::cpp_int& a) { return a == 0; }

inline CheckedInt gcd_val(CheckedInt a, CheckedInt b) {
  return static_cast<long long>(std::gcd(a.v, b.v));
}
inline boost::multiprecision::cpp_int gcd_val(const boost::multiprecision::cpp_int& a,
                                              const boost::multiprecision::cpp_int& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Diagonal of the Smith normal form of an integer matrix, as a divisibility
/// chain d1 | d2 | ..., entries nonnegative, zeros trailing. Row/column
/// operations with the smallest-magnitude entry as pivot.
template <typename Int>
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  const size_t steps = std::min(rows, cols);

  std::vector<Int> diag;
  for (size_t t = 0; t < steps; ++t) {
    // smallest nonzero entry of the trailing submatrix becomes the pivot
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (is_zero(m[i][j])) continue;
        if (!found || abs_val(m[i][j]) < abs_val(m[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    // clear row and column t; a nonzero remainder becomes the new, smaller pivot
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (is_zero(m[i][t])) continue;
        Int q = m[i][t] / m[t][t];
        for (size_t j = t; j < cols; ++j) m[i][j] = m[i][j] - q * m[t][j];
        if (!is_zero(m[i][t])) {
          std::swap(m[t], m[i]);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (is_zero(m[t][j])) continue;
        Int q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][t];
        if (!is_zero(m[t][j])) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          dirty = true;
        }
      }
    }
    diag.push_back(abs_val(m[t][t]));
  }

  // enforce the divisibility chain: diag(a, b) ~ diag(gcd(a, b), lcm(a, b))
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < diag.size(); ++i)
      for (size_t j = i + 1; j < diag.size(); ++j) {
        if (is_zero(diag[j]) || (!is_zero(diag[i]) && is_zero(diag[j] % diag[i]))) continue;
        if (is_zero(diag[i])) {
          std::swap(diag[i], diag[j]);
          changed = true;
          continue;
        }
        Int g = gcd_val(diag[i], diag[j]);
        Int l = (diag[i] / g) * diag[j];
        diag[i] = g;
        diag[j] = l;
        changed = true;
      }
  }
  return diag;
}

}  // namespace bql
