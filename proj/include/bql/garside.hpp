#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "bql/braid.hpp"

namespace bql {

namespace garside_detail {

/// Permutation of the half twist: x -> n+1-x.
inline Permutation half_twist(int n) {
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = n - 1 - x;
  return Permutation::from_images0(std::move(img));
}

inline int inversions(const Permutation& p) {
  int count = 0;
  for (int a = 0; a < p.degree(); ++a)
    for (int b = a + 1; b < p.degree(); ++b)
      if (p.image0(a) > p.image0(b)) ++count;
  return count;
}

/// Descent positions, 0-based: i such that p(i) > p(i+1). For a permutation
/// braid these are exactly the Artin generators dividing it on the left.
inline std::vector<bool> starting_set(const Permutation& p) {
  std::vector<bool> s(p.degree() > 0 ? p.degree() - 1 : 0, false);
  for (int i = 0; i + 1 < p.degree(); ++i) s[i] = p.image0(i) > p.image0(i + 1);
  return s;
}

/// Artin generators dividing a permutation braid on the right: descents of p^-1.
inline std::vector<bool> finishing_set(const Permutation& p) { return starting_set(inverse(p)); }

inline Permutation adjacent_transposition(int n, int i0) {
  return Permutation::transposition(n, i0 + 1, i0 + 2);
}

/// Slides initial letters of b into a until the pair is left-weighted.
/// Returns whether anything moved. A letter i moves when it starts b (a
/// descent of b) but does not finish a (no descent of a^-1), and the move is
/// a value swap in a paired with a row swap in b.
inline bool left_weight_pair(Permutation& a, Permutation& b) {
  const int n = a.degree();
  std::vector<int> av(n), ainv(n), bv(n);
  for (int x = 0; x < n; ++x) {
    av[x] = a.image0(x);
    ainv[av[x]] = x;
    bv[x] = b.image0(x);
  }
  bool changed = false;
  while (true) {
    int i = -1;
    for (int m = 0; m + 1 < n; ++m)
      if (bv[m] > bv[m + 1] && ainv[m] < ainv[m + 1]) {
        i = m;
        break;
      }
    if (i < 0) break;
    std::swap(av[ainv[i]], av[ainv[i + 1]]);
    std::swap(ainv[i], ainv[i + 1]);
    std::swap(bv[i], bv[i + 1]);
    changed = true;
  }
  if (changed) {
    a = Permutation::from_images0(std::move(av));
    b = Permutation::from_images0(std::move(bv));
  }
  return changed;
}

}  // namespace garside_detail

/// Left-weighted Garside normal form: a power of the half twist followed by
/// permutation-braid factors, none trivial and none the half twist, each
/// adjacent pair left-weighted. Two braid words are equal in the braid group
/// iff their normal forms match component-wise.
class GarsideNormalForm {
 public:
  GarsideNormalForm(int strands, int delta_power, std::vector<Permutation> factors)
      : strands_(strands), delta_power_(delta_power), factors_(std::move(factors)) {
    const Permutation omega = garside_detail::half_twist(strands_);
    const Permutation id(strands_);
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].degree() != strands_) throw std::invalid_argument("factor degree mismatch");
      if (factors_[i] == id) throw std::invalid_argument("identity factor in normal form");
      if (factors_[i] == omega) throw std::invalid_argument("half-twist factor in normal form");
      if (i + 1 < factors_.size()) {
        auto start = garside_detail::starting_set(factors_[i + 1]);
        auto fin = garside_detail::finishing_set(factors_[i]);
        for (size_t m = 0; m < start.size(); ++m)
          if (start[m] && !fin[m]) throw std::invalid_argument("factors not left-weighted");
      }
    }
  }

  int strands() const { return strands_; }
  int delta_power() const { return delta_power_; }
  const std::vector<Permutation>& factors() const { return factors_; }

  /// sum of factor crossing counts plus the half-twist contribution
  long long exponent_sum() const {
    long long s = static_cast<long long>(delta_power_) * (static_cast<long long>(strands_) * (strands_ - 1) / 2);
    for (const Permutation& f : factors_) s += garside_detail::inversions(f);
    return s;
  }

  Permutation permutation() const {
    Permutation p(strands_);
    const Permutation omega = garside_detail::half_twist(strands_);
    if (delta_power_ % 2 != 0) p = omega;
    for (const Permutation& f : factors_) p = compose(p, f);
    return p;
  }

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;

 private:
  int strands_;
  int delta_power_;
  std::vector<Permutation> factors_;
};

/// Canonical form of a braid word; decides the word problem.
inline GarsideNormalForm normal_form(const BraidWord& b) {
  using namespace garside_detail;
  const int n = b.strands;
  const Permutation omega = half_twist(n);
  const Permutation id(n);

  int delta = 0;
  std::vector<Permutation> fac;
  fac.reserve(b.word.size());
  for (const Letter& l : b.word.letters()) {
    if (l.sign > 0) {
      fac.push_back(adjacent_transposition(n, l.generator - 1));
    } else {
      // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1): pull the Delta^-1 to the front
      delta -= 1;
      for (Permutation& f : fac) f = compose(compose(omega, f), omega);
      fac.push_back(compose(omega, adjacent_transposition(n, l.generator - 1)));
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    std::erase_if(fac, [&](const Permutation& f) { return f == id; });
    for (size_t k = 0; k + 1 < fac.size(); ++k)
      if (left_weight_pair(fac[k], fac[k + 1])) changed = true;
  }
  size_t lead = 0;
  while (lead < fac.size() && fac[lead] == omega) ++lead;
  delta += static_cast<int>(lead);
  fac.erase(fac.begin(), fac.begin() + lead);

  return GarsideNormalForm(n, delta, std::move(fac));
}

/// Equality in the braid group.
inline bool words_equal(const BraidWord& a, const BraidWord& b) {
  detail::check_same_strands(a, b);
  return normal_form(a) == normal_form(b);
}

inline bool commutes(const BraidWord& a, const BraidWord& b) {
  return words_equal(a * b, b * a);
}

/// Positive Artin word of a permutation braid; length equals the crossing count.
inline Word artin_word(const Permutation& factor) {
  Permutation p = factor;
  std::vector<Letter> letters;
  while (true) {
    auto start = garside_detail::starting_set(p);
    int i = -1;
    for (size_t m = 0; m < start.size(); ++m)
      if (start[m]) {
        i = static_cast<int>(m);
        break;
      }
    if (i < 0) break;
    letters.push_back(Letter{i + 1, 1});
    p = compose(garside_detail::adjacent_transposition(p.degree(), i), p);
  }
  return Word(letters);
}

/// Rebuilds a braid word from a normal form (for round-trip checks).
inline BraidWord braid_word(const GarsideNormalForm& nf) {
  Word delta_word = artin_word(garside_detail::half_twist(nf.strands()));
  Word out = power(delta_word, nf.delta_power());
  for (const Permutation& f : nf.factors()) out = multiply(out, artin_word(f));
  return BraidWord(nf.strands(), out);
}

}  // namespace bql
