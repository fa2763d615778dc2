#pragma once

#include <stdexcept>
#include <vector>

#include "bql/braid.hpp"
#include "bql/garside.hpp"

namespace bql {

/// Conjugator g, with exponent sum 0, carrying the base element
/// alpha_{123} = sigma_2 sigma_1^-1 onto alpha_{ijk} (or beta_{ijk}):
/// words_equal(g * alpha_123 * g^-1, target) holds.
///
/// Construction: walk the endpoints 3 -> k, 2 -> j, 1 -> i upward one
/// position at a time; conjugation by sigma_m moves a band endpoint from m to
/// m+1 and fixes bands not touching {m, m+1}, so the walk carries bands on
/// the triple exactly. The positive walk has nonzero exponent sum, which a
/// power of a below-side band on two free strands cancels; that band's arc
/// stays in the lower half plane, so it commutes with the target.
inline BraidWord change_of_coordinates_conjugator(Triple t, int n, NamedElement target) {
  if (n < 5) throw std::invalid_argument("conjugator construction needs n >= 5");
  if (target != NamedElement::alpha && target != NamedElement::beta)
    throw std::invalid_argument("target must be alpha or beta");
  auto [i, j, k] = t;
  if (!(1 <= i && i < j && j < k && k <= n)) throw std::invalid_argument("need 1 <= i < j < k <= n");

  // applied right to left: first 3 -> k, then 2 -> j, then 1 -> i
  std::vector<Letter> walk;
  for (int m = i - 1; m >= 1; --m) walk.push_back(Letter{m, 1});
  for (int m = j - 1; m >= 2; --m) walk.push_back(Letter{m, 1});
  for (int m = k - 1; m >= 3; --m) walk.push_back(Letter{m, 1});
  BraidWord g(n, Word(walk));

  if (target == NamedElement::beta)  // beta_{ijk} = rho_ij^-1 alpha_{ijk} rho_ij
    g = inverse(band_generator(i, j, n)) * g;

  long long e = exponent_sum(g.word);
  if (e != 0) {
    int r = 0, s = 0;
    for (int m = 1; m <= n && s == 0; ++m) {
      if (m == i || m == j || m == k) continue;
      if (r == 0)
        r = m;
      else
        s = m;
    }
    BraidWord corrector = band_generator(r, s, n, BandSide::below);
    g = power(corrector, static_cast<int>(-e)) * g;
  }
  return g;
}

/// Oracle-checked form: throws unless the construction verifies.
inline BraidWord verified_conjugator(Triple t, int n, NamedElement target) {
  BraidWord g = change_of_coordinates_conjugator(t, n, target);
  if (exponent_sum(g.word) != 0) throw std::logic_error("conjugator exponent sum nonzero");
  BraidWord base = named_element(NamedElement::alpha, n, Triple{1, 2, 3});
  if (!words_equal(g * base * inverse(g), named_element(target, n, t)))
    throw std::logic_error("conjugator fails verification");
  return g;
}

}  // namespace bql
