#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "bql/perm.hpp"

namespace bql {

namespace detail {

inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("group order overflows 64 bits");
  return r;
}

}  // namespace detail

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = detail::checked_mul_u64(f, static_cast<std::uint64_t>(i));
  return f;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = detail::checked_mul_u64(r, static_cast<std::uint64_t>(n - k + i)) / i;
  return r;
}

/// Permutation group given by generators, with a deterministic
/// Schreier-Sims base-and-strong-generating-set over the fixed base 1, 2, ..., n.
/// The chain is built once at construction; afterwards the group is read-only.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators)
      : degree_(degree), gens_(std::move(generators)) {
    for (const Permutation& g : gens_)
      if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    build();
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const Level& lv : levels_) o = detail::checked_mul_u64(o, lv.orbit.size());
    return o;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    return strip(p).is_identity();
  }

 private:
  struct Level {
    int base_point = 0;                                  // 0-based
    std::vector<Permutation> gens;                       // stabilize all earlier base points
    std::vector<int> orbit;                              // BFS discovery order
    std::vector<std::optional<Permutation>> transversal; // rep maps base_point to the orbit point
  };

  Permutation strip(Permutation p) const {
    for (const Level& lv : levels_) {
      int x = p.image0(lv.base_point);
      if (!lv.transversal[x]) return p;
      p = compose(p, inverse(*lv.transversal[x]));
    }
    return p;
  }

  void rebuild_orbit(Level& lv) const {
    lv.orbit.clear();
    lv.transversal.assign(degree_, std::nullopt);
    lv.orbit.push_back(lv.base_point);
    lv.transversal[lv.base_point] = Permutation(degree_);
    for (size_t head = 0; head < lv.orbit.size(); ++head) {
      int x = lv.orbit[head];
      for (const Permutation& g : lv.gens) {
        int y = g.image0(x);
        if (!lv.transversal[y]) {
          lv.transversal[y] = compose(*lv.transversal[x], g);
          lv.orbit.push_back(y);
        }
      }
    }
  }

  void build() {
    levels_.assign(degree_, Level{});
    for (int d = 0; d < degree_; ++d) levels_[d].base_point = d;
    for (const Permutation& g : gens_) place(g);
    for (Level& lv : levels_) rebuild_orbit(lv);

    // close under Schreier generators until every one sifts to the identity
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t d = 0; d < levels_.size(); ++d) {
        Level& lv = levels_[d];
        for (size_t head = 0; head < lv.orbit.size(); ++head) {
          int x = lv.orbit[head];
          for (size_t gi = 0; gi < lv.gens.size(); ++gi) {
            const Permutation g = lv.gens[gi];
            int y = g.image0(x);
            Permutation schreier =
                compose(compose(*lv.transversal[x], g), inverse(*lv.transversal[y]));
            Permutation residue = strip(std::move(schreier));
            if (!residue.is_identity()) {
              place(residue);
              for (Level& l2 : levels_) rebuild_orbit(l2);
              changed = true;
            }
          }
        }
      }
    }
  }

  /// Adds a nontrivial element to every level whose earlier base points it fixes.
  void place(const Permutation& g) {
    if (g.is_identity()) return;
    for (Level& lv : levels_) {
      lv.gens.push_back(g);
      if (g.image0(lv.base_point) != lv.base_point) break;
    }
  }

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
};

/// Generated by the consecutive 3-cycles (i, i+1, i+2).
inline PermGroup alternating_group(int n) {
  if (n < 3) throw std::invalid_argument("alternating group helper needs n >= 3");
  std::vector<Permutation> gens;
  for (int i = 1; i + 2 <= n; ++i) {
    Permutation c(n);
    c = compose(Permutation::transposition(n, i, i + 1), Permutation::transposition(n, i, i + 2));
    gens.push_back(c);
  }
  return PermGroup(n, std::move(gens));
}

inline PermGroup symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric group helper needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::transposition(n, 1, 2));
  if (n >= 3) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    gens.push_back(Permutation::from_images0(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

/// All elements in breadth-first order; throws once `limit` is exceeded.
inline std::vector<Permutation> elements(const PermGroup& g, size_t limit = 1'000'000) {
  std::vector<Permutation> out{Permutation(g.degree())};
  std::unordered_set<Permutation, PermutationHash> seen{out[0]};
  for (size_t head = 0; head < out.size(); ++head) {
    for (const Permutation& s : g.generators()) {
      Permutation next = compose(out[head], s);
      if (seen.insert(next).second) {
        if (out.size() >= limit) throw std::runtime_error("element enumeration budget exceeded");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

/// 2 * C(n, 3): the number of 3-cycles on n points.
inline std::uint64_t three_cycle_class_size(int n) {
  if (n < 3) throw std::invalid_argument("three_cycle_class_size needs n >= 3");
  return detail::checked_mul_u64(2, binomial(n, 3));
}

/// Order of the centralizer of a 3-cycle inside the alternating group:
/// brute force over the group for n <= 8, the closed form 3(n-3)!/2 beyond.
inline std::uint64_t centralizer_order_in_An(const Permutation& c, int n) {
  if (!is_three_cycle(c) || c.degree() != n) throw std::invalid_argument("need a 3-cycle on n points");
  if (n < 5) throw std::invalid_argument("centralizer_order_in_An needs n >= 5");
  if (n > 8) return detail::checked_mul_u64(3, factorial(n - 3)) / 2;
  std::uint64_t count = 0;
  for (const Permutation& p : elements(alternating_group(n)))
    if (compose(p, c) == compose(c, p)) ++count;
  return count;
}

/// Whether the commutators of the generators normally generate the whole
/// group. Brute force; groups beyond 10^6 elements are refused.
inline bool is_perfect(const PermGroup& g) {
  if (g.order() > 1'000'000) throw std::runtime_error("is_perfect budget exceeded");

  auto closure = [&](const std::vector<Permutation>& seeds) {
    std::vector<Permutation> out{Permutation(g.degree())};
    std::unordered_set<Permutation, PermutationHash> seen{out[0]};
    for (size_t head = 0; head < out.size(); ++head)
      for (const Permutation& s : seeds) {
        Permutation next = compose(out[head], s);
        if (seen.insert(next).second) out.push_back(std::move(next));
      }
    return std::pair(std::move(out), std::move(seen));
  };

  std::vector<Permutation> seeds;
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      seeds.push_back(compose(compose(inverse(gens[i]), inverse(gens[j])), compose(gens[i], gens[j])));

  while (true) {
    auto [elems, seen] = closure(seeds);
    bool grew = false;
    for (size_t si = 0, n_seeds = seeds.size(); si < n_seeds && !grew; ++si)
      for (const Permutation& h : gens) {
        Permutation conj = compose(compose(inverse(h), seeds[si]), h);
        if (!seen.count(conj)) {
          seeds.push_back(conj);
          grew = true;
          break;
        }
      }
    if (!grew) return elems.size() == g.order();
  }
}

}  // namespace bql
