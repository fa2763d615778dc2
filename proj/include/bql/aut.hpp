#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "bql/cosets.hpp"
#include "bql/fpres.hpp"
#include "bql/perm_group.hpp"

namespace bql {

namespace detail {

inline Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images, int degree) {
  Permutation p(degree);
  for (const Letter& l : w.letters()) {
    const Permutation& g = images[l.generator - 1];
    p = compose(p, l.sign > 0 ? g : inverse(g));
  }
  return p;
}

inline bool generates(const std::vector<Permutation>& tuple, int degree, std::uint64_t target_order) {
  std::vector<Permutation> out{Permutation(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{out[0]};
  for (size_t head = 0; head < out.size(); ++head)
    for (const Permutation& s : tuple) {
      Permutation next = compose(out[head], s);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  return out.size() == target_order;
}

}  // namespace detail

/// Counts tuples of group elements that satisfy every relator of the
/// presentation and generate the whole group. When `gen_images` is a
/// generating tuple realizing the presentation, each such tuple is the image
/// of `gen_images` under a unique automorphism, so the count is |Aut(g)|.
///
/// Preconditions are verified, not assumed: the presentation must enumerate
/// to exactly |g| cosets over the trivial subgroup, and `gen_images` must lie
/// in g, satisfy the relators, and generate. Groups beyond 400 elements are
/// refused.
inline std::int64_t automorphism_count(const PermGroup& g, const Presentation& pres,
                                       const std::vector<Permutation>& gen_images,
                                       Budget tc_budget = Budget{}) {
  const std::uint64_t n = g.order();
  if (n > 400) throw std::runtime_error("automorphism_count budget exceeded (|g| > 400)");

  EnumerationResult check = enumerate(pres, {}, tc_budget);
  if (!check.completed() || static_cast<std::uint64_t>(check.index) != n)
    throw std::invalid_argument("presentation does not present the given group");

  if (gen_images.size() != static_cast<size_t>(pres.generator_count))
    throw std::invalid_argument("need one image per presentation generator");
  for (const Permutation& p : gen_images)
    if (!g.contains(p)) throw std::invalid_argument("generator image outside the group");
  for (const Word& r : pres.relators)
    if (!detail::evaluate_word(r, gen_images, g.degree()).is_identity())
      throw std::invalid_argument("generator images do not satisfy the relators");
  if (!detail::generates(gen_images, g.degree(), n))
    throw std::invalid_argument("generator images do not generate the group");

  const std::vector<Permutation> all = elements(g, 401);

  // relators are checked as soon as every generator they mention is assigned
  const int k = pres.generator_count;
  std::vector<std::vector<const Word*>> due(k + 1);
  for (const Word& r : pres.relators) due[r.max_generator()].push_back(&r);

  std::vector<Permutation> tuple(k, Permutation(g.degree()));
  std::int64_t count = 0;
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      if (detail::generates(tuple, g.degree(), n)) ++count;
      return;
    }
    for (const Permutation& cand : all) {
      tuple[depth] = cand;
      bool ok = true;
      for (const Word* r : due[depth + 1])
        if (!detail::evaluate_word(*r, tuple, g.degree()).is_identity()) {
          ok = false;
          break;
        }
      if (ok) self(self, depth + 1);
    }
  };
  dfs(dfs, 0);
  return count;
}

}  // namespace bql
