#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bql/fpres.hpp"
#include "bql/garside.hpp"
#include "bql/word.hpp"

namespace bql {

struct Budget {
  std::int64_t max_live_cosets = 2'000'000;
  std::int64_t max_definitions = 2'000'000;
};

struct EnumerationStats {
  std::int64_t definitions = 0;
  std::int64_t coincidences = 0;
  double elapsed_ms = 0.0;
};

/// Completed transition table: rows x (2 * generators) matrix of coset
/// indices, column 2(g-1) for generator g and 2(g-1)+1 for its inverse.
class CosetTable {
 public:
  CosetTable(int generator_count, std::vector<std::int32_t> entries)
      : gens_(generator_count), tab_(std::move(entries)) {}

  int generator_count() const { return gens_; }
  std::int64_t rows() const { return gens_ == 0 ? 1 : static_cast<std::int64_t>(tab_.size()) / (2 * gens_); }

  std::int64_t action(std::int64_t coset, const Letter& l) const {
    int col = 2 * (l.generator - 1) + (l.sign < 0 ? 1 : 0);
    return tab_[static_cast<size_t>(coset) * 2 * gens_ + col];
  }

  std::int64_t trace(std::int64_t coset, const Word& w) const {
    for (const Letter& l : w.letters()) coset = action(coset, l);
    return coset;
  }

  /// Full certificate: total, inverse-consistent, every relator closed at
  /// every coset, every subgroup generator closed at coset 0.
  bool validates(const Presentation& p, const std::vector<Word>& subgroup) const {
    if (p.generator_count != gens_) return false;
    const std::int64_t n = rows();
    for (std::int64_t c = 0; c < n; ++c)
      for (int g = 1; g <= gens_; ++g) {
        std::int64_t fwd = action(c, Letter{g, 1});
        std::int64_t bwd = action(c, Letter{g, -1});
        if (fwd < 0 || fwd >= n || bwd < 0 || bwd >= n) return false;
        if (action(fwd, Letter{g, -1}) != c || action(bwd, Letter{g, 1}) != c) return false;
      }
    for (std::int64_t c = 0; c < n; ++c)
      for (const Word& r : p.relators)
        if (trace(c, r) != c) return false;
    for (const Word& w : subgroup)
      if (trace(0, w) != 0) return false;
    return true;
  }

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  int gens_;
  std::vector<std::int32_t> tab_;
};

struct EnumerationResult {
  enum class Outcome { completed, budget_exceeded };

  Outcome outcome = Outcome::budget_exceeded;
  std::int64_t index = 0;          // subgroup index, when completed
  std::int64_t cosets_defined = 0; // total definitions at exit
  EnumerationStats stats;
  std::optional<CosetTable> table; // compacted table, when completed

  bool completed() const { return outcome == Outcome::completed; }
};

namespace detail {

/// HLT-style coset enumerator: relator scanning with gap-filling definitions
/// and immediate coincidence processing through a union-find structure.
/// Deterministic: cosets are processed in ascending order, relators in
/// presentation order, and merges always keep the smaller index alive.
class ToddCoxeter {
 public:
  ToddCoxeter(const Presentation& p, const std::vector<Word>& subgroup, Budget budget)
      : gens_(p.generator_count), cols_(2 * p.generator_count), budget_(budget) {
    if (budget.max_live_cosets <= 0 || budget.max_definitions <= 0)
      throw std::invalid_argument("budget must be positive");
    if (budget.max_definitions > 1'000'000'000)
      throw std::invalid_argument("budget exceeds the 32-bit coset id range");
    for (const Word& w : subgroup)
      if (w.max_generator() > gens_) throw std::invalid_argument("subgroup word outside generator range");
    for (const Word& r : p.relators) relators_.push_back(to_cols(r));
    for (const Word& w : subgroup) subgens_.push_back(to_cols(w));
  }

  EnumerationResult run() {
    auto t0 = std::chrono::steady_clock::now();
    new_coset();  // coset 0 = the subgroup itself

    bool ok = true;
    for (const auto& w : subgens_)
      if (!scan_and_fill(0, w)) {
        ok = false;
        break;
      }

    // main HLT sweep
    for (std::int32_t alpha = 0; ok && alpha < size(); ++alpha) {
      if (find(alpha) != alpha) continue;
      for (const auto& r : relators_) {
        if (!scan_and_fill(alpha, r)) {
          ok = false;
          break;
        }
        if (find(alpha) != alpha) break;
      }
      if (!ok || find(alpha) != alpha) continue;
      for (std::int32_t c = 0; ok && c < cols_; ++c)
        if (at(alpha, c) == -1 && define(alpha, c) < 0) ok = false;
    }

    // closure sweeps: rescan everything until no merge fires
    while (ok) {
      bool clean = true;
      for (std::int32_t a = 0; ok && a < size(); ++a) {
        if (find(a) != a) continue;
        for (const auto& r : relators_) {
          if (!rescan(a, r, clean)) ok = false;
          if (find(a) != a) break;
        }
      }
      for (const auto& w : subgens_)
        if (ok && !rescan(0, w, clean)) ok = false;
      if (clean) break;
    }

    EnumerationResult res;
    res.cosets_defined = defs_;
    res.stats.definitions = defs_;
    res.stats.coincidences = coincs_;
    if (ok) {
      res.outcome = EnumerationResult::Outcome::completed;
      res.index = live_;
      res.table = compact();
    }
    res.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }

 private:
  int gens_;
  std::int32_t cols_;
  Budget budget_;
  std::vector<std::vector<std::int32_t>> relators_, subgens_;
  std::vector<std::int32_t> tab_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> dead_;
  size_t dead_head_ = 0;
  std::int64_t live_ = 0, defs_ = 0, coincs_ = 0;

  std::vector<std::int32_t> to_cols(const Word& w) const {
    std::vector<std::int32_t> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters()) out.push_back(2 * (l.generator - 1) + (l.sign < 0 ? 1 : 0));
    return out;
  }

  std::int32_t size() const { return static_cast<std::int32_t>(parent_.size()); }
  std::int32_t& at(std::int32_t row, std::int32_t col) { return tab_[static_cast<size_t>(row) * cols_ + col]; }

  std::int32_t find(std::int32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  std::int32_t new_coset() {
    if (live_ >= budget_.max_live_cosets || defs_ >= budget_.max_definitions) return -1;
    std::int32_t c = size();
    parent_.push_back(c);
    tab_.resize(tab_.size() + cols_, -1);
    ++live_;
    ++defs_;
    return c;
  }

  std::int32_t define(std::int32_t from, std::int32_t col) {
    std::int32_t c = new_coset();
    if (c < 0) return -1;
    at(from, col) = c;
    at(c, col ^ 1) = from;
    return c;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    std::int32_t lo = a < b ? a : b, hi = a < b ? b : a;
    parent_[hi] = lo;
    --live_;
    ++coincs_;
    dead_.push_back(hi);
  }

  /// Merges two cosets and transfers the dead rows' edges onto the survivors,
  /// queueing any further forced merges.
  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (dead_head_ < dead_.size()) {
      std::int32_t e = dead_[dead_head_++];
      for (std::int32_t c = 0; c < cols_; ++c) {
        std::int32_t f = at(e, c);
        if (f == -1) continue;
        at(e, c) = -1;
        if (at(f, c ^ 1) == e) at(f, c ^ 1) = -1;
        std::int32_t mu = find(e), nu = find(f);
        std::int32_t t = at(mu, c);
        if (t != -1) {
          merge(nu, t);
        } else {
          std::int32_t t2 = at(nu, c ^ 1);
          if (t2 != -1) {
            merge(mu, t2);
          } else {
            at(mu, c) = nu;
            at(nu, c ^ 1) = mu;
          }
        }
      }
    }
    dead_.clear();
    dead_head_ = 0;
  }

  /// Scans word w at alpha, defining cosets across gaps, until the scan
  /// closes or alpha dies. Returns false iff the budget ran out.
  bool scan_and_fill(std::int32_t alpha, const std::vector<std::int32_t>& w) {
    while (true) {
      alpha = find(alpha);
      const size_t L = w.size();
      std::int32_t fwd = alpha;
      size_t i = 0;
      while (i < L) {
        std::int32_t t = at(fwd, w[i]);
        if (t == -1) break;
        fwd = find(t);
        ++i;
      }
      if (i == L) {
        if (fwd != alpha) {
          coincidence(fwd, alpha);
          if (find(alpha) != alpha) return true;
          continue;
        }
        return true;
      }
      std::int32_t bwd = alpha, bprev = alpha;
      size_t j = L;
      while (j > i) {
        std::int32_t t = at(bwd, w[j - 1] ^ 1);
        if (t == -1) break;
        bprev = bwd;
        bwd = find(t);
        --j;
      }
      if (j == i) {
        // both scans reached the coset before letter i
        if (fwd != bwd) {
          coincidence(fwd, bwd);
          if (find(alpha) != alpha) return true;
        } else {
          // the backward scan used an edge whose forward half is missing
          // from the representative row; re-install it
          at(fwd, w[i]) = bprev;
          at(bprev, w[i] ^ 1) = fwd;
        }
        continue;
      }
      if (j == i + 1) {
        // deduction: one undefined transition joins the two scans
        at(fwd, w[i]) = bwd;
        at(bwd, w[i] ^ 1) = fwd;
        return true;
      }
      if (define(fwd, w[i]) < 0) return false;
    }
  }

  /// Closure-sweep scan: the table is total here, so the scan either closes
  /// or exposes a coincidence. Marks `clean` false when it had to merge.
  bool rescan(std::int32_t alpha, const std::vector<std::int32_t>& w, bool& clean) {
    alpha = find(alpha);
    std::int32_t f = alpha;
    for (size_t i = 0; i < w.size(); ++i) {
      std::int32_t t = at(f, w[i]);
      if (t == -1) {
        // only reachable if a merge left a gap; fill it like the main sweep
        clean = false;
        return scan_and_fill(alpha, w);
      }
      f = find(t);
    }
    if (f != alpha) {
      clean = false;
      coincidence(f, alpha);
    }
    return true;
  }

  CosetTable compact() {
    std::vector<std::int32_t> remap(parent_.size(), -1);
    std::int32_t next = 0;
    for (std::int32_t a = 0; a < size(); ++a)
      if (find(a) == a) remap[a] = next++;
    std::vector<std::int32_t> out;
    out.reserve(static_cast<size_t>(next) * cols_);
    for (std::int32_t a = 0; a < size(); ++a) {
      if (find(a) != a) continue;
      for (std::int32_t c = 0; c < cols_; ++c) {
        std::int32_t t = at(a, c);
        out.push_back(t == -1 ? -1 : remap[find(t)]);
      }
    }
    return CosetTable(gens_, std::move(out));
  }
};

}  // namespace detail

/// Index of the subgroup generated by `subgroup` in the group presented by
/// `p`, or a budget-exhaustion report. A completed run always carries a table
/// that passes CosetTable::validates.
inline EnumerationResult enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                                   Budget budget = Budget{}) {
  detail::ToddCoxeter tc(p, subgroup, budget);
  EnumerationResult res = tc.run();
  if (res.completed() && !res.table->validates(p, subgroup))
    throw std::logic_error("enumerator produced an invalid table");
  return res;
}

enum class Verdict { yes, no, inconclusive };

/// Certifies that the normal closure of `relator` inside the commutator
/// subgroup of the n-strand braid group is the whole commutator subgroup.
///
/// The criterion: enumerate the cosets of <sigma_1> in the braid group with
/// `relator` imposed. Index 1 forces that quotient to be cyclic, hence
/// abelian, so the normal closure in the braid group contains the commutator
/// subgroup; exponent sum 0 gives the reverse inclusion. Commuting with some
/// half twist transfers normal generation from the full braid group to the
/// commutator subgroup, so both preconditions are checked, not assumed.
inline Verdict index_one_certifies_normal_generation(int n, const Word& relator,
                                                     Budget budget = Budget{}) {
  if (exponent_sum(relator) != 0)
    throw std::invalid_argument("relator must have exponent sum 0");
  BraidWord r(n, relator);
  bool commutes_with_half_twist = false;
  for (int m = 1; m <= n - 1 && !commutes_with_half_twist; ++m)
    if (commutes(r, artin(m, n))) commutes_with_half_twist = true;
  for (int i = 1; i < n && !commutes_with_half_twist; ++i)
    for (int j = i + 1; j <= n && !commutes_with_half_twist; ++j)
      if (commutes(r, band_generator(i, j, n))) commutes_with_half_twist = true;
  if (!commutes_with_half_twist)
    throw std::invalid_argument("relator does not visibly commute with a half twist");

  EnumerationResult res = enumerate(add_relators(artin_presentation(n), {relator}), {Word({1})}, budget);
  if (!res.completed()) return Verdict::inconclusive;
  return res.index == 1 ? Verdict::yes : Verdict::no;
}

}  // namespace bql
