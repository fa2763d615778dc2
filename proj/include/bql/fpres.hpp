#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "bql/smith.hpp"
#include "bql/word.hpp"

namespace bql {

/// Finitely presented group: generator count plus relator words.
/// Relators are stored cyclically reduced.
struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;

  Presentation() = default;
  Presentation(int gens, std::vector<Word> rels) : generator_count(gens) {
    if (gens < 0) throw std::invalid_argument("generator count must be >= 0");
    relators.reserve(rels.size());
    for (Word& r : rels) {
      Word cr = cyclically_reduce(r);
      if (cr.max_generator() > gens)
        throw std::invalid_argument("relator uses generator " + std::to_string(cr.max_generator()) +
                                    " outside range 1.." + std::to_string(gens));
      relators.push_back(std::move(cr));
    }
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Standard presentation of the n-strand braid group: generators 1..n-1,
/// commutation relators for distant pairs, then the braid relators.
inline Presentation artin_presentation(int n) {
  if (n < 2) throw std::invalid_argument("braid presentation needs n >= 2");
  std::vector<Word> rels;
  for (int i = 1; i + 2 <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) rels.push_back(Word({i, j, -i, -j}));
  for (int i = 1; i + 1 <= n - 1; ++i) rels.push_back(Word({i, i + 1, i, -(i + 1), -i, -(i + 1)}));
  return Presentation(n - 1, std::move(rels));
}

inline Presentation add_relators(const Presentation& p, const std::vector<Word>& extra) {
  std::vector<Word> rels = p.relators;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Presentation(p.generator_count, std::move(rels));
}

/// Presentation of the alternating group on n letters by n-2 generators of
/// order 3 whose pairwise products have order 2.
inline Presentation carmichael_presentation(int n) {
  if (n < 4) throw std::invalid_argument("carmichael presentation needs n >= 4");
  std::vector<Word> rels;
  for (int i = 1; i <= n - 2; ++i) rels.push_back(Word({i, i, i}));
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 2; ++j) rels.push_back(Word({i, j, i, j}));
  return Presentation(n - 2, std::move(rels));
}

/// Invariants of the abelianized group: free rank plus torsion chain d1 | d2 | ...
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

namespace detail {

template <typename Int>
AbelianInvariants abelian_invariants_with(const Presentation& p) {
  std::vector<std::vector<Int>> m(p.generator_count,
                                  std::vector<Int>(p.relators.size(), Int(0)));
  for (size_t j = 0; j < p.relators.size(); ++j)
    for (const Letter& l : p.relators[j].letters()) m[l.generator - 1][j] = m[l.generator - 1][j] + Int(l.sign);

  std::vector<Int> diag = smith_diagonal(std::move(m));
  AbelianInvariants out;
  out.free_rank = p.generator_count - static_cast<int>(diag.size());
  for (const Int& d : diag) {
    if constexpr (std::is_same_v<Int, CheckedInt>) {
      if (d.v >= 2) out.torsion.push_back(d.v);
    } else {
      if (d >= 2) {
        if (d > std::numeric_limits<long long>::max())
          throw std::overflow_error("torsion coefficient exceeds 64 bits");
        out.torsion.push_back(static_cast<long long>(d));
      }
    }
  }
  return out;
}

}  // namespace detail

/// Smith normal form of the relator exponent matrix. Runs in checked 64-bit
/// arithmetic and retries with unbounded integers if that overflows.
inline AbelianInvariants abelianization(const Presentation& p) {
  try {
    return detail::abelian_invariants_with<CheckedInt>(p);
  } catch (const std::overflow_error&) {
    return detail::abelian_invariants_with<boost::multiprecision::cpp_int>(p);
  }
}

// ---- presentation file format -------------------------------------------
//
//   gens 4
//   1 3 -1 -3
//   ...
//   sub
//   1
//
// '#' starts a comment; blank lines are ignored; the "sub" section holding
// subgroup generator words is optional.

struct PresentationFile {
  Presentation presentation;
  std::vector<Word> subgroup;
};

inline PresentationFile read_presentation(std::istream& in) {
  std::string line;
  int gens = -1;
  std::vector<Word> relators, subgroup;
  bool in_sub = false;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    {
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) {
        if (!trimmed.empty()) trimmed += ' ';
        trimmed += tok;
      }
    }
    if (trimmed.empty()) continue;
    if (gens < 0) {
      std::istringstream ss(trimmed);
      std::string kw;
      ss >> kw;
      if (kw != "gens" || !(ss >> gens) || gens < 0)
        throw std::invalid_argument("presentation file must start with 'gens <count>'");
      continue;
    }
    if (trimmed == "sub") {
      in_sub = true;
      continue;
    }
    (in_sub ? subgroup : relators).push_back(Word::parse(trimmed));
  }
  if (gens < 0) throw std::invalid_argument("presentation file missing 'gens' header");
  for (const Word& w : subgroup)
    if (w.max_generator() > gens) throw std::invalid_argument("subgroup word outside generator range");
  return PresentationFile{Presentation(gens, std::move(relators)), std::move(subgroup)};
}

inline PresentationFile read_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_presentation(in);
}

inline void write_presentation(std::ostream& out, const Presentation& p,
                               const std::vector<Word>& subgroup = {}) {
  out << "gens " << p.generator_count << '\n';
  for (const Word& r : p.relators) out << r.str() << '\n';
  if (!subgroup.empty()) {
    out << "sub\n";
    for (const Word& w : subgroup) out << w.str() << '\n';
  }
}

}  // namespace bql
