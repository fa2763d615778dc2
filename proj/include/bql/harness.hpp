#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bql/aut.hpp"
#include "bql/conjugator.hpp"
#include "bql/cosets.hpp"
#include "bql/garside.hpp"
#include "bql/perm_group.hpp"

namespace bql {

/// One verdict of the verification suite. `status` is pass exactly when
/// observed equals expected; inconclusive arises only from budget exhaustion.
struct CheckReport {
  enum class Status { pass, fail, inconclusive };

  std::string check_id;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::fail;
  nlohmann::json observed;
  nlohmann::json expected;
  std::int64_t runtime_ms = 0;
  nlohmann::json stats;  // enumeration statistics, when an enumeration ran

  static const char* status_name(Status s) {
    switch (s) {
      case Status::pass: return "pass";
      case Status::fail: return "fail";
      case Status::inconclusive: return "inconclusive";
    }
    return "?";
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"check_id", check_id}, {"params", params},   {"status", status_name(status)},
                     {"observed", observed}, {"expected", expected}, {"runtime_ms", runtime_ms}};
    if (!stats.is_null()) j["stats"] = stats;
    return j;
  }

  std::string line() const {
    std::string out = status_name(status);
    out.resize(13, ' ');
    out += check_id;
    out.resize(13 + 22, ' ');
    std::string p;
    for (auto it = params.begin(); it != params.end(); ++it) {
      if (!p.empty()) p += ' ';
      p += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
    }
    p.resize(std::max<size_t>(p.size(), 24), ' ');
    out += p + "  observed=" + observed.dump() + " expected=" + expected.dump() + "  (" +
           std::to_string(runtime_ms) + " ms)";
    return out;
  }
};

/// Exact integer ledger behind the orbit-stabilizer lower bound.
struct BoundLedger {
  int n = 0;
  long long m_lower = 0;
  std::uint64_t orbit_lower = 0;       // 2 C(n,3)
  std::uint64_t stabilizer_lower = 0;  // m (n-3)!/2
  std::uint64_t product = 0;           // n! m / 6

  nlohmann::json to_json() const {
    return {{"n", n},
            {"m_lower", m_lower},
            {"orbit_lower", orbit_lower},
            {"stabilizer_lower", stabilizer_lower},
            {"product", product}};
  }
};

/// product = orbit_lower * stabilizer_lower, cross-checked against n!m/6,
/// with product >= n!/2 and equality exactly at m = 3. All arithmetic is
/// overflow-checked and throws rather than wrapping.
inline BoundLedger orbit_stabilizer_bound(int n, long long m) {
  if (n < 8) throw std::invalid_argument("orbit_stabilizer_bound needs n >= 8");
  if (m < 3) throw std::invalid_argument("orbit_stabilizer_bound needs m >= 3");
  BoundLedger l;
  l.n = n;
  l.m_lower = m;
  l.orbit_lower = three_cycle_class_size(n);
  l.stabilizer_lower = detail::checked_mul_u64(static_cast<std::uint64_t>(m), factorial(n - 3)) / 2;
  l.product = detail::checked_mul_u64(l.orbit_lower, l.stabilizer_lower);

  std::uint64_t by_factorial = detail::checked_mul_u64(factorial(n) / 6, static_cast<std::uint64_t>(m));
  std::uint64_t half_factorial = factorial(n) / 2;
  if (l.product != by_factorial) throw std::logic_error("bound ledger routes disagree");
  if (l.product < half_factorial || (l.product == half_factorial) != (m == 3))
    throw std::logic_error("bound ledger lost the orbit-stabilizer inequality");
  return l;
}

/// Default enumeration budget; BQL_MAX_COSETS overrides both knobs.
inline Budget budget_from_env() {
  Budget b;
  if (const char* env = std::getenv("BQL_MAX_COSETS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
      throw std::invalid_argument("BQL_MAX_COSETS must be a positive integer");
    b.max_live_cosets = b.max_definitions = v;
  }
  return b;
}

namespace checks {

inline nlohmann::json enum_stats(const EnumerationResult& r) {
  return {{"definitions", r.stats.definitions}, {"coincidences", r.stats.coincidences}};
}

/// Shared body of the two normal-generation checks.
inline CheckReport normal_generation_check(std::string check_id, int n, const Word& relator,
                                           Budget budget) {
  CheckReport rep;
  rep.check_id = std::move(check_id);
  rep.params = {{"n", n}, {"relator", relator.str()}};
  rep.expected = 1;

  BraidWord r(n, relator);
  bool has_half_twist = false;
  for (int m = 1; m <= n - 1 && !has_half_twist; ++m)
    if (commutes(r, artin(m, n))) has_half_twist = true;
  if (exponent_sum(relator) != 0 || !has_half_twist)
    throw std::invalid_argument("relator fails the normal-generation preconditions");

  EnumerationResult res = enumerate(add_relators(artin_presentation(n), {relator}), {Word({1})}, budget);
  rep.stats = enum_stats(res);
  if (!res.completed()) {
    rep.status = CheckReport::Status::inconclusive;
    rep.observed = "budget_exceeded";
  } else {
    rep.observed = res.index;
    rep.status = res.index == 1 ? CheckReport::Status::pass : CheckReport::Status::fail;
  }
  return rep;
}

inline CheckReport lemma_A(const nlohmann::json& params, Budget budget) {
  int n = params.at("n");
  Word relator = Word::parse(params.value("relator", "2 -1"));
  return normal_generation_check("lemma_A", n, relator, budget);
}

inline CheckReport lemma_2(const nlohmann::json& params, Budget budget) {
  int n = params.at("n");
  CheckReport rep = normal_generation_check("lemma_2", n, power(Word({2, -1}), 2), budget);
  rep.check_id = "lemma_2";
  return rep;
}

inline CheckReport lemma_B_identities(const nlohmann::json& params, Budget) {
  int n = params.at("n");
  if (n < 5) throw std::invalid_argument("identities need n >= 5");
  CheckReport rep;
  rep.check_id = "lemma_B_identities";
  rep.params = {{"n", n}};

  int identities = 0, total = 0;
  std::set<Permutation> images;
  bool all_three_cycles = true;
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      for (int k = j + 1; k <= n; ++k) {
        BraidWord lhs = band_generator(j, k, n) * inverse(band_generator(i, j, n)) *
                        inverse(band_generator(j, k, n));
        ++total;
        if (words_equal(lhs, inverse(band_generator(i, k, n)))) ++identities;
        for (NamedElement e : {NamedElement::alpha, NamedElement::beta}) {
          Permutation p = permutation_image(named_element(e, n, Triple{i, j, k}));
          all_three_cycles = all_three_cycles && is_three_cycle(p);
          images.insert(p);
        }
      }
  ++total;
  if (words_equal(BraidWord(n, Word({3, 2, -3})), band_generator(2, 4, n))) ++identities;

  rep.observed = {{"identities", identities},
                  {"distinct_images", images.size()},
                  {"all_three_cycles", all_three_cycles}};
  rep.expected = {{"identities", total},
                  {"distinct_images", three_cycle_class_size(n)},
                  {"all_three_cycles", true}};
  rep.status = rep.observed == rep.expected ? CheckReport::Status::pass : CheckReport::Status::fail;
  return rep;
}

inline CheckReport lemma_C_identities(const nlohmann::json& params, Budget) {
  int n = params.at("n");
  if (n < 5) throw std::invalid_argument("identities need n >= 5");
  CheckReport rep;
  rep.check_id = "lemma_C_identities";
  rep.params = {{"n", n}};

  int passed = 0, total = 0;

  // sigma_3 sigma_2^-1 . sigma_2 sigma_1^-1 freely reduces to sigma_3 sigma_1^-1
  ++total;
  if (multiply(Word({3, -2}), Word({2, -1})) == Word({3, -1})) ++passed;

  // sigma_3 sigma_1^-1 = sigma_1^-1 sigma_3 in the braid group
  ++total;
  if (words_equal(BraidWord(n, Word({3, -1})), BraidWord(n, Word({-1, 3})))) ++passed;

  // sigma_2 sigma_1^-1 commutes with every distant generator
  BraidWord u = named_element(NamedElement::u, n);
  for (int m = 4; m <= n - 1; ++m) {
    ++total;
    if (commutes(u, artin(m, n))) ++passed;
  }

  for (NamedElement e : {NamedElement::u, NamedElement::v, NamedElement::w, NamedElement::c1, NamedElement::f}) {
    ++total;
    if (exponent_sum(named_element(e, n).word) == 0) ++passed;
  }

  rep.observed = {{"passed", passed}};
  rep.expected = {{"passed", total}};
  rep.status = passed == total ? CheckReport::Status::pass : CheckReport::Status::fail;
  return rep;
}

inline CheckReport carmichael_collapse(const nlohmann::json& params, Budget budget) {
  int n = params.at("n");
  if (n < 4) throw std::invalid_argument("carmichael collapse needs n >= 4");
  CheckReport rep;
  rep.check_id = "carmichael_collapse";
  rep.params = {{"n", n}};
  rep.expected = factorial(n) / 2;

  Presentation p = add_relators(artin_presentation(n),
                                {power(Word({2, -1}), 3), power(Word({3, -1}), 2)});
  EnumerationResult res = enumerate(p, {Word({1})}, budget);
  rep.stats = enum_stats(res);
  if (!res.completed()) {
    rep.status = CheckReport::Status::inconclusive;
    rep.observed = "budget_exceeded";
  } else {
    rep.observed = res.index;
    rep.status = rep.observed == rep.expected ? CheckReport::Status::pass : CheckReport::Status::fail;
  }
  return rep;
}

/// Brute-force 3-cycle count by scanning the whole symmetric group.
inline std::uint64_t three_cycles_by_scan(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::uint64_t count = 0;
  do {
    if (is_three_cycle(Permutation::from_one_line(img))) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

inline CheckReport counts(const nlohmann::json& params, Budget) {
  int n = params.at("n");
  if (n < 5) throw std::invalid_argument("counting suite needs n >= 5");
  CheckReport rep;
  rep.check_id = "counts";
  rep.params = {{"n", n}};

  std::uint64_t class_size = n <= 9 ? three_cycles_by_scan(n) : three_cycle_class_size(n);
  std::uint64_t centralizer = centralizer_order_in_An(Permutation::parse("(1 2 3)", n), n);

  rep.observed = {{"class_size", class_size},
                  {"centralizer", centralizer},
                  {"product", detail::checked_mul_u64(class_size, centralizer)}};
  rep.expected = {{"class_size", three_cycle_class_size(n)},
                  {"centralizer", detail::checked_mul_u64(3, factorial(n - 3)) / 2},
                  {"product", factorial(n) / 2}};
  rep.status = rep.observed == rep.expected ? CheckReport::Status::pass : CheckReport::Status::fail;
  return rep;
}

inline CheckReport orbit_bound(const nlohmann::json& params, Budget) {
  int n = params.at("n");
  long long m = params.value("m", 3);
  CheckReport rep;
  rep.check_id = "orbit_bound";
  rep.params = {{"n", n}, {"m", m}};
  BoundLedger ledger = orbit_stabilizer_bound(n, m);
  rep.observed = ledger.to_json();
  rep.expected = {{"n", n},
                  {"m_lower", m},
                  {"orbit_lower", three_cycle_class_size(n)},
                  {"stabilizer_lower", detail::checked_mul_u64(static_cast<std::uint64_t>(m), factorial(n - 3)) / 2},
                  {"product", detail::checked_mul_u64(factorial(n) / 6, static_cast<std::uint64_t>(m))}};
  rep.status = rep.observed == rep.expected ? CheckReport::Status::pass : CheckReport::Status::fail;
  return rep;
}

inline CheckReport aut_footnote(const nlohmann::json& params, Budget budget) {
  int n = params.at("n");
  CheckReport rep;
  rep.check_id = "aut_footnote";
  rep.params = {{"n", n}};
  if (n == 5) {
    Presentation triangle(2, {Word({1, 1}), Word({2, 2, 2}), power(Word({1, 2}), 5)});
    std::vector<Permutation> images{Permutation::parse("(1 2)(3 4)", 5),
                                    Permutation::parse("(1 3 5)", 5)};
    rep.observed = automorphism_count(alternating_group(5), triangle, images, budget);
    rep.expected = 120;
  } else if (n == 6) {
    std::vector<Permutation> images;
    for (int i = 1; i <= 4; ++i)
      images.push_back(Permutation::parse("(1 2 " + std::to_string(i + 2) + ")", 6));
    rep.observed = automorphism_count(alternating_group(6), carmichael_presentation(6), images, budget);
    rep.expected = 1440;
  } else {
    throw std::invalid_argument("automorphism counting is wired for n = 5 and 6 only");
  }
  rep.status = rep.observed == rep.expected ? CheckReport::Status::pass : CheckReport::Status::fail;
  return rep;
}

inline CheckReport conjugators(const nlohmann::json& params, Budget) {
  int n = params.at("n");
  if (n < 5) throw std::invalid_argument("conjugator suite needs n >= 5");
  CheckReport rep;
  rep.check_id = "conjugators";
  rep.params = {{"n", n}};

  std::uint64_t verified = 0;
  BraidWord base = named_element(NamedElement::alpha, n, Triple{1, 2, 3});
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (NamedElement target : {NamedElement::alpha, NamedElement::beta}) {
          BraidWord g = change_of_coordinates_conjugator(Triple{i, j, k}, n, target);
          if (exponent_sum(g.word) == 0 &&
              words_equal(g * base * inverse(g), named_element(target, n, Triple{i, j, k})))
            ++verified;
        }
  rep.observed = {{"verified", verified}};
  rep.expected = {{"verified", three_cycle_class_size(n)}};
  rep.status = rep.observed == rep.expected ? CheckReport::Status::pass : CheckReport::Status::fail;
  return rep;
}

}  // namespace checks

struct CheckEntry {
  std::string description;
  std::function<CheckReport(const nlohmann::json&, Budget)> fn;
};

/// Catalog: every check id, with the fact it certifies.
inline const std::map<std::string, CheckEntry>& check_registry() {
  static const std::map<std::string, CheckEntry> registry{
      {"lemma_A",
       {"coset enumeration certifies that the given exponent-sum-0 relator normally generates the "
        "commutator subgroup of the n-strand braid group (index of <sigma_1> is 1)",
        checks::lemma_A}},
      {"lemma_2",
       {"the square of sigma_2 sigma_1^-1 normally generates the commutator subgroup",
        checks::lemma_2}},
      {"lemma_B_identities",
       {"band conjugation identities and distinctness of the 2C(n,3) projected 3-cycles",
        checks::lemma_B_identities}},
      {"lemma_C_identities",
       {"two-generator product identity, far commutation, and exponent sums of the named elements",
        checks::lemma_C_identities}},
      {"carmichael_collapse",
       {"adding order relators (sigma_2 sigma_1^-1)^3, (sigma_3 sigma_1^-1)^2 collapses the braid "
        "group so that <sigma_1> has index n!/2",
        checks::carmichael_collapse}},
      {"counts",
       {"3-cycle class size, centralizer order in the alternating group, and their orbit-stabilizer "
        "product, each against brute force",
        checks::counts}},
      {"orbit_bound",
       {"exact integer ledger for the orbit-stabilizer lower bound n!m/6", checks::orbit_bound}},
      {"aut_footnote",
       {"brute-force automorphism count of the alternating group (120 at n=5, 1440 at n=6)",
        checks::aut_footnote}},
      {"conjugators",
       {"explicit exponent-sum-0 conjugators carrying the base element to every alpha/beta",
        checks::conjugators}},
  };
  return registry;
}

inline CheckReport run_check(const std::string& check_id, const nlohmann::json& params, Budget budget) {
  auto it = check_registry().find(check_id);
  if (it == check_registry().end()) throw std::invalid_argument("unknown check id: " + check_id);
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep = it->second.fn(params, budget);
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

/// The full suite: for each n, both normal-generation relators, the square,
/// both identity suites, the collapse, the counting suite, and from n = 8 on
/// the bound ledger.
inline std::vector<CheckReport> pipeline(int n_max, int n_min = 5, Budget budget = Budget{}) {
  if (n_min < 5 || n_max < n_min) throw std::invalid_argument("pipeline needs 5 <= n_min <= n_max");
  std::vector<CheckReport> out;
  for (int n = n_min; n <= n_max; ++n) {
    out.push_back(run_check("lemma_A", {{"n", n}, {"relator", "2 -1"}}, budget));
    out.push_back(run_check("lemma_A", {{"n", n}, {"relator", "3 -1"}}, budget));
    out.push_back(run_check("lemma_2", {{"n", n}}, budget));
    out.push_back(run_check("lemma_B_identities", {{"n", n}}, budget));
    out.push_back(run_check("lemma_C_identities", {{"n", n}}, budget));
    out.push_back(run_check("carmichael_collapse", {{"n", n}}, budget));
    out.push_back(run_check("counts", {{"n", n}}, budget));
    if (n >= 8) out.push_back(run_check("orbit_bound", {{"n", n}, {"m", 3}}, budget));
  }
  return out;
}

}  // namespace bql
