#include "bql/fpres.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <sstream>

using namespace bql;
using boost::multiprecision::cpp_int;

namespace {

// independent oracle: Bareiss fraction-free determinant
long long det3(const std::array<std::array<long long, 3>, 3>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

TEST_CASE("artin presentation shape", "[fpres]") {
  Presentation p2 = artin_presentation(2);
  CHECK(p2.generator_count == 1);
  CHECK(p2.relators.empty());

  Presentation p3 = artin_presentation(3);
  CHECK(p3.generator_count == 2);
  REQUIRE(p3.relators.size() == 1);

  Presentation p5 = artin_presentation(5);
  CHECK(p5.generator_count == 4);
  CHECK(p5.relators.size() == 6);  // 3 far-commutation + 3 braid

  CHECK_THROWS_AS(artin_presentation(1), std::invalid_argument);
}

TEST_CASE("add_relators appends without touching the original", "[fpres]") {
  Presentation base = artin_presentation(5);
  Presentation ext = add_relators(base, {Word({2, -1})});
  CHECK(ext.relators.size() == base.relators.size() + 1);
  CHECK(base.relators.size() == 6);
  CHECK(ext.relators.back() == Word({2, -1}));

  CHECK_THROWS_AS(add_relators(base, {Word({5})}), std::invalid_argument);
}

TEST_CASE("relators are stored cyclically reduced", "[fpres]") {
  Presentation p(2, {Word({1, 2, -1})});
  CHECK(p.relators[0] == Word({2}));
}

TEST_CASE("smith diagonal on known matrices", "[smith]") {
  std::vector<std::vector<CheckedInt>> m{{2, 4}, {6, 8}};
  auto d = smith_diagonal(std::move(m));
  REQUIRE(d.size() == 2);
  CHECK(d[0].v == 2);
  CHECK(d[1].v == 4);

  std::vector<std::vector<CheckedInt>> z{{0, 0}, {0, 0}};
  CHECK(smith_diagonal(std::move(z)).empty());
}

TEST_CASE("smith diagonal against determinant and gcd oracles", "[smith][property]") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long long> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<std::array<long long, 3>, 3> a;
    std::vector<std::vector<CheckedInt>> m(3, std::vector<CheckedInt>(3, CheckedInt(0)));
    long long g = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a[i][j] = entry(rng);
        m[i][j] = a[i][j];
        g = std::gcd(g, a[i][j]);
      }
    auto d = smith_diagonal(std::move(m));
    long long det = det3(a);
    if (det != 0) {
      REQUIRE(d.size() == 3);
      CHECK(d[0].v * d[1].v * d[2].v == std::abs(det));
    }
    if (!d.empty()) CHECK(d[0].v == g);
    for (size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1].v % d[i].v == 0);
  }
}

TEST_CASE("smith escalates on 64-bit overflow", "[smith]") {
  const long long big = 1ll << 62;
  std::vector<std::vector<CheckedInt>> m{{1, big}, {big, 1}};
  CHECK_THROWS_AS(smith_diagonal(std::move(m)), std::overflow_error);

  std::vector<std::vector<cpp_int>> wide{{1, cpp_int(big)}, {cpp_int(big), 1}};
  auto d = smith_diagonal(std::move(wide));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 1);
  CHECK(d[1] == cpp_int(big) * big - 1);
}

TEST_CASE("abelianization of braid and cyclic presentations", "[fpres]") {
  for (int n = 2; n <= 8; ++n) {
    AbelianInvariants ab = abelianization(artin_presentation(n));
    CHECK(ab.free_rank == 1);
    CHECK(ab.torsion.empty());
  }

  AbelianInvariants z5 = abelianization(Presentation(1, {Word({1, 1, 1, 1, 1})}));
  CHECK(z5.free_rank == 0);
  CHECK(z5.torsion == std::vector<long long>{5});

  // order relators of exponent sum zero do not change the abelianization
  Word u({2, -1}), c1({3, -1});
  AbelianInvariants carm = abelianization(add_relators(artin_presentation(5), {power(u, 3), power(c1, 2)}));
  CHECK(carm.free_rank == 1);
  CHECK(carm.torsion.empty());
}

TEST_CASE("abelianization invariances", "[fpres][property]") {
  Presentation p(3, {Word({1, 1, 2, -3}), Word({2, 2, 2}), Word({1, 3, 1, 3})});
  AbelianInvariants base = abelianization(p);

  CHECK(base.free_rank + static_cast<int>(base.torsion.size()) <= p.generator_count);

  // relator order
  Presentation shuffled(3, {p.relators[2], p.relators[0], p.relators[1]});
  CHECK(abelianization(shuffled) == base);

  // cyclic rotation and inversion of a relator
  std::set<Word> rots = cyclic_conjugates(p.relators[0]);
  for (const Word& r : rots) {
    CHECK(abelianization(Presentation(3, {r, p.relators[1], p.relators[2]})) == base);
    CHECK(abelianization(Presentation(3, {invert(r), p.relators[1], p.relators[2]})) == base);
  }
}

TEST_CASE("presentation file round trip", "[fpres]") {
  Presentation p = artin_presentation(4);
  std::ostringstream out;
  write_presentation(out, p, {Word({1})});

  std::istringstream in(out.str());
  PresentationFile f = read_presentation(in);
  CHECK(f.presentation == p);
  REQUIRE(f.subgroup.size() == 1);
  CHECK(f.subgroup[0] == Word({1}));
}

TEST_CASE("presentation file rejects malformed input", "[fpres]") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_presentation(in);
  };
  CHECK_THROWS_AS(parse("1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("gens -1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("gens 2\n1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("gens 2\n3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("gens 2\nsub\n3\n"), std::invalid_argument);
  CHECK(parse("gens 2 # comment\n\n1 2 # inline\n").presentation.relators.size() == 1);
}
