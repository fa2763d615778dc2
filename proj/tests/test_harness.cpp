#include "bql/harness.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <filesystem>

using namespace bql;

TEST_CASE("bound ledger values", "[harness]") {
  BoundLedger l8 = orbit_stabilizer_bound(8, 3);
  CHECK(l8.orbit_lower == 112);
  CHECK(l8.stabilizer_lower == 180);
  CHECK(l8.product == 20160);
  CHECK(l8.product == factorial(8) / 2);

  CHECK(orbit_stabilizer_bound(8, 4).product == 26880);
  CHECK(orbit_stabilizer_bound(9, 3).product == 181440);
  for (int n = 8; n <= 12; ++n) CHECK(orbit_stabilizer_bound(n, 3).product == factorial(n) / 2);
  for (int n = 8; n <= 12; ++n) CHECK(orbit_stabilizer_bound(n, 5).product > factorial(n) / 2);
}

TEST_CASE("bound ledger rejects bad input and overflow", "[harness]") {
  CHECK_THROWS_AS(orbit_stabilizer_bound(7, 3), std::invalid_argument);
  CHECK_THROWS_AS(orbit_stabilizer_bound(8, 2), std::invalid_argument);
  CHECK_THROWS_AS(orbit_stabilizer_bound(25, 3), std::overflow_error);
  CHECK_NOTHROW(orbit_stabilizer_bound(20, 3));
}

TEST_CASE("check registry", "[harness]") {
  CHECK_THROWS_AS(run_check("nonsense", {}, Budget{}), std::invalid_argument);
  for (const auto& [id, entry] : check_registry()) {
    CHECK_FALSE(entry.description.empty());
    CHECK(entry.fn != nullptr);
  }
  CHECK(check_registry().size() == 9);
}

TEST_CASE("run_check produces spec-shaped reports", "[harness]") {
  CheckReport rep = run_check("carmichael_collapse", {{"n", 5}}, Budget{});
  CHECK(rep.status == CheckReport::Status::pass);
  CHECK(rep.observed == nlohmann::json(60));
  CHECK(rep.expected == nlohmann::json(60));
  nlohmann::json j = rep.to_json();
  for (const char* key : {"check_id", "params", "status", "observed", "expected", "runtime_ms"})
    CHECK(j.contains(key));
  CHECK(j["stats"].contains("definitions"));
}

TEST_CASE("individual checks", "[harness]") {
  CHECK(run_check("lemma_A", {{"n", 5}, {"relator", "3 -1"}}, Budget{}).status ==
        CheckReport::Status::pass);
  CHECK(run_check("lemma_2", {{"n", 5}}, Budget{}).status == CheckReport::Status::pass);
  CHECK(run_check("counts", {{"n", 6}}, Budget{}).status == CheckReport::Status::pass);
  CHECK(run_check("conjugators", {{"n", 5}}, Budget{}).status == CheckReport::Status::pass);
  CHECK(run_check("orbit_bound", {{"n", 9}, {"m", 3}}, Budget{}).status == CheckReport::Status::pass);

  CheckReport aut5 = run_check("aut_footnote", {{"n", 5}}, Budget{});
  CHECK(aut5.observed == nlohmann::json(120));
  CHECK(aut5.status == CheckReport::Status::pass);

  CHECK_THROWS_AS(run_check("aut_footnote", {{"n", 7}}, Budget{}), std::invalid_argument);
  CHECK_THROWS_AS(run_check("lemma_A", {{"n", 5}, {"relator", "1"}}, Budget{}), std::invalid_argument);
}

TEST_CASE("budget exhaustion surfaces as inconclusive, never as failure", "[harness]") {
  CheckReport rep = run_check("lemma_A", {{"n", 4}, {"relator", "3 -1"}}, Budget{20'000, 20'000});
  CHECK(rep.status == CheckReport::Status::inconclusive);
  CHECK(rep.observed == nlohmann::json("budget_exceeded"));

  CheckReport squeezed = run_check("carmichael_collapse", {{"n", 8}}, Budget{50, 50});
  CHECK(squeezed.status == CheckReport::Status::inconclusive);
}

TEST_CASE("pipeline runs the advertised sequence and is deterministic", "[harness]") {
  std::vector<CheckReport> reports = pipeline(5, 5, Budget{});
  std::vector<std::string> ids;
  for (const auto& r : reports) {
    ids.push_back(r.check_id);
    CHECK(r.status == CheckReport::Status::pass);
  }
  CHECK(ids == std::vector<std::string>{"lemma_A", "lemma_A", "lemma_2", "lemma_B_identities",
                                        "lemma_C_identities", "carmichael_collapse", "counts"});

  // n = 8 adds the bound ledger
  std::vector<CheckReport> at8 = pipeline(8, 8, Budget{});
  CHECK(at8.back().check_id == "orbit_bound");

  // byte-stable modulo runtime_ms
  auto strip = [](std::vector<CheckReport> rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& r : rs) {
      nlohmann::json j = r.to_json();
      j.erase("runtime_ms");
      arr.push_back(j);
    }
    return arr.dump();
  };
  CHECK(strip(pipeline(6, 5, Budget{})) == strip(pipeline(6, 5, Budget{})));

  CHECK_THROWS_AS(pipeline(4, 4, Budget{}), std::invalid_argument);
}

TEST_CASE("budget comes from the environment", "[harness]") {
  setenv("BQL_MAX_COSETS", "1234", 1);
  Budget b = budget_from_env();
  CHECK(b.max_live_cosets == 1234);
  CHECK(b.max_definitions == 1234);

  setenv("BQL_MAX_COSETS", "zero", 1);
  CHECK_THROWS_AS(budget_from_env(), std::invalid_argument);
  setenv("BQL_MAX_COSETS", "-5", 1);
  CHECK_THROWS_AS(budget_from_env(), std::invalid_argument);

  unsetenv("BQL_MAX_COSETS");
  CHECK(budget_from_env().max_definitions == 2'000'000);
}

TEST_CASE("golden presentation files match the programmatic constructions", "[harness]") {
  namespace fs = std::filesystem;
  const fs::path dir = BQL_DATA_DIR;

  for (int n = 5; n <= 7; ++n) {
    PresentationFile u = read_presentation(dir / ("lemma_a_n" + std::to_string(n) + "_u.pres"));
    CHECK(u.presentation == add_relators(artin_presentation(n), {Word({2, -1})}));
    CHECK(u.subgroup == std::vector<Word>{Word({1})});

    PresentationFile c1 = read_presentation(dir / ("lemma_a_n" + std::to_string(n) + "_c1.pres"));
    CHECK(c1.presentation == add_relators(artin_presentation(n), {Word({3, -1})}));

    PresentationFile l2 = read_presentation(dir / ("lemma_2_n" + std::to_string(n) + ".pres"));
    CHECK(l2.presentation == add_relators(artin_presentation(n), {power(Word({2, -1}), 2)}));
  }
  for (int n = 5; n <= 8; ++n) {
    PresentationFile cc =
        read_presentation(dir / ("carmichael_collapse_n" + std::to_string(n) + ".pres"));
    CHECK(cc.presentation == add_relators(artin_presentation(n),
                                          {power(Word({2, -1}), 3), power(Word({3, -1}), 2)}));
    CHECK(cc.subgroup == std::vector<Word>{Word({1})});
  }

  PresentationFile neg = read_presentation(dir / "negative_control_n4.pres");
  CHECK(neg.presentation == add_relators(artin_presentation(4), {Word({3, -1})}));

  PresentationFile carm = read_presentation(dir / "carmichael_a5.pres");
  CHECK(carm.presentation == carmichael_presentation(5));
  CHECK(enumerate(carm.presentation, carm.subgroup, Budget{}).index == 60);

  PresentationFile artin5 = read_presentation(dir / "artin_n5.pres");
  CHECK(artin5.presentation == artin_presentation(5));
}
