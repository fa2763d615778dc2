// Command-line front end for the verification suite.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bql/harness.hpp"

namespace {

void print_reports(const std::vector<bql::CheckReport>& reports, bool as_json) {
  if (as_json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    std::cout << arr.dump(2) << "\n";
    return;
  }
  int pass = 0, fail = 0, inconclusive = 0;
  for (const auto& r : reports) {
    std::cout << r.line() << "\n";
    switch (r.status) {
      case bql::CheckReport::Status::pass: ++pass; break;
      case bql::CheckReport::Status::fail: ++fail; break;
      case bql::CheckReport::Status::inconclusive: ++inconclusive; break;
    }
  }
  std::cout << "summary: " << pass << " passed, " << fail << " failed, " << inconclusive
            << " inconclusive\n";
}

int exit_code(const std::vector<bql::CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == bql::CheckReport::Status::fail) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bql: computational certification suite for braid group quotient facts"};
  app.require_subcommand(1);
  app.fallthrough();

  long long max_cosets = 0;
  bool as_json = false;
  bool seedless = false;
  app.add_option("--max-cosets", max_cosets, "cap on live cosets and total definitions");
  app.add_flag("--json", as_json, "emit reports as a JSON array");
  app.add_flag("--seedless", seedless, "reserved; all algorithms are deterministic");

  int n = 5;
  long long m = 3;
  int n_min = 5, n_max = 8;
  std::string relator = "2 -1";
  std::string file;

  CLI::App* lemma_a = app.add_subcommand("lemma-a", "normal generation of the commutator subgroup by one relator");
  lemma_a->add_option("--n", n, "strand count")->required();
  lemma_a->add_option("--relator", relator, "relator word, e.g. \"2 -1\"");

  CLI::App* lemma_2 = app.add_subcommand("lemma-2", "normal generation by (sigma_2 sigma_1^-1)^2");
  lemma_2->add_option("--n", n, "strand count")->required();

  CLI::App* identities = app.add_subcommand("identities", "band and far-commutation identity suites");
  identities->add_option("--n", n, "strand count")->required();

  CLI::App* carmichael = app.add_subcommand("carmichael", "order-relator collapse to index n!/2");
  carmichael->add_option("--n", n, "strand count")->required();

  CLI::App* counts = app.add_subcommand("counts", "3-cycle class size and centralizer counting suite");
  counts->add_option("--n", n, "number of letters")->required();

  CLI::App* bound = app.add_subcommand("bound", "orbit-stabilizer bound ledger");
  bound->add_option("--n", n, "number of letters")->required();
  bound->add_option("--m", m, "cyclic order lower bound (>= 3)");

  CLI::App* aut = app.add_subcommand("aut", "brute-force automorphism count of the alternating group");
  aut->add_option("--n", n, "5 or 6");

  CLI::App* conjugators = app.add_subcommand("conjugators", "verified change-of-coordinates conjugators");
  conjugators->add_option("--n", n, "strand count")->required();

  CLI::App* pipeline = app.add_subcommand("pipeline", "full suite over a range of n");
  pipeline->add_option("--n-max", n_max, "largest n")->required();
  pipeline->add_option("--n-min", n_min, "smallest n (default 5)");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "run the coset enumerator on a presentation file");
  enum_cmd->add_option("--file", file, "presentation file with optional sub section")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    bql::Budget budget = bql::budget_from_env();
    if (max_cosets > 0) budget.max_live_cosets = budget.max_definitions = max_cosets;

    if (enum_cmd->parsed()) {
      bql::PresentationFile pf = bql::read_presentation(std::filesystem::path(file));
      bql::EnumerationResult res = bql::enumerate(pf.presentation, pf.subgroup, budget);
      nlohmann::json j{{"file", file},
                       {"outcome", res.completed() ? "completed" : "budget_exceeded"},
                       {"definitions", res.stats.definitions},
                       {"coincidences", res.stats.coincidences},
                       {"elapsed_ms", res.stats.elapsed_ms}};
      if (res.completed()) j["index"] = res.index;
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else if (res.completed()) {
        std::cout << "completed: index " << res.index << " (" << res.stats.definitions
                  << " definitions, " << res.stats.coincidences << " coincidences)\n";
      } else {
        std::cout << "budget exceeded after " << res.stats.definitions << " definitions\n";
      }
      return 0;
    }

    std::vector<bql::CheckReport> reports;
    if (lemma_a->parsed()) {
      reports.push_back(bql::run_check("lemma_A", {{"n", n}, {"relator", relator}}, budget));
    } else if (lemma_2->parsed()) {
      reports.push_back(bql::run_check("lemma_2", {{"n", n}}, budget));
    } else if (identities->parsed()) {
      reports.push_back(bql::run_check("lemma_B_identities", {{"n", n}}, budget));
      reports.push_back(bql::run_check("lemma_C_identities", {{"n", n}}, budget));
    } else if (carmichael->parsed()) {
      reports.push_back(bql::run_check("carmichael_collapse", {{"n", n}}, budget));
    } else if (counts->parsed()) {
      reports.push_back(bql::run_check("counts", {{"n", n}}, budget));
    } else if (bound->parsed()) {
      reports.push_back(bql::run_check("orbit_bound", {{"n", n}, {"m", m}}, budget));
    } else if (aut->parsed()) {
      reports.push_back(bql::run_check("aut_footnote", {{"n", n}}, budget));
    } else if (conjugators->parsed()) {
      reports.push_back(bql::run_check("conjugators", {{"n", n}}, budget));
    } else if (pipeline->parsed()) {
      reports = bql::pipeline(n_max, n_min, budget);
    }
    print_reports(reports, as_json);
    return exit_code(reports);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
