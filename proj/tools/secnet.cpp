// Copyright 2026 The secnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "secnet.hpp"

namespace {

secnet::Scenario scenario_with_cap(const std::string& path, std::uint64_t cap) {
  secnet::Scenario s = secnet::load_scenario(path);
  if (cap > 0) s.search.cap = cap;
  return s;
}

std::optional<std::string> nonempty(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure two-layer network formation: equilibria, constructions and metrics"};
  app.require_subcommand(1);

  std::string scenario, graph, out, dot, ca, case_name;
  int k = -1;
  std::uint64_t cap = 0;

  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("--scenario", scenario, "scenario JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--cap", cap, "search cap (evaluated subsets)");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve the game and print the equilibrium as JSON");
  add_scenario(solve);

  CLI::App* construct = app.add_subcommand("construct", "build the equilibrium network and write it out");
  add_scenario(construct);
  construct->add_option("--out", out, "graph JSON output file");
  construct->add_option("--dot", dot, "DOT output file");

  CLI::App* attack = app.add_subcommand("attack", "adversary best response on a graph");
  attack->add_option("graph", graph, "graph JSON file")->required()->check(CLI::ExistingFile);
  attack->add_option("--ca", ca, "attack cost per link, e.g. 1/3")->required();
  attack->add_option("--dot", dot, "DOT output with attacked links dashed");

  CLI::App* verify = app.add_subcommand("verify", "check k-resistance of a graph");
  verify->add_option("graph", graph, "graph JSON file")->required()->check(CLI::ExistingFile);
  verify->add_option("--k", k, "resistance level")->required();

  CLI::App* reproduce = app.add_subcommand("reproduce", "rerun a named reference case");
  reproduce->add_option("case", case_name, "case name, or all")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "cross-check exact search against brute force");
  add_scenario(oracle);

  CLI::App* metrics = app.add_subcommand("metrics", "price of anarchy, cost bounds and price of seniority");
  add_scenario(metrics);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : secnet::cli::kError;
  }

  try {
    using namespace secnet::cli;
    if (*solve) return cmd_solve(scenario_with_cap(scenario, cap), std::cout);
    if (*construct) return cmd_construct(scenario_with_cap(scenario, cap), nonempty(out), nonempty(dot), std::cout);
    if (*attack) return cmd_attack(secnet::load_graph(graph), secnet::parse_rational(ca), nonempty(dot), std::cout);
    if (*verify) return cmd_verify(secnet::load_graph(graph), k, std::cout);
    if (*reproduce) return cmd_reproduce(case_name, std::cout);
    if (*oracle) return cmd_oracle(scenario_with_cap(scenario, cap), std::cout);
    if (*metrics) return cmd_metrics(scenario_with_cap(scenario, cap), std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return secnet::cli::kError;
  }
  return secnet::cli::kError;
}
