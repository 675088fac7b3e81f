// Copyright 2026 The fuzzygame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "fuzzygame/cli.hpp"

namespace cli = fuzzygame::cli;

namespace {

void add_solver_options(CLI::App* sub, cli::CliConfig& cfg) {
  static const std::map<std::string, fuzzygame::Attitude> attitudes{
      {"pessimistic", fuzzygame::Attitude::Pessimistic},
      {"optimistic", fuzzygame::Attitude::Optimistic}};
  static const std::map<std::string, fuzzygame::SpreadConvention> conventions{
      {"expected", fuzzygame::SpreadConvention::Expected},
      {"paper-endpoint", fuzzygame::SpreadConvention::PaperEndpoint}};

  sub->add_option("--threshold", cfg.threshold,
                  "minimum dominance index per compared entry (0 = weak dominance on centers)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--beta-steps", cfg.beta_steps,
                  "grid size for convex-combination weights in [0, 1]")
      ->check(CLI::Range(2, 1000000));
  sub->add_option("--attitude", cfg.attitude, "tie-break on equal centers")
      ->transform(CLI::CheckedTransformer(attitudes, CLI::ignore_case));
  sub->add_option("--spread-convention", cfg.spread_convention, "spread of the game value")
      ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case));
}

void add_format_option(CLI::App* sub, cli::CliConfig& cfg) {
  static const std::map<std::string, cli::OutputFormat> formats{
      {"table", cli::OutputFormat::Table}, {"machine", cli::OutputFormat::Machine}};
  sub->add_option("--format", cfg.format, "table or machine (JSON)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve zero-sum games with LR-type fuzzy payoffs by dominance"};
  app.require_subcommand(1);
  cli::CliConfig cfg;

  auto* solve = app.add_subcommand("solve", "solve a payoff matrix file");
  solve->add_option("file", cfg.input, "matrix document")->required();
  add_solver_options(solve, cfg);
  add_format_option(solve, cfg);
  solve->add_flag("--trace", cfg.trace, "print every reduction step");
  solve->callback([&] { cfg.command = cli::Command::Solve; });

  auto* reduce = app.add_subcommand("reduce", "delete dominated strategies only");
  reduce->add_option("file", cfg.input, "matrix document")->required();
  reduce->add_option("-o,--output", cfg.output, "also write the residual document to this file");
  add_solver_options(reduce, cfg);
  add_format_option(reduce, cfg);
  reduce->add_flag("--trace", cfg.trace, "accepted for symmetry; the trace is always printed");
  reduce->callback([&] { cfg.command = cli::Command::Reduce; });

  auto* rank = app.add_subcommand("rank", "compare two fuzzy numbers given as center,spread");
  rank->add_option("a", cfg.rank_a, "first number, e.g. 0.3,0.5")->required();
  rank->add_option("b", cfg.rank_b, "second number")->required();
  add_solver_options(rank, cfg);
  add_format_option(rank, cfg);
  rank->callback([&] { cfg.command = cli::Command::Rank; });

  auto* validate = app.add_subcommand("validate", "check a matrix document");
  validate->add_option("file", cfg.input, "matrix document")->required();
  add_format_option(validate, cfg);
  validate->callback([&] { cfg.command = cli::Command::Validate; });

  auto* check = app.add_subcommand("check", "compare the pipeline against the exact oracle");
  check->add_option("file", cfg.input, "matrix document")->required();
  add_solver_options(check, cfg);
  add_format_option(check, cfg);
  check->callback([&] { cfg.command = cli::Command::Check; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInputError;
  }
  return cli::run(cfg, std::cout, std::cerr);
}
