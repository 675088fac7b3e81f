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

#ifndef FUZZYGAME_CLI_HPP
#define FUZZYGAME_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "fuzzygame/fuzzy.hpp"
#include "fuzzygame/payoff_matrix.hpp"
#include "fuzzygame/solver.hpp"
#include "json.hpp"

namespace fuzzygame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotReducible = 2;

enum class Command { Solve, Reduce, Rank, Validate, Check };
enum class OutputFormat { Table, Machine };

struct CliConfig {
  Command command{Command::Solve};
  std::string input;
  double threshold{0.0};
  int beta_steps{21};
  Attitude attitude{Attitude::Pessimistic};
  SpreadConvention spread_convention{SpreadConvention::Expected};
  OutputFormat format{OutputFormat::Table};
  bool trace{false};
  // reduce: also write the residual document here.
  std::string output;
  // rank: the two numbers, as "center,spread".
  std::string rank_a;
  std::string rank_b;

  /// Throws ValidationError when threshold < 0 or beta_steps < 2.
  void validate() const;
  SolverConfig solver_config() const;
};

struct Fraction {
  long long numerator{0};
  long long denominator{1};
};

/// Best rational with denominator <= max_denominator, if one reproduces v to
/// within a few ulps.
std::optional<Fraction> to_fraction(double v, long long max_denominator = 1000000);

/// "15/16" when a small fraction exists, otherwise the shortest decimal.
std::string format_number(double v);

/// Accepts "m,w", "<m,w>" or "m:w".
Fuzzy parse_fuzzy_literal(std::string_view text);

nlohmann::json trace_to_json(const std::vector<ReductionStep>& trace, const PayoffMatrix& pm);
std::vector<ReductionStep> trace_from_json(const nlohmann::json& doc);

/// Machine-format document for a solved game.
nlohmann::json solution_to_json(const PayoffMatrix& pm, const Solution& s, const CliConfig& cfg);
/// Inverse of solution_to_json for the Solution fields.
Solution solution_from_json(const nlohmann::json& doc);

int cmd_solve(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_reduce(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_rank(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_validate(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err);

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace fuzzygame::cli

#endif  // FUZZYGAME_CLI_HPP
