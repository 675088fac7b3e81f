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

// Saddle detection, dominance reductions and the closed-form 2x2 solution
// for fuzzy zero-sum games, plus the pipeline that chains them.
//
// Conventions: the row player maximizes, the column player minimizes.
// Dominance is judged on centers; the dominance index of every compared
// pair is kept as evidence, and a positive threshold additionally requires
// each index to reach it (threshold 1 is "total" dominance).

#ifndef FUZZYGAME_SOLVER_HPP
#define FUZZYGAME_SOLVER_HPP

#include <Eigen/Core>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzygame/errors.hpp"
#include "fuzzygame/fuzzy.hpp"
#include "fuzzygame/payoff_matrix.hpp"

namespace fuzzygame {

enum class SpreadConvention {
  // Spread of the value is the expected spread x' W y under the optimal
  // strategies.
  Expected,
  // The closed form on right endpoints b = center + spread, minus the
  // value's center, clamped at 0.
  PaperEndpoint,
};

enum class StepKind {
  RowDominance,
  ColDominance,
  ConvexRowDominance,
  ConvexColDominance,
  SubgameSelection,
  SaddleFound,
};

const char* to_string(SpreadConvention c);
const char* to_string(StepKind k);

/// The strategy (or weighted pair) that justified a step. For convex steps
/// the virtual strategy is weight*strategies[0] + (1-weight)*strategies[1].
struct Dominator {
  std::vector<StrategyIndex> strategies;
  std::optional<double> weight;
};

/// One entry of the audit trail. Indices refer to the ORIGINAL matrix.
///
/// Dominance steps: evidence holds the dominance index of each compared
/// entry pair, oriented so that a nonnegative value favors the dominator
/// (+-inf for crisp pairs). SubgameSelection: dominator holds the chosen
/// pair and evidence the value center of every candidate sub-game in
/// enumeration order. SaddleFound: dominator is {row, col}.
struct ReductionStep {
  StepKind kind{StepKind::RowDominance};
  std::optional<StrategyIndex> deleted;
  Dominator dominator;
  std::vector<double> evidence;
};

enum class SolutionKind { PureSaddle, Mixed2x2 };

const char* to_string(SolutionKind k);

struct Solution {
  Eigen::VectorXd x;  // over original rows
  Eigen::VectorXd y;  // over original columns
  Fuzzy value;
  SolutionKind kind{SolutionKind::PureSaddle};
  std::vector<ReductionStep> trace;
};

struct Saddle {
  Index row{0};
  Index col{0};
  Fuzzy value;
};

/// A cell whose center is both its row's minimum and its column's maximum.
/// When several exist (all share one center), the attitude picks among their
/// spreads; exact ties go to the first in row-major order.
std::optional<Saddle> find_saddle(const PayoffMatrix& pm,
                                  Attitude attitude = Attitude::Pessimistic);

/// Per-column evidence when row i dominates row r for the maximizer:
/// centers of i are >= those of r everywhere, strictly somewhere (or the rows
/// are equal and i < r).
std::optional<std::vector<double>> row_dominates(const PayoffMatrix& pm, Index i, Index r,
                                                 double threshold = 0.0);

/// Mirror of row_dominates for the minimizing column player.
std::optional<std::vector<double>> col_dominates(const PayoffMatrix& pm, Index j, Index s,
                                                 double threshold = 0.0);

std::vector<Fuzzy> convex_row(const PayoffMatrix& pm, Index p, Index q, double beta);
std::vector<Fuzzy> convex_col(const PayoffMatrix& pm, Index p, Index q, double alpha);

struct ConvexHit {
  double weight{0};
  std::vector<double> evidence;
};

/// First weight (in the order given) whose blend of rows p and q dominates
/// row s for the maximizer.
std::optional<ConvexHit> convex_row_dominates(const PayoffMatrix& pm, Index p, Index q, Index s,
                                              std::span<const double> betas,
                                              double threshold = 0.0);

std::optional<ConvexHit> convex_col_dominates(const PayoffMatrix& pm, Index p, Index q, Index s,
                                              std::span<const double> alphas,
                                              double threshold = 0.0);

/// Closed-form solution of a 2x2 game, or its saddle when it has one.
Solution solve_2x2(const PayoffMatrix& pm, SpreadConvention conv = SpreadConvention::Expected,
                   Attitude attitude = Attitude::Pessimistic);

struct SubgameCandidate {
  std::array<Index, 2> pair{};  // columns for 2 x n, rows for m x 2
  Solution solution;            // over the 2x2 sub-game's own indices
  // The enumerating player's strategy secures the candidate's value
  // against every opposing strategy of the whole 2 x n (m x 2) game. The
  // chosen candidate's strategy is repaired in place when this is false.
  bool secure{false};
};

struct SubgameEnumeration {
  Axis axis{Axis::Col};  // which axis the pairs range over
  std::vector<SubgameCandidate> candidates;
  std::size_t chosen{0};
};

/// Solves every 2x2 sub-game of a 2 x n (n >= 3) or m x 2 (m >= 3) game.
/// The minimizer picks the least value for 2 x n, the maximizer the greatest
/// for m x 2; equal centers fall back to the attitude, then pair order.
SubgameEnumeration enumerate_subgames(const PayoffMatrix& pm,
                                      SpreadConvention conv = SpreadConvention::Expected,
                                      Attitude attitude = Attitude::Pessimistic);

/// {0.5, 0, 1/(steps-1), ..., 1}: the midpoint first, then the uniform grid.
std::vector<double> default_betas(int steps = 21);

struct SolverConfig {
  double threshold{0.0};
  std::vector<double> betas{default_betas()};
  Attitude attitude{Attitude::Pessimistic};
  SpreadConvention conv{SpreadConvention::Expected};
};

struct Reduction {
  PayoffMatrix residual;
  std::vector<Index> kept_rows;  // original index of each residual row
  std::vector<Index> kept_cols;
  std::vector<ReductionStep> trace;
};

/// Deletes dominated strategies until none is left: plain rows, plain
/// columns, convex rows, convex columns, one deletion per pass, lower indices
/// first.
Reduction reduce(const PayoffMatrix& pm, const SolverConfig& config = {});

/// Raised when dominance leaves a game larger than 2 x n and m x 2.
class NotReducible : public Error {
 public:
  NotReducible(Reduction reduction)
      : Error("game cannot be reduced to 2 x n or m x 2 by dominance; residual is " +
              std::to_string(reduction.residual.rows()) + "x" +
              std::to_string(reduction.residual.cols())),
        reduction_(std::move(reduction)) {}

  const Reduction& reduction() const { return reduction_; }

 private:
  Reduction reduction_;
};

/// Saddle check, dominance fixpoint, then 2x2 closed form or sub-game
/// selection; probabilities are mapped back to the original strategies.
Solution solve_pipeline(const PayoffMatrix& pm, const SolverConfig& config = {});

/// x' C y on centers.
double expected_center(const PayoffMatrix& pm, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& y);

}  // namespace fuzzygame

#endif  // FUZZYGAME_SOLVER_HPP
