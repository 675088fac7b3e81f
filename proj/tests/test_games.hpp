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

// Worked-example matrices and random game generators shared by the tests.

#ifndef FUZZYGAME_TESTS_TEST_GAMES_HPP
#define FUZZYGAME_TESTS_TEST_GAMES_HPP

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <random>

#include "fuzzygame/payoff_matrix.hpp"
#include "fuzzygame/solver.hpp"

namespace fuzzygame::testing {

// GMP-backed: Boost's cpp_rational trips over Eigen expression types in
// C++20 mode.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline Rational frac(long long num, long long den) { return Rational(num) / Rational(den); }

/// Integer-valued center matrix as exact rationals.
inline RationalMatrix to_rational(const Eigen::MatrixXd& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

// 3x3 game whose third row is dominated by the second, and whose third
// column is then dominated by the first.
inline PayoffMatrix row_then_col_example() {
  return PayoffMatrix::from_entries({{{1, 0.2}, {7, 0.3}, {2, 0.1}},
                                     {{6, 0.2}, {2, 0.1}, {7, 0.3}},
                                     {{0, 0.2}, {1, 0.2}, {6, 0.2}}});
}

// 3x3 game reducible only by convex combinations.
inline PayoffMatrix convex_example() {
  return PayoffMatrix::from_entries({{{1, 0.4}, {2, 0.1}, {-1, 0.1}},
                                     {{3, 0.5}, {1, 0.3}, {2, 0.2}},
                                     {{-1, 0.2}, {3, 0.4}, {2, 0.4}}});
}

// 2x3 game without saddle or dominance; needs sub-game selection.
inline PayoffMatrix subgame_example() {
  return PayoffMatrix::from_entries({{{19, 0.2}, {15, 0.4}, {16, 0.1}},
                                     {{0, 0.2}, {20, 0.4}, {5, 0.4}}});
}

// 3x4 end-to-end game: one row deletion, one column deletion, then a 2x3
// sub-game choice.
inline PayoffMatrix simulation_example() {
  return PayoffMatrix::from_entries({{{8, 0.3}, {15, 0.4}, {-4, 0.1}, {-2, 0.4}},
                                     {{19, 0.1}, {15, 0.5}, {17, 0.4}, {16, 0.1}},
                                     {{0, 0.3}, {20, 0.2}, {15, 0.5}, {5, 0.4}}});
}

// 4x4 diagonal game diag(1, 2, 3, 4): no saddle, no plain or convex
// dominance, every strategy in the optimal support. Value 12/25.
inline PayoffMatrix irreducible_4x4() {
  Eigen::MatrixXd c = Eigen::Vector4d(1, 2, 3, 4).asDiagonal();
  return PayoffMatrix(c, Eigen::MatrixXd::Constant(4, 4, 0.1));
}

/// Random game: integer centers in [lo, hi], spreads uniform in [0, max_spread].
inline PayoffMatrix random_game(std::mt19937_64& rng, Eigen::Index m, Eigen::Index n, int lo = -20,
                                int hi = 20, double max_spread = 0.5) {
  std::uniform_int_distribution<int> center(lo, hi);
  std::uniform_real_distribution<double> spread(0.0, max_spread);
  Eigen::MatrixXd c(m, n);
  Eigen::MatrixXd w(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      c(i, j) = center(rng);
      w(i, j) = spread(rng);
    }
  }
  return PayoffMatrix(c, w);
}

/// Random shape between 2x2 and 3x4.
inline PayoffMatrix random_small_game(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rows(2, 3);
  std::uniform_int_distribution<int> cols(2, 4);
  return random_game(rng, rows(rng), cols(rng));
}

/// Matrices seen along a trace: the input, then the game after each
/// deletion step (non-deletion steps are skipped).
inline std::vector<PayoffMatrix> replay_deletions(const PayoffMatrix& pm,
                                                  const std::vector<ReductionStep>& trace) {
  std::vector<Eigen::Index> rows(static_cast<std::size_t>(pm.rows()));
  std::vector<Eigen::Index> cols(static_cast<std::size_t>(pm.cols()));
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k] = static_cast<Eigen::Index>(k);
  for (std::size_t k = 0; k < cols.size(); ++k) cols[k] = static_cast<Eigen::Index>(k);
  std::vector<PayoffMatrix> out{pm};
  for (const auto& step : trace) {
    if (!step.deleted) continue;
    auto& kept = step.deleted->axis == Axis::Row ? rows : cols;
    std::erase(kept, step.deleted->index);
    out.push_back(submatrix(pm, rows, cols));
  }
  return out;
}

}  // namespace fuzzygame::testing

#endif  // FUZZYGAME_TESTS_TEST_GAMES_HPP
