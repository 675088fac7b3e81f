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

#include "fuzzygame/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace fuzzygame {
namespace {

enum class Sense { Maximize, Minimize };

void check_index(Index k, Index size, Axis axis) {
  if (k < 0 || k >= size) {
    const bool row = axis == Axis::Row;
    throw MatrixError(MatrixError::Kind::IndexOutOfRange,
                      std::string(row ? "row" : "column") + " index " + std::to_string(k) +
                          " out of range",
                      row ? std::optional<Index>(k) : std::nullopt,
                      row ? std::nullopt : std::optional<Index>(k));
  }
}

void check_threshold(double threshold) {
  if (!(threshold >= 0.0)) throw ValidationError("dominance threshold must be >= 0");
}

std::vector<Fuzzy> row_of(const PayoffMatrix& pm, Index i) {
  std::vector<Fuzzy> out;
  for (Index j = 0; j < pm.cols(); ++j) out.push_back(pm(i, j));
  return out;
}

std::vector<Fuzzy> col_of(const PayoffMatrix& pm, Index j) {
  std::vector<Fuzzy> out;
  for (Index i = 0; i < pm.rows(); ++i) out.push_back(pm(i, j));
  return out;
}

// Shared dominance rule. For Maximize the dominator's centers must be >=
// the target's; for Minimize <=. Identical strategies count only when
// equal_allowed is set.
std::optional<std::vector<double>> dominance_evidence(const std::vector<Fuzzy>& dominator,
                                                      const std::vector<Fuzzy>& target,
                                                      Sense sense, bool equal_allowed,
                                                      double threshold) {
  bool strict = false;
  std::vector<double> evidence;
  evidence.reserve(target.size());
  for (std::size_t k = 0; k < target.size(); ++k) {
    const double d = dominator[k].center();
    const double t = target[k].center();
    const bool ok = sense == Sense::Maximize ? d >= t : d <= t;
    if (!ok) return std::nullopt;
    if (d != t) strict = true;
    const double di = sense == Sense::Maximize ? di_or_crisp_limit(target[k], dominator[k])
                                               : di_or_crisp_limit(dominator[k], target[k]);
    if (threshold > 0.0 && !(di >= threshold)) return std::nullopt;
    evidence.push_back(di);
  }
  if (!strict && !equal_allowed) return std::nullopt;
  return evidence;
}

std::optional<ConvexHit> convex_dominates(const std::vector<Fuzzy>& a, const std::vector<Fuzzy>& b,
                                          const std::vector<Fuzzy>& target,
                                          std::span<const double> weights, Sense sense,
                                          double threshold) {
  if (weights.empty()) throw ValidationError("convex dominance needs at least one weight");
  for (double w : weights) {
    std::vector<Fuzzy> virt;
    virt.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) virt.push_back(blend(a[k], b[k], w));
    // A virtual strategy equal to the target still makes it redundant.
    if (auto evidence = dominance_evidence(virt, target, sense, true, threshold)) {
      return ConvexHit{w, std::move(*evidence)};
    }
  }
  return std::nullopt;
}

Solution pure_solution(const PayoffMatrix& pm, const Saddle& saddle) {
  Solution s;
  s.x = Eigen::VectorXd::Zero(pm.rows());
  s.y = Eigen::VectorXd::Zero(pm.cols());
  s.x(saddle.row) = 1.0;
  s.y(saddle.col) = 1.0;
  s.value = saddle.value;
  s.kind = SolutionKind::PureSaddle;
  return s;
}

ReductionStep saddle_step(Index row, Index col, const Fuzzy& value) {
  ReductionStep step;
  step.kind = StepKind::SaddleFound;
  step.dominator.strategies = {{Axis::Row, row}, {Axis::Col, col}};
  step.evidence = {value.center()};
  return step;
}

// Moves the enumerating player's two-point strategy t * e1 + (1 - t) * e2
// to the nearest point that secures the value v against every opposing
// strategy. Over Axis::Col the lines are the columns of a 2 x n game and
// the bound is a floor; over Axis::Row they are the rows of an m x 2 game
// and the bound is a ceiling.
double clamp_to_secure(const Eigen::MatrixXd& c, Axis axis, double v, double t) {
  const Index lines = axis == Axis::Col ? c.cols() : c.rows();
  const double tol = 1e-9 * std::max(1.0, std::abs(v));
  double lo = 0.0;
  double hi = 1.0;
  for (Index k = 0; k < lines; ++k) {
    const double a = axis == Axis::Col ? c(0, k) : c(k, 0);
    const double b = axis == Axis::Col ? c(1, k) : c(k, 1);
    // Floor: t (a - b) >= v - b. The ceiling flips the inequality, which
    // is the same as negating everything.
    const double sign = axis == Axis::Col ? 1.0 : -1.0;
    const double d = sign * (a - b);
    const double rhs = sign * (v - b);
    if (d > 0) {
      lo = std::max(lo, rhs / d);
    } else if (d < 0) {
      hi = std::min(hi, rhs / d);
    } else if (rhs > tol) {
      throw InternalConsistencyError("sub-game value is not secured by any strategy");
    }
  }
  if (lo > hi + tol) throw InternalConsistencyError("sub-game value is not secured by any strategy");
  return std::clamp(t, lo, std::max(lo, hi));
}

std::vector<Index> iota_indices(Index n) {
  std::vector<Index> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

}  // namespace

const char* to_string(SpreadConvention c) {
  return c == SpreadConvention::Expected ? "expected" : "paper-endpoint";
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::RowDominance: return "RowDominance";
    case StepKind::ColDominance: return "ColDominance";
    case StepKind::ConvexRowDominance: return "ConvexRowDominance";
    case StepKind::ConvexColDominance: return "ConvexColDominance";
    case StepKind::SubgameSelection: return "SubgameSelection";
    case StepKind::SaddleFound: return "SaddleFound";
  }
  return "?";
}

const char* to_string(SolutionKind k) {
  return k == SolutionKind::PureSaddle ? "PureSaddle" : "Mixed2x2";
}

std::optional<Saddle> find_saddle(const PayoffMatrix& pm, Attitude attitude) {
  const Eigen::VectorXd row_min = pm.centers().rowwise().minCoeff();
  const Eigen::RowVectorXd col_max = pm.centers().colwise().maxCoeff();
  std::optional<Saddle> best;
  for (Index i = 0; i < pm.rows(); ++i) {
    for (Index j = 0; j < pm.cols(); ++j) {
      const double c = pm.centers()(i, j);
      if (c != row_min(i) || c != col_max(j)) continue;
      const Fuzzy entry = pm(i, j);
      if (!best || prefer_min(best->value, entry, attitude) == Choice::B) {
        best = Saddle{i, j, entry};
      }
    }
  }
  return best;
}

std::optional<std::vector<double>> row_dominates(const PayoffMatrix& pm, Index i, Index r,
                                                 double threshold) {
  check_index(i, pm.rows(), Axis::Row);
  check_index(r, pm.rows(), Axis::Row);
  if (i == r) throw ValidationError("a row cannot dominate itself");
  check_threshold(threshold);
  return dominance_evidence(row_of(pm, i), row_of(pm, r), Sense::Maximize, i < r, threshold);
}

std::optional<std::vector<double>> col_dominates(const PayoffMatrix& pm, Index j, Index s,
                                                 double threshold) {
  check_index(j, pm.cols(), Axis::Col);
  check_index(s, pm.cols(), Axis::Col);
  if (j == s) throw ValidationError("a column cannot dominate itself");
  check_threshold(threshold);
  return dominance_evidence(col_of(pm, j), col_of(pm, s), Sense::Minimize, j < s, threshold);
}

std::vector<Fuzzy> convex_row(const PayoffMatrix& pm, Index p, Index q, double beta) {
  check_index(p, pm.rows(), Axis::Row);
  check_index(q, pm.rows(), Axis::Row);
  std::vector<Fuzzy> out;
  for (Index j = 0; j < pm.cols(); ++j) out.push_back(blend(pm(p, j), pm(q, j), beta));
  return out;
}

std::vector<Fuzzy> convex_col(const PayoffMatrix& pm, Index p, Index q, double alpha) {
  check_index(p, pm.cols(), Axis::Col);
  check_index(q, pm.cols(), Axis::Col);
  std::vector<Fuzzy> out;
  for (Index i = 0; i < pm.rows(); ++i) out.push_back(blend(pm(i, p), pm(i, q), alpha));
  return out;
}

std::optional<ConvexHit> convex_row_dominates(const PayoffMatrix& pm, Index p, Index q, Index s,
                                              std::span<const double> betas, double threshold) {
  check_index(p, pm.rows(), Axis::Row);
  check_index(q, pm.rows(), Axis::Row);
  check_index(s, pm.rows(), Axis::Row);
  if (p == q || p == s || q == s) throw ValidationError("convex row indices must be distinct");
  check_threshold(threshold);
  return convex_dominates(row_of(pm, p), row_of(pm, q), row_of(pm, s), betas, Sense::Maximize,
                          threshold);
}

std::optional<ConvexHit> convex_col_dominates(const PayoffMatrix& pm, Index p, Index q, Index s,
                                              std::span<const double> alphas, double threshold) {
  check_index(p, pm.cols(), Axis::Col);
  check_index(q, pm.cols(), Axis::Col);
  check_index(s, pm.cols(), Axis::Col);
  if (p == q || p == s || q == s) throw ValidationError("convex column indices must be distinct");
  check_threshold(threshold);
  return convex_dominates(col_of(pm, p), col_of(pm, q), col_of(pm, s), alphas, Sense::Minimize,
                          threshold);
}

Solution solve_2x2(const PayoffMatrix& pm, SpreadConvention conv, Attitude attitude) {
  if (pm.rows() != 2 || pm.cols() != 2) {
    throw ShapeError("solve_2x2 needs a 2x2 matrix, got " + std::to_string(pm.rows()) + "x" +
                     std::to_string(pm.cols()));
  }
  if (auto saddle = find_saddle(pm, attitude)) {
    Solution s = pure_solution(pm, *saddle);
    s.trace.push_back(saddle_step(saddle->row, saddle->col, saddle->value));
    return s;
  }

  const Eigen::Matrix2d m = pm.centers();
  const double det_sum = m(0, 0) + m(1, 1) - m(0, 1) - m(1, 0);
  if (det_sum == 0.0) {
    // A 2x2 center game with equal diagonal sums always has a pure saddle.
    throw InternalConsistencyError("2x2 game without saddle has zero denominator");
  }

  Solution s;
  s.kind = SolutionKind::Mixed2x2;
  s.x = Eigen::Vector2d((m(1, 1) - m(1, 0)) / det_sum, (m(0, 0) - m(0, 1)) / det_sum);
  s.y = Eigen::Vector2d((m(1, 1) - m(0, 1)) / det_sum, (m(0, 0) - m(1, 0)) / det_sum);
  const double center = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / det_sum;

  const double expected_spread = s.x.dot(pm.spreads() * s.y);
  double spread = expected_spread;
  if (conv == SpreadConvention::PaperEndpoint) {
    const Eigen::Matrix2d b = pm.centers() + pm.spreads();
    const double b_sum = b(0, 0) + b(1, 1) - b(0, 1) - b(1, 0);
    // Zero endpoint denominator: the closed form is undefined; keep the
    // expected spread.
    if (b_sum != 0.0) {
      spread = std::max(0.0, (b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0)) / b_sum - center);
    }
  }
  s.value = Fuzzy(center, std::max(0.0, spread));
  return s;
}

SubgameEnumeration enumerate_subgames(const PayoffMatrix& pm, SpreadConvention conv,
                                      Attitude attitude) {
  SubgameEnumeration out;
  Index count = 0;
  if (pm.rows() == 2 && pm.cols() >= 3) {
    out.axis = Axis::Col;
    count = pm.cols();
  } else if (pm.cols() == 2 && pm.rows() >= 3) {
    out.axis = Axis::Row;
    count = pm.rows();
  } else {
    throw ShapeError("sub-game enumeration needs a 2 x n or m x 2 game with the other side >= 3, got " +
                     std::to_string(pm.rows()) + "x" + std::to_string(pm.cols()));
  }

  const std::vector<Index> both{0, 1};
  for (Index a = 0; a < count; ++a) {
    for (Index b = a + 1; b < count; ++b) {
      const std::vector<Index> pair{a, b};
      const PayoffMatrix sub = out.axis == Axis::Col ? submatrix(pm, both, pair)
                                                     : submatrix(pm, pair, both);
      SubgameCandidate cand{{a, b}, solve_2x2(sub, conv, attitude)};
      const double v = cand.solution.value.center();
      const double tol = 1e-9 * std::max(1.0, std::abs(v));
      if (out.axis == Axis::Col) {
        const Eigen::RowVectorXd payoff = cand.solution.x.transpose() * pm.centers();
        cand.secure = payoff.minCoeff() >= v - tol;
      } else {
        const Eigen::VectorXd payoff = pm.centers() * cand.solution.y;
        cand.secure = payoff.maxCoeff() <= v + tol;
      }
      out.candidates.push_back(std::move(cand));
    }
  }

  // Tied or degenerate sub-games can carry a strategy that is optimal only
  // inside the pair, so secure candidates come first.
  for (std::size_t k = 1; k < out.candidates.size(); ++k) {
    const SubgameCandidate& best = out.candidates[out.chosen];
    const SubgameCandidate& next = out.candidates[k];
    if (best.secure != next.secure) {
      if (next.secure) out.chosen = k;
      continue;
    }
    const Choice pick = out.axis == Axis::Col
                            ? prefer_min(best.solution.value, next.solution.value, attitude)
                            : prefer_max(best.solution.value, next.solution.value, attitude);
    if (pick == Choice::B) out.chosen = k;
  }

  // With a flat line in the envelope no pair may carry a secure strategy;
  // the chosen value is still the game value, so repair the strategy.
  SubgameCandidate& chosen = out.candidates[out.chosen];
  if (!chosen.secure) {
    Solution& s = chosen.solution;
    Eigen::VectorXd& v = out.axis == Axis::Col ? s.x : s.y;
    const double t = clamp_to_secure(pm.centers(), out.axis, s.value.center(), v(0));
    v = Eigen::Vector2d(t, 1.0 - t);
    const std::vector<Index> pair{chosen.pair[0], chosen.pair[1]};
    const PayoffMatrix sub =
        out.axis == Axis::Col ? submatrix(pm, both, pair) : submatrix(pm, pair, both);
    if (conv == SpreadConvention::Expected) {
      s.value = Fuzzy(s.value.center(), std::max(0.0, s.x.dot(sub.spreads() * s.y)));
    }
    if ((s.x.array() > 0).count() > 1 || (s.y.array() > 0).count() > 1) {
      s.kind = SolutionKind::Mixed2x2;
    }
  }
  return out;
}

std::vector<double> default_betas(int steps) {
  if (steps < 2) throw ValidationError("beta grid needs at least 2 steps");
  std::vector<double> betas{0.5};
  for (int k = 0; k < steps; ++k) {
    const double beta = static_cast<double>(k) / static_cast<double>(steps - 1);
    if (beta != 0.5) betas.push_back(beta);
  }
  return betas;
}

Reduction reduce(const PayoffMatrix& pm, const SolverConfig& config) {
  check_threshold(config.threshold);
  Reduction red{pm, iota_indices(pm.rows()), iota_indices(pm.cols()), {}};
  const double threshold = config.threshold;

  auto erase = [&](Axis axis, Index k) {
    auto& kept = axis == Axis::Row ? red.kept_rows : red.kept_cols;
    kept.erase(kept.begin() + k);
    red.residual = submatrix(pm, red.kept_rows, red.kept_cols);
  };
  auto row_id = [&](Index k) { return StrategyIndex{Axis::Row, red.kept_rows[static_cast<std::size_t>(k)]}; };
  auto col_id = [&](Index k) { return StrategyIndex{Axis::Col, red.kept_cols[static_cast<std::size_t>(k)]}; };

  auto plain_rows = [&]() -> bool {
    const PayoffMatrix& w = red.residual;
    for (Index r = 0; r < w.rows(); ++r) {
      for (Index i = 0; i < w.rows(); ++i) {
        if (i == r) continue;
        if (auto ev = row_dominates(w, i, r, threshold)) {
          red.trace.push_back({StepKind::RowDominance, row_id(r), {{row_id(i)}, std::nullopt},
                               std::move(*ev)});
          erase(Axis::Row, r);
          return true;
        }
      }
    }
    return false;
  };
  auto plain_cols = [&]() -> bool {
    const PayoffMatrix& w = red.residual;
    for (Index s = 0; s < w.cols(); ++s) {
      for (Index j = 0; j < w.cols(); ++j) {
        if (j == s) continue;
        if (auto ev = col_dominates(w, j, s, threshold)) {
          red.trace.push_back({StepKind::ColDominance, col_id(s), {{col_id(j)}, std::nullopt},
                               std::move(*ev)});
          erase(Axis::Col, s);
          return true;
        }
      }
    }
    return false;
  };
  auto convex_rows = [&]() -> bool {
    const PayoffMatrix& w = red.residual;
    for (Index s = 0; s < w.rows(); ++s) {
      for (Index p = 0; p < w.rows(); ++p) {
        for (Index q = p + 1; q < w.rows(); ++q) {
          if (p == s || q == s) continue;
          if (auto hit = convex_row_dominates(w, p, q, s, config.betas, threshold)) {
            red.trace.push_back({StepKind::ConvexRowDominance, row_id(s),
                                 {{row_id(p), row_id(q)}, hit->weight}, std::move(hit->evidence)});
            erase(Axis::Row, s);
            return true;
          }
        }
      }
    }
    return false;
  };
  auto convex_cols = [&]() -> bool {
    const PayoffMatrix& w = red.residual;
    for (Index s = 0; s < w.cols(); ++s) {
      for (Index p = 0; p < w.cols(); ++p) {
        for (Index q = p + 1; q < w.cols(); ++q) {
          if (p == s || q == s) continue;
          if (auto hit = convex_col_dominates(w, p, q, s, config.betas, threshold)) {
            red.trace.push_back({StepKind::ConvexColDominance, col_id(s),
                                 {{col_id(p), col_id(q)}, hit->weight}, std::move(hit->evidence)});
            erase(Axis::Col, s);
            return true;
          }
        }
      }
    }
    return false;
  };

  while (plain_rows() || plain_cols() || convex_rows() || convex_cols()) {
  }
  return red;
}

Solution solve_pipeline(const PayoffMatrix& pm, const SolverConfig& config) {
  if (auto saddle = find_saddle(pm, config.attitude)) {
    Solution s = pure_solution(pm, *saddle);
    s.trace.push_back(saddle_step(saddle->row, saddle->col, saddle->value));
    return s;
  }

  Reduction red = reduce(pm, config);
  const PayoffMatrix& residual = red.residual;

  // Local solution and the residual positions its two axes refer to.
  Solution local;
  std::vector<Index> local_rows;
  std::vector<Index> local_cols;
  std::vector<ReductionStep> trace = red.trace;

  if (residual.rows() == 1 || residual.cols() == 1) {
    // Everything but one strategy was dominated away, which leaves a saddle.
    const auto saddle = find_saddle(residual, config.attitude);
    if (!saddle) throw InternalConsistencyError("degenerate residual without a saddle");
    local = pure_solution(residual, *saddle);
    local_rows = iota_indices(residual.rows());
    local_cols = iota_indices(residual.cols());
  } else if (residual.rows() == 2 && residual.cols() == 2) {
    local = solve_2x2(residual, config.conv, config.attitude);
    local_rows = {0, 1};
    local_cols = {0, 1};
  } else if (residual.rows() == 2 || residual.cols() == 2) {
    SubgameEnumeration en = enumerate_subgames(residual, config.conv, config.attitude);
    SubgameCandidate& chosen = en.candidates[en.chosen];
    const std::vector<Index> pair{chosen.pair[0], chosen.pair[1]};
    const std::vector<Index>& kept = en.axis == Axis::Col ? red.kept_cols : red.kept_rows;

    ReductionStep step;
    step.kind = StepKind::SubgameSelection;
    for (Index k : pair) {
      step.dominator.strategies.push_back({en.axis, kept[static_cast<std::size_t>(k)]});
    }
    for (const auto& c : en.candidates) step.evidence.push_back(c.solution.value.center());
    trace.push_back(std::move(step));

    local = std::move(chosen.solution);
    local_rows = en.axis == Axis::Col ? std::vector<Index>{0, 1} : pair;
    local_cols = en.axis == Axis::Col ? pair : std::vector<Index>{0, 1};
  } else {
    throw NotReducible(std::move(red));
  }

  Solution s;
  s.kind = local.kind;
  s.value = local.value;
  s.x = Eigen::VectorXd::Zero(pm.rows());
  s.y = Eigen::VectorXd::Zero(pm.cols());
  for (std::size_t t = 0; t < local_rows.size(); ++t) {
    s.x(red.kept_rows[static_cast<std::size_t>(local_rows[t])]) = local.x(static_cast<Index>(t));
  }
  for (std::size_t t = 0; t < local_cols.size(); ++t) {
    s.y(red.kept_cols[static_cast<std::size_t>(local_cols[t])]) = local.y(static_cast<Index>(t));
  }
  if (s.kind == SolutionKind::PureSaddle) {
    Index row = 0;
    Index col = 0;
    s.x.maxCoeff(&row);
    s.y.maxCoeff(&col);
    trace.push_back(saddle_step(row, col, s.value));
  }
  s.trace = std::move(trace);
  return s;
}

double expected_center(const PayoffMatrix& pm, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& y) {
  return x.dot(pm.centers() * y);
}

}  // namespace fuzzygame
