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

// Exact solver for the crisp center game, by enumeration of Shapley-Snow
// kernels. It shares no code with the dominance pipeline and exists to
// check it. Instantiate with double, or with an exact rational type for
// zero-tolerance answers.

#ifndef FUZZYGAME_ORACLE_HPP
#define FUZZYGAME_ORACLE_HPP

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fuzzygame/errors.hpp"

namespace fuzzygame {

class PayoffMatrix;
struct Solution;

namespace oracle {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr Eigen::Index kMaxDimension = 8;

template <typename Scalar>
struct GameValue {
  Scalar value;
  Vector<Scalar> x;
  Vector<Scalar> y;
};

/// Slack allowed in sign and optimality tests: zero for exact scalars.
template <typename Scalar>
Scalar tolerance(const Matrix<Scalar>& g) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return Scalar(1e-12) * std::max(Scalar(1), g.cwiseAbs().maxCoeff());
  } else {
    return Scalar(0);
  }
}

/// Gaussian elimination with partial pivoting; exact for rational scalars.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  using std::abs;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (abs(a(r, k)) > abs(a(pivot, k))) pivot = r;
    }
    if (a(pivot, k) == Scalar(0)) return Scalar(0);
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      det = -det;
    }
    det *= a(k, k);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      const Scalar factor = a(r, k) / a(k, k);
      for (Eigen::Index c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return det;
}

/// Transposed cofactor matrix; adj of a 1x1 matrix is [1].
template <typename Scalar>
Matrix<Scalar> adjugate(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  Matrix<Scalar> adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  std::vector<Eigen::Index> keep_r;
  std::vector<Eigen::Index> keep_c;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      keep_r.clear();
      keep_c.clear();
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k != i) keep_r.push_back(k);
        if (k != j) keep_c.push_back(k);
      }
      const Matrix<Scalar> minor = a(keep_r, keep_c);
      const Scalar cofactor = determinant<Scalar>(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cofactor : Scalar(-cofactor);
    }
  }
  return adj;
}

namespace detail {

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order,
// stopping early when visit returns true.
template <typename Visit>
bool for_each_subset(Eigen::Index n, Eigen::Index k, Visit&& visit) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(k));
  for (Eigen::Index t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t;
  while (true) {
    if (visit(idx)) return true;
    Eigen::Index t = k - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - k + t) --t;
    if (t < 0) return false;
    ++idx[static_cast<std::size_t>(t)];
    for (Eigen::Index u = t + 1; u < k; ++u) {
      idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
  }
}

}  // namespace detail

/// Value and one optimal strategy pair of the zero-sum game g (row player
/// maximizes). Kernels are tried by size, then rows, then columns, in
/// lexicographic order; the first feasible optimal pair is returned.
template <typename Scalar>
GameValue<Scalar> oracle_value(const Matrix<Scalar>& g) {
  const Eigen::Index m = g.rows();
  const Eigen::Index n = g.cols();
  if (m == 0 || n == 0) throw ShapeError("oracle needs a nonempty game");
  if (m > kMaxDimension || n > kMaxDimension) {
    throw SizeLimitExceeded("oracle handles games up to " + std::to_string(kMaxDimension) + "x" +
                            std::to_string(kMaxDimension));
  }
  const Scalar tol = tolerance(g);
  GameValue<Scalar> found{Scalar(0), Vector<Scalar>::Zero(m), Vector<Scalar>::Zero(n)};

  for (Eigen::Index k = 1; k <= std::min(m, n); ++k) {
    const bool hit = detail::for_each_subset(m, k, [&](const std::vector<Eigen::Index>& rows) {
      return detail::for_each_subset(n, k, [&](const std::vector<Eigen::Index>& cols) {
        const Matrix<Scalar> kernel = g(rows, cols);
        const Matrix<Scalar> adj = adjugate<Scalar>(kernel);
        const Scalar denom = adj.sum();
        using std::abs;
        if (abs(denom) <= tol) return false;
        const Scalar v = determinant<Scalar>(kernel) / denom;

        Vector<Scalar> x = Vector<Scalar>::Zero(m);
        Vector<Scalar> y = Vector<Scalar>::Zero(n);
        const Vector<Scalar> x_local = adj.colwise().sum().transpose() / denom;
        const Vector<Scalar> y_local = adj.rowwise().sum() / denom;
        for (Eigen::Index t = 0; t < k; ++t) {
          if (x_local(t) < -tol || y_local(t) < -tol) return false;
          x(rows[static_cast<std::size_t>(t)]) = std::max(x_local(t), Scalar(0));
          y(cols[static_cast<std::size_t>(t)]) = std::max(y_local(t), Scalar(0));
        }
        x /= x.sum();
        y /= y.sum();

        const Vector<Scalar> col_payoffs = g.transpose() * x;
        const Vector<Scalar> row_payoffs = g * y;
        if (col_payoffs.minCoeff() < v - tol) return false;
        if (row_payoffs.maxCoeff() > v + tol) return false;
        found = {v, std::move(x), std::move(y)};
        return true;
      });
    });
    if (hit) return found;
  }
  throw InternalConsistencyError("no feasible kernel found; game is numerically degenerate");
}

/// Outcome of comparing a pipeline solution against the oracle.
struct CheckReport {
  struct Check {
    std::string name;
    bool passed{false};
    std::string detail;
  };
  double oracle_value{0};
  std::vector<Check> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

inline constexpr double kCheckTolerance = 1e-9;

/// Verifies s against the oracle value of pm's center game: value agreement
/// and both guarantee inequalities on the full original matrix.
CheckReport oracle_check(const PayoffMatrix& pm, const Solution& s);

}  // namespace oracle
}  // namespace fuzzygame

#endif  // FUZZYGAME_ORACLE_HPP
