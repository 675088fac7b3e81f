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

#ifndef FUZZYGAME_PAYOFF_MATRIX_HPP
#define FUZZYGAME_PAYOFF_MATRIX_HPP

#include <Eigen/Core>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzygame/errors.hpp"
#include "fuzzygame/fuzzy.hpp"

namespace fuzzygame {

using Index = Eigen::Index;

enum class Axis { Row, Col };

/// A strategy's position in the ORIGINAL matrix, stable across deletions.
struct StrategyIndex {
  Axis axis{Axis::Row};
  Index index{0};

  friend bool operator==(const StrategyIndex&, const StrategyIndex&) = default;
};

/// Malformed matrix input. Carries enough position information for a
/// diagnostic that names the offending row, cell, or document offset.
class MatrixError : public ValidationError {
 public:
  enum class Kind {
    Syntax,
    EmptyMatrix,
    RaggedRows,
    MalformedEntry,
    NegativeSpread,
    NonFinite,
    LabelCount,
    DuplicateLabel,
    IndexOutOfRange,
    EmptySelection,
  };

  MatrixError(Kind kind, const std::string& what, std::optional<Index> row = {},
              std::optional<Index> col = {}, std::optional<std::size_t> line = {},
              std::optional<std::size_t> column = {})
      : ValidationError(what),
        kind_(kind),
        row_(row),
        col_(col),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  /// 0-based matrix row/column the error refers to, when there is one.
  std::optional<Index> row() const { return row_; }
  std::optional<Index> col() const { return col_; }
  /// 1-based position in the source document, for syntax errors.
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> column() const { return column_; }

 private:
  Kind kind_;
  std::optional<Index> row_;
  std::optional<Index> col_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

const char* to_string(MatrixError::Kind kind);

/// m x n grid of symmetric fuzzy payoffs, written for the maximizing row
/// player. Centers and spreads are held as two dense Eigen matrices.
class PayoffMatrix {
 public:
  PayoffMatrix(Eigen::MatrixXd centers, Eigen::MatrixXd spreads,
               std::vector<std::string> row_labels = {},
               std::vector<std::string> col_labels = {});

  static PayoffMatrix from_entries(const std::vector<std::vector<Fuzzy>>& entries,
                                   std::vector<std::string> row_labels = {},
                                   std::vector<std::string> col_labels = {});

  Index rows() const { return centers_.rows(); }
  Index cols() const { return centers_.cols(); }

  Fuzzy operator()(Index i, Index j) const { return {centers_(i, j), spreads_(i, j)}; }

  const Eigen::MatrixXd& centers() const { return centers_; }
  const Eigen::MatrixXd& spreads() const { return spreads_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  /// The same game seen from the column player: transposed, centers negated.
  PayoffMatrix role_swapped() const;

  friend bool operator==(const PayoffMatrix& a, const PayoffMatrix& b);

 private:
  Eigen::MatrixXd centers_;
  Eigen::MatrixXd spreads_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

std::vector<std::string> default_labels(char prefix, Index count);

/// Restricts the matrix to the given rows and columns, in the given order.
PayoffMatrix submatrix(const PayoffMatrix& pm, std::span<const Index> keep_rows,
                       std::span<const Index> keep_cols);

/// Parses the JSON matrix document:
///   {"rows": [...], "cols": [...], "entries": [[[center, spread], ...], ...]}
/// "rows" and "cols" are optional label lists.
PayoffMatrix parse_matrix(std::string_view text);

std::string serialize_matrix(const PayoffMatrix& pm);

}  // namespace fuzzygame

#endif  // FUZZYGAME_PAYOFF_MATRIX_HPP
