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

#include "fuzzygame/payoff_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace fuzzygame {
namespace {

using json = nlohmann::json;
using Kind = MatrixError::Kind;

std::string cell_name(Index i, Index j) {
  return "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
}

void check_labels(const std::vector<std::string>& labels, Index expected,
                  const char* axis) {
  if (static_cast<Index>(labels.size()) != expected) {
    throw MatrixError(Kind::LabelCount, std::string(axis) + " label count " +
                                            std::to_string(labels.size()) +
                                            " does not match " + std::to_string(expected));
  }
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw MatrixError(Kind::DuplicateLabel,
                        std::string("duplicate ") + axis + " label '" + label + "'");
    }
  }
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text,
                                                    std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte, text.size());
  // nlohmann reports the offset one past the offending character.
  for (std::size_t k = 0; k + 1 < end; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::vector<std::string> parse_labels(const json& doc, const char* key, Index count,
                                      char prefix) {
  if (!doc.contains(key)) return default_labels(prefix, count);
  const json& node = doc.at(key);
  if (!node.is_array()) {
    throw MatrixError(Kind::Syntax, std::string("'") + key + "' must be an array of strings");
  }
  std::vector<std::string> labels;
  for (const auto& item : node) {
    if (!item.is_string()) {
      throw MatrixError(Kind::Syntax, std::string("'") + key + "' must be an array of strings");
    }
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

}  // namespace

const char* to_string(MatrixError::Kind kind) {
  switch (kind) {
    case Kind::Syntax: return "syntax";
    case Kind::EmptyMatrix: return "empty-matrix";
    case Kind::RaggedRows: return "ragged-rows";
    case Kind::MalformedEntry: return "malformed-entry";
    case Kind::NegativeSpread: return "negative-spread";
    case Kind::NonFinite: return "non-finite";
    case Kind::LabelCount: return "label-count";
    case Kind::DuplicateLabel: return "duplicate-label";
    case Kind::IndexOutOfRange: return "index-out-of-range";
    case Kind::EmptySelection: return "empty-selection";
  }
  return "?";
}

std::vector<std::string> default_labels(char prefix, Index count) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (Index k = 1; k <= count; ++k) labels.push_back(prefix + std::to_string(k));
  return labels;
}

PayoffMatrix::PayoffMatrix(Eigen::MatrixXd centers, Eigen::MatrixXd spreads,
                           std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels)
    : centers_(std::move(centers)),
      spreads_(std::move(spreads)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (centers_.rows() == 0 || centers_.cols() == 0) {
    throw MatrixError(Kind::EmptyMatrix, "payoff matrix must have at least one entry");
  }
  if (spreads_.rows() != centers_.rows() || spreads_.cols() != centers_.cols()) {
    throw MatrixError(Kind::RaggedRows, "center and spread grids differ in shape");
  }
  for (Index i = 0; i < rows(); ++i) {
    for (Index j = 0; j < cols(); ++j) {
      if (!std::isfinite(centers_(i, j)) || !std::isfinite(spreads_(i, j))) {
        throw MatrixError(Kind::NonFinite, "non-finite entry at " + cell_name(i, j), i, j);
      }
      if (spreads_(i, j) < 0.0) {
        throw MatrixError(Kind::NegativeSpread, "negative spread at " + cell_name(i, j), i, j);
      }
    }
  }
  if (row_labels_.empty()) row_labels_ = default_labels('A', rows());
  if (col_labels_.empty()) col_labels_ = default_labels('B', cols());
  check_labels(row_labels_, rows(), "row");
  check_labels(col_labels_, cols(), "column");
}

PayoffMatrix PayoffMatrix::from_entries(const std::vector<std::vector<Fuzzy>>& entries,
                                        std::vector<std::string> row_labels,
                                        std::vector<std::string> col_labels) {
  if (entries.empty() || entries.front().empty()) {
    throw MatrixError(Kind::EmptyMatrix, "payoff matrix must have at least one entry");
  }
  const auto m = static_cast<Index>(entries.size());
  const auto n = static_cast<Index>(entries.front().size());
  Eigen::MatrixXd centers(m, n);
  Eigen::MatrixXd spreads(m, n);
  for (Index i = 0; i < m; ++i) {
    const auto& row = entries[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.size()) != n) {
      throw MatrixError(Kind::RaggedRows,
                        "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(n),
                        i);
    }
    for (Index j = 0; j < n; ++j) {
      centers(i, j) = row[static_cast<std::size_t>(j)].center();
      spreads(i, j) = row[static_cast<std::size_t>(j)].spread();
    }
  }
  return PayoffMatrix(std::move(centers), std::move(spreads), std::move(row_labels),
                      std::move(col_labels));
}

PayoffMatrix PayoffMatrix::role_swapped() const {
  return PayoffMatrix(-centers_.transpose(), spreads_.transpose(), col_labels_, row_labels_);
}

bool operator==(const PayoffMatrix& a, const PayoffMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.centers_ == b.centers_ &&
         a.spreads_ == b.spreads_ && a.row_labels_ == b.row_labels_ &&
         a.col_labels_ == b.col_labels_;
}

PayoffMatrix submatrix(const PayoffMatrix& pm, std::span<const Index> keep_rows,
                       std::span<const Index> keep_cols) {
  if (keep_rows.empty() || keep_cols.empty()) {
    throw MatrixError(Kind::EmptySelection, "submatrix selection must be nonempty");
  }
  for (Index i : keep_rows) {
    if (i < 0 || i >= pm.rows()) {
      throw MatrixError(Kind::IndexOutOfRange, "row index " + std::to_string(i) + " out of range", i);
    }
  }
  for (Index j : keep_cols) {
    if (j < 0 || j >= pm.cols()) {
      throw MatrixError(Kind::IndexOutOfRange, "column index " + std::to_string(j) + " out of range",
                        std::nullopt, j);
    }
  }
  const std::vector<Index> rows(keep_rows.begin(), keep_rows.end());
  const std::vector<Index> cols(keep_cols.begin(), keep_cols.end());
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  for (Index i : rows) row_labels.push_back(pm.row_labels()[static_cast<std::size_t>(i)]);
  for (Index j : cols) col_labels.push_back(pm.col_labels()[static_cast<std::size_t>(j)]);
  return PayoffMatrix(pm.centers()(rows, cols), pm.spreads()(rows, cols), std::move(row_labels),
                      std::move(col_labels));
}

PayoffMatrix parse_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    std::ostringstream msg;
    msg << "syntax error at line " << line << ", column " << column;
    throw MatrixError(Kind::Syntax, msg.str(), std::nullopt, std::nullopt, line, column);
  }
  if (!doc.is_object() || !doc.contains("entries")) {
    throw MatrixError(Kind::Syntax, "document must be an object with an 'entries' array");
  }
  const json& entries = doc.at("entries");
  if (!entries.is_array()) {
    throw MatrixError(Kind::Syntax, "'entries' must be an array of rows");
  }
  if (entries.empty()) {
    throw MatrixError(Kind::EmptyMatrix, "'entries' has no rows");
  }
  const auto m = static_cast<Index>(entries.size());
  Index n = -1;
  for (Index i = 0; i < m; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array()) {
      throw MatrixError(Kind::Syntax, "row " + std::to_string(i + 1) + " is not an array", i);
    }
    if (n < 0) {
      n = static_cast<Index>(row.size());
      if (n == 0) throw MatrixError(Kind::EmptyMatrix, "row 1 has no entries", i);
    } else if (static_cast<Index>(row.size()) != n) {
      throw MatrixError(Kind::RaggedRows,
                        "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(n),
                        i);
    }
  }

  Eigen::MatrixXd centers(m, n);
  Eigen::MatrixXd spreads(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      const json& cell = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
        throw MatrixError(Kind::MalformedEntry,
                          "entry at " + cell_name(i, j) + " must be [center, spread]", i, j);
      }
      centers(i, j) = cell[0].get<double>();
      spreads(i, j) = cell[1].get<double>();
      if (spreads(i, j) < 0.0) {
        throw MatrixError(Kind::NegativeSpread, "negative spread at " + cell_name(i, j), i, j);
      }
    }
  }
  return PayoffMatrix(std::move(centers), std::move(spreads), parse_labels(doc, "rows", m, 'A'),
                      parse_labels(doc, "cols", n, 'B'));
}

std::string serialize_matrix(const PayoffMatrix& pm) {
  // Numbers go through nlohmann's shortest round-trip formatting, so
  // parse_matrix recovers every bit of every center and spread.
  std::ostringstream out;
  out << "{\n  \"rows\": " << json(pm.row_labels()).dump() << ",\n";
  out << "  \"cols\": " << json(pm.col_labels()).dump() << ",\n";
  out << "  \"entries\": [\n";
  for (Index i = 0; i < pm.rows(); ++i) {
    out << "    [";
    for (Index j = 0; j < pm.cols(); ++j) {
      if (j > 0) out << ", ";
      out << '[' << json(pm.centers()(i, j)).dump() << ", " << json(pm.spreads()(i, j)).dump()
          << ']';
    }
    out << (i + 1 < pm.rows() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

}  // namespace fuzzygame
