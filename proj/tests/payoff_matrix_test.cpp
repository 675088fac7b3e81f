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

#include <cstring>
#include <random>

#include "doctest.h"
#include "test_games.hpp"

namespace fuzzygame {
namespace {

using Kind = MatrixError::Kind;

Kind error_kind(std::string_view text) {
  try {
    parse_matrix(text);
  } catch (const MatrixError& e) {
    return e.kind();
  }
  FAIL("document parsed without error");
  return Kind::Syntax;
}

TEST_CASE("parse a 2x2 document") {
  const auto pm = parse_matrix(R"({"entries": [[[1, 0.2], [7, 0.3]], [[6, 0.2], [2, 0.1]]]})");
  CHECK(pm.rows() == 2);
  CHECK(pm.cols() == 2);
  CHECK(pm(0, 0) == Fuzzy(1, 0.2));
  CHECK(pm(0, 1) == Fuzzy(7, 0.3));
  CHECK(pm(1, 0) == Fuzzy(6, 0.2));
  CHECK(pm(1, 1) == Fuzzy(2, 0.1));
  CHECK(pm.row_labels() == std::vector<std::string>{"A1", "A2"});
  CHECK(pm.col_labels() == std::vector<std::string>{"B1", "B2"});
}

TEST_CASE("parse keeps custom labels") {
  const auto pm = parse_matrix(
      R"({"rows": ["up", "down"], "cols": ["left"], "entries": [[[1, 0]], [[2, 0.5]]]})");
  CHECK(pm.row_labels() == std::vector<std::string>{"up", "down"});
  CHECK(pm.col_labels() == std::vector<std::string>{"left"});
}

TEST_CASE("parse errors are distinct") {
  CHECK(error_kind(R"({"entries": [[[1, 0], [2, 0]], [[1, 0], [2, 0], [3, 0]]]})") ==
        Kind::RaggedRows);
  CHECK(error_kind(R"({"entries": [[[1, -0.1]]]})") == Kind::NegativeSpread);
  CHECK(error_kind(R"({"entries": []})") == Kind::EmptyMatrix);
  CHECK(error_kind(R"({"entries": [[]]})") == Kind::EmptyMatrix);
  CHECK(error_kind(R"({"rows": ["x", "x"], "entries": [[[1, 0]], [[2, 0]]]})") ==
        Kind::DuplicateLabel);
  CHECK(error_kind(R"({"cols": ["a", "b"], "entries": [[[1, 0]]]})") == Kind::LabelCount);
  CHECK(error_kind(R"({"entries": [[[1, 0, 3]]]})") == Kind::MalformedEntry);
  CHECK(error_kind(R"({"entries": [[["1", 0]]]})") == Kind::MalformedEntry);
  CHECK(error_kind(R"({"entries": [[[1, 0]])") == Kind::Syntax);
  CHECK(error_kind(R"([1, 2])") == Kind::Syntax);
}

TEST_CASE("error positions name the row, cell, or offset") {
  try {
    parse_matrix("{\"entries\": [[[1, 0], [2, 0]],\n [[1, 0]]]}");
    FAIL("expected ragged rows");
  } catch (const MatrixError& e) {
    CHECK(e.row() == 1);
    CHECK(std::strstr(e.what(), "row 2") != nullptr);
  }
  try {
    parse_matrix(R"({"entries": [[[1, 0], [2, -3]]]})");
    FAIL("expected negative spread");
  } catch (const MatrixError& e) {
    CHECK(e.row() == 0);
    CHECK(e.col() == 1);
    CHECK(std::strstr(e.what(), "row 1, column 2") != nullptr);
  }
  try {
    parse_matrix("{\n  \"entries\": [[[1, 0]]\n  oops\n}");
    FAIL("expected syntax error");
  } catch (const MatrixError& e) {
    CHECK(e.kind() == Kind::Syntax);
    CHECK(e.line() == 3);
    CHECK(e.column().has_value());
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(PayoffMatrix(Eigen::MatrixXd(0, 0), Eigen::MatrixXd(0, 0)), MatrixError);
  CHECK_THROWS_AS(PayoffMatrix(Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Zero(2, 3)),
                  MatrixError);
  CHECK_THROWS_AS(PayoffMatrix(Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Constant(1, 1, -1)),
                  MatrixError);
}

TEST_CASE("serialize round-trips") {
  const PayoffMatrix one(Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Zero(1, 1));
  CHECK(parse_matrix(serialize_matrix(one)) == one);

  const auto sim = testing::simulation_example();
  CHECK(parse_matrix(serialize_matrix(sim)) == sim);

  const PayoffMatrix labelled(Eigen::MatrixXd::Ones(2, 1), Eigen::MatrixXd::Zero(2, 1),
                              {"hawk", "dove \"quoted\""}, {"only"});
  const auto back = parse_matrix(serialize_matrix(labelled));
  CHECK(back.row_labels() == labelled.row_labels());
  CHECK(back.col_labels() == labelled.col_labels());
}

TEST_CASE("property: serialize/parse is bit-exact on random matrices") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_real_distribution<double> center(-1e6, 1e6);
  std::exponential_distribution<double> spread(3.0);
  for (int t = 0; t < 1000; ++t) {
    const Index m = dim(rng);
    const Index n = dim(rng);
    Eigen::MatrixXd c(m, n);
    Eigen::MatrixXd w(m, n);
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < n; ++j) {
        c(i, j) = center(rng) / std::pow(10.0, static_cast<double>(rng() % 12));
        w(i, j) = spread(rng);
      }
    }
    const PayoffMatrix pm(c, w);
    const std::string doc = serialize_matrix(pm);
    const PayoffMatrix back = parse_matrix(doc);
    REQUIRE(back == pm);
    REQUIRE(std::memcmp(back.centers().data(), pm.centers().data(),
                        sizeof(double) * static_cast<std::size_t>(m * n)) == 0);
    REQUIRE(serialize_matrix(back) == doc);
  }
}

TEST_CASE("submatrix") {
  const auto game = testing::row_then_col_example();
  const std::vector<Index> first_two{0, 1};
  const std::vector<Index> all{0, 1, 2};
  const auto reduced = submatrix(game, first_two, all);
  CHECK(reduced == PayoffMatrix::from_entries({{{1, 0.2}, {7, 0.3}, {2, 0.1}},
                                               {{6, 0.2}, {2, 0.1}, {7, 0.3}}}));
  CHECK(submatrix(game, all, all) == game);

  const auto sim = testing::simulation_example();
  const std::vector<Index> rows{1, 2};
  const std::vector<Index> cols{1, 3};
  const auto fin = submatrix(sim, rows, cols);
  CHECK(fin(0, 0) == Fuzzy(15, 0.5));
  CHECK(fin(0, 1) == Fuzzy(16, 0.1));
  CHECK(fin(1, 0) == Fuzzy(20, 0.2));
  CHECK(fin(1, 1) == Fuzzy(5, 0.4));
  CHECK(fin.row_labels() == std::vector<std::string>{"A2", "A3"});
  CHECK(fin.col_labels() == std::vector<std::string>{"B2", "B4"});

  const std::vector<Index> none;
  const std::vector<Index> bad{3};
  CHECK_THROWS_AS(submatrix(game, none, all), MatrixError);
  CHECK_THROWS_AS(submatrix(game, bad, all), MatrixError);
}

TEST_CASE("property: submatrix preserves entries") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const auto pm = testing::random_game(rng, 5, 6);
    std::vector<Index> rows;
    std::vector<Index> cols;
    for (Index i = 0; i < 5; ++i) {
      if (rng() % 2) rows.push_back(i);
    }
    for (Index j = 0; j < 6; ++j) {
      if (rng() % 2) cols.push_back(j);
    }
    if (rows.empty() || cols.empty()) continue;
    const auto sub = submatrix(pm, rows, cols);
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < cols.size(); ++b) {
        REQUIRE(sub(static_cast<Index>(a), static_cast<Index>(b)) == pm(rows[a], cols[b]));
      }
    }
  }
}

TEST_CASE("role swap transposes and negates centers") {
  const auto sim = testing::simulation_example();
  const auto swapped = sim.role_swapped();
  CHECK(swapped.rows() == 4);
  CHECK(swapped.cols() == 3);
  CHECK(swapped(2, 1) == Fuzzy(-17, 0.4));
  CHECK(swapped.row_labels() == sim.col_labels());
  CHECK(swapped.role_swapped() == sim);
}

}  // namespace
}  // namespace fuzzygame
