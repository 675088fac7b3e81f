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

#include "fuzzygame/oracle.hpp"

#include <cmath>
#include <sstream>

#include "fuzzygame/payoff_matrix.hpp"
#include "fuzzygame/solver.hpp"

namespace fuzzygame::oracle {
namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool on_simplex(const Eigen::VectorXd& p, Index size) {
  if (p.size() != size) return false;
  if ((p.array() < 0.0).any() || (p.array() > 1.0).any()) return false;
  return std::abs(p.sum() - 1.0) <= 1e-12;
}

}  // namespace

CheckReport oracle_check(const PayoffMatrix& pm, const Solution& s) {
  CheckReport report;
  const GameValue<double> truth = oracle_value<double>(pm.centers());
  report.oracle_value = truth.value;
  const double v = truth.value;

  const bool x_ok = on_simplex(s.x, pm.rows());
  const bool y_ok = on_simplex(s.y, pm.cols());
  report.checks.push_back({"x-simplex", x_ok, x_ok ? "" : "x is not a probability vector over the rows"});
  report.checks.push_back({"y-simplex", y_ok, y_ok ? "" : "y is not a probability vector over the columns"});

  const double gap = std::abs(s.value.center() - v);
  report.checks.push_back({"value", gap <= kCheckTolerance,
                           "pipeline " + fmt(s.value.center()) + " vs oracle " + fmt(v)});

  if (s.x.size() == pm.rows()) {
    const double floor = (pm.centers().transpose() * s.x).minCoeff();
    report.checks.push_back({"row-guarantee", floor >= v - kCheckTolerance,
                             "min over columns of x-payoff " + fmt(floor)});
  } else {
    report.checks.push_back({"row-guarantee", false, "x has the wrong length"});
  }
  if (s.y.size() == pm.cols()) {
    const double ceiling = (pm.centers() * s.y).maxCoeff();
    report.checks.push_back({"column-guarantee", ceiling <= v + kCheckTolerance,
                             "max over rows of y-payoff " + fmt(ceiling)});
  } else {
    report.checks.push_back({"column-guarantee", false, "y has the wrong length"});
  }
  return report;
}

}  // namespace fuzzygame::oracle
