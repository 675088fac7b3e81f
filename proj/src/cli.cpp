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

#include "fuzzygame/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "fuzzygame/oracle.hpp"

namespace fuzzygame::cli {
namespace {

using json = nlohmann::json;

std::string shortest(double v) { return json(v).dump(); }

json number_or_infinity(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ValidationError("unexpected number text '" + s + "'");
  }
  return j.get<double>();
}

const std::string& label_of(const PayoffMatrix& pm, const StrategyIndex& s) {
  const auto k = static_cast<std::size_t>(s.index);
  return s.axis == Axis::Row ? pm.row_labels().at(k) : pm.col_labels().at(k);
}

json strategy_to_json(const PayoffMatrix& pm, const StrategyIndex& s) {
  return {{"axis", s.axis == Axis::Row ? "row" : "col"},
          {"index", s.index},
          {"label", label_of(pm, s)}};
}

StrategyIndex strategy_from_json(const json& j) {
  return {j.at("axis").get<std::string>() == "row" ? Axis::Row : Axis::Col,
          j.at("index").get<Index>()};
}

StepKind step_kind_from(const std::string& name) {
  for (StepKind k : {StepKind::RowDominance, StepKind::ColDominance, StepKind::ConvexRowDominance,
                     StepKind::ConvexColDominance, StepKind::SubgameSelection,
                     StepKind::SaddleFound}) {
    if (name == to_string(k)) return k;
  }
  throw ValidationError("unknown step kind '" + name + "'");
}

json fraction_or_null(double v) {
  if (auto f = to_fraction(v)) {
    return f->denominator == 1 ? std::to_string(f->numerator)
                               : std::to_string(f->numerator) + "/" + std::to_string(f->denominator);
  }
  return nullptr;
}

json config_to_json(const CliConfig& cfg) {
  return {{"threshold", cfg.threshold},
          {"beta_steps", cfg.beta_steps},
          {"attitude", to_string(cfg.attitude)},
          {"spread_convention", to_string(cfg.spread_convention)}};
}

std::optional<PayoffMatrix> load_matrix(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": cannot open file\n";
    return std::nullopt;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix(buffer.str());
  } catch (const MatrixError& e) {
    err << path << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
  } catch (const Error& e) {
    err << path << ": " << e.what() << '\n';
  }
  return std::nullopt;
}

std::string fuzzy_text(const Fuzzy& f) {
  return "<" + format_number(f.center()) + ", " + format_number(f.spread()) + ">";
}

void print_distribution(std::ostream& out, const char* title,
                        const std::vector<std::string>& labels, const Eigen::VectorXd& p) {
  out << title << '\n';
  std::size_t width = 0;
  for (const auto& l : labels) width = std::max(width, l.size());
  for (Index k = 0; k < p.size(); ++k) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << labels[static_cast<std::size_t>(k)]
        << "  " << std::setw(12) << format_number(p(k)) << shortest(p(k)) << '\n';
  }
  out << std::right;
}

void print_trace(std::ostream& out, const PayoffMatrix& pm, const std::vector<ReductionStep>& trace) {
  out << "trace:\n";
  if (trace.empty()) out << "  (no steps)\n";
  int n = 0;
  for (const auto& step : trace) {
    out << "  " << ++n << ". " << to_string(step.kind);
    const auto& doms = step.dominator.strategies;
    switch (step.kind) {
      case StepKind::RowDominance:
      case StepKind::ColDominance:
        out << ": delete " << label_of(pm, *step.deleted) << ", dominated by "
            << label_of(pm, doms.at(0));
        break;
      case StepKind::ConvexRowDominance:
      case StepKind::ConvexColDominance: {
        const double w = step.dominator.weight.value_or(0.0);
        out << ": delete " << label_of(pm, *step.deleted) << ", dominated by "
            << format_number(w) << "*" << label_of(pm, doms.at(0)) << " + "
            << format_number(1.0 - w) << "*" << label_of(pm, doms.at(1));
        break;
      }
      case StepKind::SubgameSelection:
        out << ": choose {" << label_of(pm, doms.at(0)) << ", " << label_of(pm, doms.at(1))
            << "}";
        break;
      case StepKind::SaddleFound:
        out << ": saddle at (" << label_of(pm, doms.at(0)) << ", " << label_of(pm, doms.at(1))
            << ")";
        break;
    }
    if (!step.evidence.empty()) {
      out << (step.kind == StepKind::SubgameSelection ? "; candidate values " : "; evidence ");
      for (std::size_t k = 0; k < step.evidence.size(); ++k) {
        if (k > 0) out << ", ";
        const double v = step.evidence[k];
        out << (std::isinf(v) ? (v > 0 ? "inf" : "-inf") : format_number(v));
      }
    }
    out << '\n';
  }
}

// Shared by solve and check: run the pipeline, reporting NotReducible.
struct PipelineOutcome {
  std::optional<Solution> solution;
  std::optional<NotReducible> not_reducible;
};

PipelineOutcome run_pipeline(const PayoffMatrix& pm, const CliConfig& cfg) {
  try {
    return {solve_pipeline(pm, cfg.solver_config()), std::nullopt};
  } catch (const NotReducible& e) {
    return {std::nullopt, e};
  }
}

}  // namespace

void CliConfig::validate() const {
  if (!(threshold >= 0.0)) throw ValidationError("--threshold must be >= 0");
  if (beta_steps < 2) throw ValidationError("--beta-steps must be >= 2");
}

SolverConfig CliConfig::solver_config() const {
  validate();
  return {threshold, default_betas(beta_steps), attitude, spread_convention};
}

std::optional<Fraction> to_fraction(double v, long long max_denominator) {
  if (!std::isfinite(v) || std::abs(v) > 1e12) return std::nullopt;
  const bool negative = v < 0;
  const double x = std::abs(v);
  // A few ulps: loose enough for closed-form arithmetic, tight enough that
  // ordinary decimals are not mistaken for large fractions.
  const double tol = 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, x);
  // Continued-fraction convergents h/k.
  long long h_prev = 1, h = static_cast<long long>(std::floor(x));
  long long k_prev = 0, k = 1;
  double rest = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(static_cast<double>(h) / static_cast<double>(k) - x) <= tol) {
      return Fraction{negative ? -h : h, k};
    }
    if (rest <= 0.0) break;
    const double inv = 1.0 / rest;
    const double a = std::floor(inv);
    if (a > static_cast<double>(max_denominator)) break;
    const auto ai = static_cast<long long>(a);
    const long long h_next = ai * h + h_prev;
    const long long k_next = ai * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    rest = inv - a;
  }
  return std::nullopt;
}

std::string format_number(double v) {
  if (auto f = to_fraction(v)) {
    if (f->denominator == 1) return std::to_string(f->numerator);
    return std::to_string(f->numerator) + "/" + std::to_string(f->denominator);
  }
  return shortest(v);
}

Fuzzy parse_fuzzy_literal(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '<' && s.back() == '>') s = s.substr(1, s.size() - 2);
  const auto sep = s.find_first_of(",:");
  if (sep == std::string::npos) {
    throw ValidationError("fuzzy number '" + std::string(text) + "' must look like center,spread");
  }
  try {
    std::size_t used_c = 0;
    std::size_t used_w = 0;
    const std::string cs = s.substr(0, sep);
    const std::string ws = s.substr(sep + 1);
    const double c = std::stod(cs, &used_c);
    const double w = std::stod(ws, &used_w);
    auto only_space = [](const std::string& str, std::size_t from) {
      return str.find_first_not_of(" \t", from) == std::string::npos;
    };
    if (!only_space(cs, used_c) || !only_space(ws, used_w)) throw std::invalid_argument("trailing");
    return Fuzzy(c, w);
  } catch (const std::logic_error&) {
    throw ValidationError("fuzzy number '" + std::string(text) + "' must look like center,spread");
  }
}

json trace_to_json(const std::vector<ReductionStep>& trace, const PayoffMatrix& pm) {
  json steps = json::array();
  for (const auto& step : trace) {
    json doms = json::array();
    for (const auto& s : step.dominator.strategies) doms.push_back(strategy_to_json(pm, s));
    json evidence = json::array();
    for (double v : step.evidence) evidence.push_back(number_or_infinity(v));
    steps.push_back({
        {"kind", to_string(step.kind)},
        {"deleted", step.deleted ? strategy_to_json(pm, *step.deleted) : json(nullptr)},
        {"dominator",
         {{"strategies", doms},
          {"weight", step.dominator.weight ? json(*step.dominator.weight) : json(nullptr)}}},
        {"evidence", evidence},
    });
  }
  return steps;
}

std::vector<ReductionStep> trace_from_json(const json& doc) {
  std::vector<ReductionStep> trace;
  for (const auto& j : doc) {
    ReductionStep step;
    step.kind = step_kind_from(j.at("kind").get<std::string>());
    if (!j.at("deleted").is_null()) step.deleted = strategy_from_json(j.at("deleted"));
    for (const auto& s : j.at("dominator").at("strategies")) {
      step.dominator.strategies.push_back(strategy_from_json(s));
    }
    if (!j.at("dominator").at("weight").is_null()) {
      step.dominator.weight = j.at("dominator").at("weight").get<double>();
    }
    for (const auto& v : j.at("evidence")) step.evidence.push_back(number_from_json(v));
    trace.push_back(std::move(step));
  }
  return trace;
}

json solution_to_json(const PayoffMatrix& pm, const Solution& s, const CliConfig& cfg) {
  json x = json::array();
  json y = json::array();
  json xf = json::array();
  json yf = json::array();
  for (Index k = 0; k < s.x.size(); ++k) {
    x.push_back(s.x(k));
    xf.push_back(fraction_or_null(s.x(k)));
  }
  for (Index k = 0; k < s.y.size(); ++k) {
    y.push_back(s.y(k));
    yf.push_back(fraction_or_null(s.y(k)));
  }
  return {
      {"kind", to_string(s.kind)},
      {"rows", pm.row_labels()},
      {"cols", pm.col_labels()},
      {"x", x},
      {"y", y},
      {"x_fraction", xf},
      {"y_fraction", yf},
      {"value",
       {{"center", s.value.center()},
        {"spread", s.value.spread()},
        {"center_fraction", fraction_or_null(s.value.center())}}},
      {"trace", trace_to_json(s.trace, pm)},
      {"config", config_to_json(cfg)},
  };
}

Solution solution_from_json(const json& doc) {
  Solution s;
  const auto kind = doc.at("kind").get<std::string>();
  if (kind == to_string(SolutionKind::PureSaddle)) {
    s.kind = SolutionKind::PureSaddle;
  } else if (kind == to_string(SolutionKind::Mixed2x2)) {
    s.kind = SolutionKind::Mixed2x2;
  } else {
    throw ValidationError("unknown solution kind '" + kind + "'");
  }
  const auto x = doc.at("x").get<std::vector<double>>();
  const auto y = doc.at("y").get<std::vector<double>>();
  s.x = Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Index>(x.size()));
  s.y = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Index>(y.size()));
  s.value = Fuzzy(doc.at("value").at("center").get<double>(),
                  doc.at("value").at("spread").get<double>());
  s.trace = trace_from_json(doc.at("trace"));
  return s;
}

int cmd_solve(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto pm = load_matrix(cfg.input, err);
  if (!pm) return kExitInputError;
  PipelineOutcome outcome;
  try {
    outcome = run_pipeline(*pm, cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  if (outcome.not_reducible) {
    const Reduction& red = outcome.not_reducible->reduction();
    err << "not reducible: " << outcome.not_reducible->what() << '\n';
    if (cfg.format == OutputFormat::Machine) {
      out << json{{"kind", "NotReducible"},
                  {"residual", json::parse(serialize_matrix(red.residual))},
                  {"trace", trace_to_json(red.trace, *pm)},
                  {"config", config_to_json(cfg)}}
                 .dump(2)
          << '\n';
    } else {
      out << "dominance cannot reduce this game below " << red.residual.rows() << "x"
          << red.residual.cols() << "; residual matrix:\n"
          << serialize_matrix(red.residual);
      print_trace(out, *pm, red.trace);
      out << "hint: 'check' reports the center game's value from the exact oracle\n";
    }
    return kExitNotReducible;
  }

  const Solution& s = *outcome.solution;
  if (cfg.format == OutputFormat::Machine) {
    out << solution_to_json(*pm, s, cfg).dump(2) << '\n';
    return kExitOk;
  }
  out << "game: " << pm->rows() << "x" << pm->cols() << ", solution: " << to_string(s.kind) << '\n';
  out << "value: " << fuzzy_text(s.value) << "  (center " << shortest(s.value.center())
      << ", spread " << shortest(s.value.spread()) << ")\n";
  print_distribution(out, "row player (maximizing):", pm->row_labels(), s.x);
  print_distribution(out, "column player (minimizing):", pm->col_labels(), s.y);
  if (cfg.trace) print_trace(out, *pm, s.trace);
  return kExitOk;
}

int cmd_reduce(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto pm = load_matrix(cfg.input, err);
  if (!pm) return kExitInputError;
  std::optional<Reduction> red;
  try {
    red = reduce(*pm, cfg.solver_config());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const std::string document = serialize_matrix(red->residual);
  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!(file << document)) {
      err << cfg.output << ": cannot write file\n";
      return kExitInputError;
    }
  }
  if (cfg.format == OutputFormat::Machine) {
    out << json{{"residual", json::parse(document)},
                {"trace", trace_to_json(red->trace, *pm)},
                {"config", config_to_json(cfg)}}
               .dump(2)
        << '\n';
  } else {
    out << document;
    print_trace(out, *pm, red->trace);
  }
  return kExitOk;
}

int cmd_rank(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Fuzzy a;
  Fuzzy b;
  try {
    a = parse_fuzzy_literal(cfg.rank_a);
    b = parse_fuzzy_literal(cfg.rank_b);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const Ranking<double> r = rank(a, b);
  const bool min_a = prefer_min(a, b, cfg.attitude) == Choice::A;
  const bool max_a = prefer_max(a, b, cfg.attitude) == Choice::A;

  if (cfg.format == OutputFormat::Machine) {
    out << json{{"a", {{"center", a.center()}, {"spread", a.spread()}}},
                {"b", {{"center", b.center()}, {"spread", b.spread()}}},
                {"di", number_or_infinity(r.di)},
                {"relation", to_string(r.relation)},
                {"crisp", r.crisp},
                {"attitude", to_string(cfg.attitude)},
                {"minimization_prefers", min_a ? "a" : "b"},
                {"maximization_prefers", max_a ? "a" : "b"}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "a = " << fuzzy_text(a) << "\nb = " << fuzzy_text(b) << '\n';
  if (r.crisp) {
    out << "crisp comparison: both spreads are zero, centers compared directly\n";
  } else {
    out << "DI(a < b) = " << shortest(r.di) << '\n';
  }
  out << "relation: " << to_string(r.relation) << '\n';
  out << "minimization prefers: " << (min_a ? "a " + fuzzy_text(a) : "b " + fuzzy_text(b)) << '\n';
  out << "maximization prefers: " << (max_a ? "a " + fuzzy_text(a) : "b " + fuzzy_text(b)) << '\n';
  out << "attitude: " << to_string(cfg.attitude) << '\n';
  return kExitOk;
}

int cmd_validate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto pm = load_matrix(cfg.input, err);
  if (!pm) return kExitInputError;
  if (cfg.format == OutputFormat::Machine) {
    out << json{{"valid", true},
                {"rows", pm->rows()},
                {"cols", pm->cols()},
                {"row_labels", pm->row_labels()},
                {"col_labels", pm->col_labels()}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "valid: " << pm->rows() << "x" << pm->cols() << " payoff matrix\n";
  out << "rows:";
  for (const auto& l : pm->row_labels()) out << ' ' << l;
  out << "\ncols:";
  for (const auto& l : pm->col_labels()) out << ' ' << l;
  out << '\n';
  return kExitOk;
}

int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto pm = load_matrix(cfg.input, err);
  if (!pm) return kExitInputError;
  try {
    const auto truth = oracle::oracle_value<double>(pm->centers());
    const PipelineOutcome outcome = run_pipeline(*pm, cfg);
    const bool machine = cfg.format == OutputFormat::Machine;

    if (outcome.not_reducible) {
      if (machine) {
        out << json{{"pipeline", "not-applicable"},
                    {"oracle_value", truth.value},
                    {"oracle_value_fraction", fraction_or_null(truth.value)},
                    {"passed", true}}
                   .dump(2)
            << '\n';
      } else {
        out << "pipeline: not applicable (dominance cannot reduce this game)\n";
        out << "oracle center-game value: " << format_number(truth.value) << " ("
            << shortest(truth.value) << ")\n";
      }
      return kExitOk;
    }

    const oracle::CheckReport report = oracle::oracle_check(*pm, *outcome.solution);
    if (machine) {
      json checks = json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      out << json{{"pipeline", to_string(outcome.solution->kind)},
                  {"pipeline_value", outcome.solution->value.center()},
                  {"oracle_value", report.oracle_value},
                  {"oracle_value_fraction", fraction_or_null(report.oracle_value)},
                  {"checks", checks},
                  {"passed", report.all_passed()}}
                 .dump(2)
          << '\n';
    } else {
      out << "pipeline value center: " << format_number(outcome.solution->value.center()) << '\n';
      out << "oracle value:          " << format_number(report.oracle_value) << '\n';
      for (const auto& c : report.checks) {
        out << (c.passed ? "  PASS  " : "  FAIL  ") << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << '\n';
      }
    }
    if (!report.all_passed()) {
      err << "oracle check failed\n";
      return kExitInputError;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  switch (cfg.command) {
    case Command::Solve: return cmd_solve(cfg, out, err);
    case Command::Reduce: return cmd_reduce(cfg, out, err);
    case Command::Rank: return cmd_rank(cfg, out, err);
    case Command::Validate: return cmd_validate(cfg, out, err);
    case Command::Check: return cmd_check(cfg, out, err);
  }
  return kExitInputError;
}

}  // namespace fuzzygame::cli
