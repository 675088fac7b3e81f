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

// Interval numbers, LR-type fuzzy numbers and the dominance index used to
// rank them. Every type is a small immutable value templated on the scalar,
// so the same code runs on double and on exact rationals in tests.

#ifndef FUZZYGAME_FUZZY_HPP
#define FUZZYGAME_FUZZY_HPP

#include <limits>
#include <ostream>
#include <string>

#include "fuzzygame/errors.hpp"

namespace fuzzygame {

namespace detail {

template <typename Scalar>
bool is_nan(const Scalar& v) {
  return !(v == v);
}

template <typename Scalar>
Scalar positive_infinity() {
  if constexpr (std::numeric_limits<Scalar>::has_infinity) {
    return std::numeric_limits<Scalar>::infinity();
  } else {
    // Exact types have no infinity; callers only test the sign and the >= 1
    // threshold, which a large finite value satisfies.
    return Scalar(std::numeric_limits<long long>::max());
  }
}

}  // namespace detail

/// Closed real interval [lo, hi], also viewed as <midpoint, halfwidth>.
template <typename Scalar>
class Interval {
 public:
  Interval() = default;
  Interval(Scalar lo, Scalar hi) : lo_(lo), hi_(hi) {
    if (detail::is_nan(lo) || detail::is_nan(hi) || lo > hi) {
      throw ValidationError("interval endpoints out of order");
    }
  }

  static Interval from_midpoint(Scalar midpoint, Scalar halfwidth) {
    if (halfwidth < Scalar(0)) {
      throw ValidationError("interval halfwidth must be nonnegative");
    }
    return Interval(midpoint - halfwidth, midpoint + halfwidth);
  }

  const Scalar& lo() const { return lo_; }
  const Scalar& hi() const { return hi_; }
  Scalar midpoint() const { return (lo_ + hi_) / Scalar(2); }
  Scalar halfwidth() const { return (hi_ - lo_) / Scalar(2); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Scalar lo_{0};
  Scalar hi_{0};
};

template <typename Scalar>
Interval<Scalar> operator+(const Interval<Scalar>& i, const Interval<Scalar>& j) {
  return Interval<Scalar>(i.lo() + j.lo(), i.hi() + j.hi());
}

/// Fuzzy number with independent left and right spreads around a peak.
template <typename Scalar>
class LRTriple {
 public:
  LRTriple() = default;
  LRTriple(Scalar left, Scalar peak, Scalar right)
      : left_(left), peak_(peak), right_(right) {
    if (detail::is_nan(left) || detail::is_nan(peak) || detail::is_nan(right) ||
        left < Scalar(0) || right < Scalar(0)) {
      throw ValidationError("LR spreads must be nonnegative");
    }
  }

  const Scalar& left() const { return left_; }
  const Scalar& peak() const { return peak_; }
  const Scalar& right() const { return right_; }

  friend bool operator==(const LRTriple&, const LRTriple&) = default;

 private:
  Scalar left_{0};
  Scalar peak_{0};
  Scalar right_{0};
};

/// Symmetric LR-type trapezoidal fuzzy number <center, spread>.
template <typename Scalar>
class FuzzyNum {
 public:
  using scalar_type = Scalar;

  FuzzyNum() = default;
  FuzzyNum(Scalar center, Scalar spread) : center_(center), spread_(spread) {
    if (detail::is_nan(center) || detail::is_nan(spread) || spread < Scalar(0)) {
      throw ValidationError("fuzzy spread must be nonnegative");
    }
  }

  const Scalar& center() const { return center_; }
  const Scalar& spread() const { return spread_; }

  LRTriple<Scalar> as_lr_triple() const { return {spread_, center_, spread_}; }
  Interval<Scalar> support() const {
    return Interval<Scalar>(center_ - spread_, center_ + spread_);
  }

  friend bool operator==(const FuzzyNum&, const FuzzyNum&) = default;

 private:
  Scalar center_{0};
  Scalar spread_{0};
};

template <typename Scalar>
FuzzyNum<Scalar> operator+(const FuzzyNum<Scalar>& a, const FuzzyNum<Scalar>& b) {
  return {a.center() + b.center(), a.spread() + b.spread()};
}

/// Role swap: the payoff flips sign, the imprecision does not.
template <typename Scalar>
FuzzyNum<Scalar> operator-(const FuzzyNum<Scalar>& a) {
  return {-a.center(), a.spread()};
}

/// weight*a + (1-weight)*b, applied to centers and spreads alike.
template <typename Scalar>
FuzzyNum<Scalar> blend(const FuzzyNum<Scalar>& a, const FuzzyNum<Scalar>& b,
                       Scalar weight) {
  if (detail::is_nan(weight) || weight < Scalar(0) || weight > Scalar(1)) {
    throw ValidationError("blend weight must lie in [0, 1]");
  }
  const Scalar rest = Scalar(1) - weight;
  return {weight * a.center() + rest * b.center(),
          weight * a.spread() + rest * b.spread()};
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const FuzzyNum<Scalar>& f) {
  return os << '<' << f.center() << ", " << f.spread() << '>';
}

template <typename Scalar>
struct TrapezoidMF {
  Scalar a{0};
  Scalar b{0};
  Scalar c{0};
  Scalar d{0};

  void validate() const {
    if (!(a <= b && b <= c && c <= d)) {
      throw ValidationError("trapezoid parameters must satisfy a <= b <= c <= d");
    }
  }

  friend bool operator==(const TrapezoidMF&, const TrapezoidMF&) = default;
};

template <typename Scalar>
Scalar trapezoid_eval(const Scalar& x, const TrapezoidMF<Scalar>& mf) {
  mf.validate();
  if (x < mf.a || x > mf.d) return Scalar(0);
  if (x >= mf.b && x <= mf.c) return Scalar(1);
  if (x < mf.b) return (x - mf.a) / (mf.b - mf.a);
  return (mf.d - x) / (mf.d - mf.c);
}

/// Trapezoid with support [m-w, m+w] and plateau [m-p*w, m+p*w].
template <typename Scalar>
TrapezoidMF<Scalar> fuzzy_to_membership(const FuzzyNum<Scalar>& f,
                                        Scalar plateau_fraction = Scalar(1) / Scalar(2)) {
  if (detail::is_nan(plateau_fraction) || plateau_fraction < Scalar(0) ||
      plateau_fraction > Scalar(1)) {
    throw ValidationError("plateau fraction must lie in [0, 1]");
  }
  const Scalar& m = f.center();
  const Scalar& w = f.spread();
  return {m - w, m - plateau_fraction * w, m + plateau_fraction * w, m + w};
}

/// Dominance index of "i < j": midpoint gap over summed halfwidths.
template <typename Scalar>
Scalar di_interval(const Interval<Scalar>& i, const Interval<Scalar>& j) {
  const Scalar width = i.halfwidth() + j.halfwidth();
  if (width == Scalar(0)) {
    throw DegenerateComparison("dominance index undefined for two crisp intervals");
  }
  return (j.midpoint() - i.midpoint()) / width;
}

/// Dominance index of "a < b": peak gap over the facing spreads. Positive
/// means a is the smaller number; >= 1 means it is certainly smaller.
template <typename Scalar>
Scalar di_fuzzy(const LRTriple<Scalar>& a, const LRTriple<Scalar>& b) {
  const Scalar facing = a.right() + b.left();
  if (facing == Scalar(0)) {
    throw DegenerateComparison("dominance index undefined for crisp peaks");
  }
  return (b.peak() - a.peak()) / facing;
}

template <typename Scalar>
Scalar di_fuzzy(const FuzzyNum<Scalar>& a, const FuzzyNum<Scalar>& b) {
  return di_fuzzy(a.as_lr_triple(), b.as_lr_triple());
}

/// di_fuzzy with the crisp case folded in as +-infinity (or 0 on equal peaks).
template <typename Scalar>
Scalar di_or_crisp_limit(const FuzzyNum<Scalar>& a, const FuzzyNum<Scalar>& b) {
  if (a.spread() + b.spread() != Scalar(0)) return di_fuzzy(a, b);
  if (a.center() < b.center()) return detail::positive_infinity<Scalar>();
  if (a.center() > b.center()) return -detail::positive_infinity<Scalar>();
  return Scalar(0);
}

enum class Relation {
  TotallyLess,
  PartiallyLess,
  NonComparable,
  PartiallyGreater,
  TotallyGreater,
};

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::TotallyLess: return "TotallyLess";
    case Relation::PartiallyLess: return "PartiallyLess";
    case Relation::NonComparable: return "NonComparable";
    case Relation::PartiallyGreater: return "PartiallyGreater";
    case Relation::TotallyGreater: return "TotallyGreater";
  }
  return "?";
}

template <typename Scalar>
struct Ranking {
  Relation relation{Relation::NonComparable};
  Scalar di{0};
  // Both facing spreads were zero; di is the crisp limit, not a ratio.
  bool crisp{false};
};

template <typename Scalar>
Relation classify_di(const Scalar& di) {
  if (di >= Scalar(1)) return Relation::TotallyLess;
  if (di > Scalar(0)) return Relation::PartiallyLess;
  if (di == Scalar(0)) return Relation::NonComparable;
  if (di > Scalar(-1)) return Relation::PartiallyGreater;
  return Relation::TotallyGreater;
}

template <typename Scalar>
Ranking<Scalar> rank(const LRTriple<Scalar>& a, const LRTriple<Scalar>& b) {
  Ranking<Scalar> out;
  if (a.right() + b.left() == Scalar(0)) {
    out.crisp = true;
    if (a.peak() < b.peak()) {
      out.di = detail::positive_infinity<Scalar>();
    } else if (a.peak() > b.peak()) {
      out.di = -detail::positive_infinity<Scalar>();
    }
  } else {
    out.di = di_fuzzy(a, b);
  }
  out.relation = classify_di(out.di);
  return out;
}

template <typename Scalar>
Ranking<Scalar> rank(const FuzzyNum<Scalar>& a, const FuzzyNum<Scalar>& b) {
  return rank(a.as_lr_triple(), b.as_lr_triple());
}

enum class Attitude { Pessimistic, Optimistic };

inline const char* to_string(Attitude a) {
  return a == Attitude::Pessimistic ? "pessimistic" : "optimistic";
}

enum class Choice { A, B };

namespace detail {

// Equal centers: a pessimist takes the narrower support, an optimist the wider.
template <typename Scalar>
Choice break_center_tie(const FuzzyNum<Scalar>& a, const FuzzyNum<Scalar>& b,
                        Attitude attitude) {
  if (a.spread() == b.spread()) return Choice::A;
  const bool a_narrower = a.spread() < b.spread();
  if (attitude == Attitude::Pessimistic) return a_narrower ? Choice::A : Choice::B;
  return a_narrower ? Choice::B : Choice::A;
}

}  // namespace detail

/// Which of two payoffs a minimizer picks.
template <typename Scalar>
Choice prefer_min(const FuzzyNum<Scalar>& a, const FuzzyNum<Scalar>& b,
                  Attitude attitude) {
  if (a.center() != b.center()) return a.center() < b.center() ? Choice::A : Choice::B;
  return detail::break_center_tie(a, b, attitude);
}

/// Which of two payoffs a maximizer picks.
template <typename Scalar>
Choice prefer_max(const FuzzyNum<Scalar>& a, const FuzzyNum<Scalar>& b,
                  Attitude attitude) {
  if (a.center() != b.center()) return a.center() > b.center() ? Choice::A : Choice::B;
  return detail::break_center_tie(a, b, attitude);
}

using Fuzzy = FuzzyNum<double>;

}  // namespace fuzzygame

#endif  // FUZZYGAME_FUZZY_HPP
