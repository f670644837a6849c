#ifndef X1_PIECEWISE_HPP
#define X1_PIECEWISE_HPP

#include <utility>
#include <vector>

#include "x1/arith.hpp"

namespace x1 {

/// Continuous piecewise-linear function on [0, 1/2] with rational
/// breakpoints, stored as breakpoint/value pairs (0 = t_0 < ... < t_m = 1/2).
/// Continuity is forced by the representation.  Breakpoints introduced by
/// addition are kept even when redundant; equality evaluates both sides on
/// the union of breakpoints and segment midpoints.
class PiecewiseLin {
 public:
  /// The zero function.
  PiecewiseLin();

  /// From strictly increasing breakpoints (first 0, last 1/2) and values.
  PiecewiseLin(std::vector<Rational> breakpoints, std::vector<Rational> values);

  /// t |-> slope*t + intercept.
  static PiecewiseLin linear(const Rational& slope, const Rational& intercept);

  /// t |-> min(t, cap) for cap in [0, 1/2].
  static PiecewiseLin min_with(const Rational& cap);

  const std::vector<Rational>& breakpoints() const { return ts_; }
  const std::vector<Rational>& values() const { return vs_; }

  Rational eval(const Rational& t) const;

  PiecewiseLin operator+(const PiecewiseLin& other) const;
  PiecewiseLin operator-(const PiecewiseLin& other) const;
  PiecewiseLin scaled(const Rational& factor) const;

  /// Pointwise max(0, f); inserts exact zero-crossing breakpoints.
  PiecewiseLin pos_part() const;

  /// Definite integral over [0, 1/2], exact.
  Rational integral() const;

  bool operator==(const PiecewiseLin& other) const;
  bool operator!=(const PiecewiseLin& other) const { return !(*this == other); }

  /// Segments as (t_left, t_right, slope, intercept) with f(t) = slope*t +
  /// intercept on [t_left, t_right].
  struct Segment {
    Rational left, right, slope, intercept;
  };
  std::vector<Segment> segments() const;

 private:
  std::vector<Rational> ts_;
  std::vector<Rational> vs_;
};

}  // namespace x1

#endif
