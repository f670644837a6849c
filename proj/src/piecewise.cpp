#include "x1/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace x1 {

namespace {
const Rational kHalf(1, 2);
}

PiecewiseLin::PiecewiseLin() : ts_{Rational(0), kHalf}, vs_{Rational(0), Rational(0)} {}

PiecewiseLin::PiecewiseLin(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : ts_(std::move(breakpoints)), vs_(std::move(values)) {
  if (ts_.size() < 2 || ts_.size() != vs_.size())
    throw std::invalid_argument("PiecewiseLin: need matching breakpoints/values, at least two");
  if (ts_.front() != 0 || ts_.back() != kHalf)
    throw std::invalid_argument("PiecewiseLin: domain must be [0, 1/2]");
  for (size_t i = 1; i < ts_.size(); ++i)
    if (!(ts_[i - 1] < ts_[i]))
      throw std::invalid_argument("PiecewiseLin: breakpoints not strictly increasing");
}

PiecewiseLin PiecewiseLin::linear(const Rational& slope, const Rational& intercept) {
  return PiecewiseLin({Rational(0), kHalf}, {intercept, slope * kHalf + intercept});
}

PiecewiseLin PiecewiseLin::min_with(const Rational& cap) {
  if (cap < 0 || cap > kHalf)
    throw std::invalid_argument("PiecewiseLin::min_with: cap outside [0, 1/2]");
  if (cap == 0) return PiecewiseLin();  // min(t, 0) = 0 on [0, 1/2]
  if (cap == kHalf) return linear(Rational(1), Rational(0));
  return PiecewiseLin({Rational(0), cap, kHalf}, {Rational(0), cap, cap});
}

Rational PiecewiseLin::eval(const Rational& t) const {
  if (t < 0 || t > kHalf)
    throw std::domain_error("PiecewiseLin::eval: t=" + to_string(t) + " outside [0, 1/2]");
  auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
  size_t i = (it == ts_.end()) ? ts_.size() - 2 : (it - ts_.begin()) - 1;
  const Rational& t0 = ts_[i];
  const Rational& t1 = ts_[i + 1];
  return vs_[i] + (vs_[i + 1] - vs_[i]) * (t - t0) / (t1 - t0);
}

PiecewiseLin PiecewiseLin::operator+(const PiecewiseLin& other) const {
  std::vector<Rational> ts;
  std::set_union(ts_.begin(), ts_.end(), other.ts_.begin(), other.ts_.end(),
                 std::back_inserter(ts));
  std::vector<Rational> vs;
  vs.reserve(ts.size());
  for (const Rational& t : ts) vs.push_back(eval(t) + other.eval(t));
  return PiecewiseLin(std::move(ts), std::move(vs));
}

PiecewiseLin PiecewiseLin::operator-(const PiecewiseLin& other) const {
  return *this + other.scaled(Rational(-1));
}

PiecewiseLin PiecewiseLin::scaled(const Rational& factor) const {
  std::vector<Rational> vs;
  vs.reserve(vs_.size());
  for (const Rational& v : vs_) vs.push_back(v * factor);
  return PiecewiseLin(ts_, std::move(vs));
}

PiecewiseLin PiecewiseLin::pos_part() const {
  std::vector<Rational> ts, vs;
  ts.push_back(ts_[0]);
  vs.push_back(std::max(vs_[0], Rational(0)));
  for (size_t i = 0; i + 1 < ts_.size(); ++i) {
    const Rational &v0 = vs_[i], &v1 = vs_[i + 1];
    bool crosses = (v0 < 0 && v1 > 0) || (v0 > 0 && v1 < 0);
    if (crosses) {
      Rational tz = ts_[i] + (ts_[i + 1] - ts_[i]) * (-v0) / (v1 - v0);
      ts.push_back(tz);
      vs.push_back(Rational(0));
    }
    ts.push_back(ts_[i + 1]);
    vs.push_back(std::max(v1, Rational(0)));
  }
  return PiecewiseLin(std::move(ts), std::move(vs));
}

Rational PiecewiseLin::integral() const {
  Rational total(0);
  for (size_t i = 0; i + 1 < ts_.size(); ++i)
    total += (vs_[i] + vs_[i + 1]) * (ts_[i + 1] - ts_[i]) / 2;
  return total;
}

bool PiecewiseLin::operator==(const PiecewiseLin& other) const {
  std::vector<Rational> ts;
  std::set_union(ts_.begin(), ts_.end(), other.ts_.begin(), other.ts_.end(),
                 std::back_inserter(ts));
  std::vector<Rational> grid;
  for (size_t i = 0; i < ts.size(); ++i) {
    grid.push_back(ts[i]);
    if (i + 1 < ts.size()) grid.push_back((ts[i] + ts[i + 1]) / 2);
  }
  for (const Rational& t : grid)
    if (eval(t) != other.eval(t)) return false;
  return true;
}

std::vector<PiecewiseLin::Segment> PiecewiseLin::segments() const {
  std::vector<Segment> out;
  for (size_t i = 0; i + 1 < ts_.size(); ++i) {
    Segment s;
    s.left = ts_[i];
    s.right = ts_[i + 1];
    s.slope = (vs_[i + 1] - vs_[i]) / (ts_[i + 1] - ts_[i]);
    s.intercept = vs_[i] - s.slope * ts_[i];
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace x1
