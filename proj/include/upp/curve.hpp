#pragma once

#include <optional>

#include "upp/sequence.hpp"

namespace upp {

// Ultimately affine tail: f(t) = f(affineStart) + slope * (t - affineStart)
// for all t >= affineStart.
struct UaInfo {
  Rational affineStart;
  Rational slope;
};

// Constant tail of an ultimately constant function. attainedAtStart tells
// whether f(start) already equals the plateau value or only f(start^+) does.
struct ConstantTail {
  Rational start;
  Rational value;
  bool attainedAtStart;
};

struct Classification {
  bool nonDecreasing = false;
  bool nonNegative = false;
  bool leftContinuous = false;
  bool rightContinuous = false;
  bool ultimatelyConstant = false;
  bool weaklyUltimatelyInfinite = false;
  std::optional<UaInfo> ua;
  std::optional<ConstantTail> constantTail;  // present iff ultimatelyConstant
  std::optional<Rational> infinityStart;     // present iff weaklyUltimatelyInfinite
};

// A piecewise-affine function on [0, +inf[ that beyond pseudoPeriodStart
// repeats with period pseudoPeriodLength and vertical increment
// pseudoPeriodHeight:
//   f(t + k*d) = f(t) + k*c   for t >= T, k in N0.
// The base sequence describes f exactly on [0, T + d[. Functions with an
// infinite tail are encoded with +inf elements in the base and an arbitrary
// (d, c) = (1, 0) period over that tail.
class Curve {
 public:
  Curve(Sequence base, Rational pseudoPeriodStart, Rational pseudoPeriodLength,
        Rational pseudoPeriodHeight);

  const Sequence& baseSequence() const { return base_; }
  const Rational& pseudoPeriodStart() const { return T_; }
  const Rational& pseudoPeriodLength() const { return d_; }
  const Rational& pseudoPeriodHeight() const { return c_; }

  // Per-period growth c/d.
  Rational growthRate() const { return c_ / d_; }

  ExtValue valueAt(const Rational& t) const;
  ExtValue leftLimitAt(const Rational& t) const;   // t > 0
  ExtValue rightLimitAt(const Rational& t) const;

  // The finite sequence describing f on [lo, hi[ or [lo, hi], materializing
  // pseudo-periodic repetitions as needed. Points appear at every repetition
  // seam that falls inside the window.
  Sequence cut(const Rational& lo, const Rational& hi, bool includeHi) const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Sequence base_;
  Rational T_, d_, c_;
};

Classification classify(const Curve& f);

// A pointwise-equal curve with adjacent collinear base elements merged and,
// when the UPP property already holds from an earlier breakpoint, the
// pseudo-period start moved back to it.
Curve minimize(const Curve& f);

// Exact pointwise equality, decided on [0, max(T_f, T_g) + lcm(d_f, d_g)[
// plus equality of the per-period growth rates. Two UPP functions that agree
// on that window and grow at the same rate agree everywhere: any later point
// reduces by whole multiples of the common hyperperiod into the window.
bool equivalent(const Curve& f, const Curve& g);

// Pointwise sum. Infrastructure for builders that assemble a curve from
// shifted copies (e.g. sums of stair functions).
Curve addCurves(const Curve& a, const Curve& b);

}  // namespace upp
