#include "upp/curve.hpp"

#include "doctest.h"
#include "upp/nc_ops.hpp"

using namespace upp;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }
ExtValue v(long n, long d = 1) { return ExtValue(Rational(n, d)); }

// Identity with a deliberately awkward representation: T = 1/2, d = 1.
Curve awkwardIdentity() {
  return Curve(Sequence({Point{r(0), v(0)},
                         Segment(r(0), r(3, 2), v(0), v(3, 2))}),
               r(1, 2), r(1), r(1));
}

}  // namespace

TEST_CASE("curve construction validates the representation") {
  CHECK_THROWS_AS(Curve(Sequence({Point{r(0), v(0)},
                                  Segment(r(0), r(1), v(0), v(1))}),
                        r(0), r(2), r(1)),
                  InvariantError);  // base does not cover [0, T+d[
  CHECK_THROWS_AS(Curve(Sequence({Point{r(0), v(0)},
                                  Segment(r(0), r(1), v(0), v(1))}),
                        r(0), r(0), r(1)),
                  InvariantError);  // d = 0
}

TEST_CASE("evaluation through the pseudo-periodic extension") {
  const Curve f = awkwardIdentity();
  CHECK(f.valueAt(r(7, 2)) == v(7, 2));
  CHECK(f.valueAt(r(100)) == v(100));
  CHECK(f.leftLimitAt(r(3, 2)) == v(3, 2));
  CHECK(f.rightLimitAt(r(3, 2)) == v(3, 2));
  CHECK_THROWS_AS(f.valueAt(r(-1)), PreconditionError);

  // Rate-latency beta_{2,1}: value 4 at t = 3.
  const Curve beta = rateLatency(r(2), r(1));
  CHECK(beta.valueAt(r(1)) == v(0));
  CHECK(beta.valueAt(r(3)) == v(4));
  CHECK(beta.valueAt(r(1, 2)) == v(0));

  // Staircase ceil(t): left limit 2, value 2, right limit 3 at t = 2.
  const Curve nu = stair(r(1), r(1));
  CHECK(nu.leftLimitAt(r(2)) == v(2));
  CHECK(nu.valueAt(r(2)) == v(2));
  CHECK(nu.rightLimitAt(r(2)) == v(3));
}

TEST_CASE("UPP property holds exactly on a grid") {
  const Curve nu = stair(r(1), r(1));
  const Curve gamma = leakyBucket(r(2), r(1, 3));
  for (const Curve& f : {nu, gamma, awkwardIdentity()}) {
    const Rational T = f.pseudoPeriodStart();
    const Rational d = f.pseudoPeriodLength();
    const Rational c = f.pseudoPeriodHeight();
    for (int i = 0; i < 16; ++i) {
      const Rational t = T + d * r(i, 16);
      for (int k = 1; k <= 5; ++k)
        CHECK(f.valueAt(t + r(k) * d) == f.valueAt(t) + ExtValue(r(k) * c));
    }
  }
}

TEST_CASE("cut materializes repetitions and agrees with evaluation") {
  const Curve nu = stair(r(1), r(1));
  const Sequence s = nu.cut(r(0), r(3), false);
  // 3 points and 3 constant segments, values 0..3.
  CHECK(s.size() == 6);
  CHECK(s.valueAt(r(0)) == v(0));
  CHECK(s.valueAt(r(5, 2)) == v(3));

  // Identity cut of the base window is the base itself.
  const Curve id = awkwardIdentity();
  CHECK(id.cut(r(0), r(3, 2), false) == id.baseSequence());

  // Affine restriction over several periods.
  const Curve b10 = rateLatency(r(1), r(0));
  const Sequence w = b10.cut(r(2), r(5), true);
  CHECK(w.domainStart() == r(2));
  CHECK(w.domainEnd() == r(5));
  CHECK(w.valueAt(r(2)) == v(2));
  CHECK(w.valueAt(r(5)) == v(5));

  // Cuts agree with the curve evaluators at breakpoints and midpoints.
  const Sequence deep = nu.cut(r(3, 2), r(13, 2), true);
  for (const Element& e : deep.elements()) {
    if (isPoint(e)) {
      CHECK(asPoint(e).value == nu.valueAt(asPoint(e).time));
    } else {
      const Segment& seg = asSegment(e);
      CHECK(seg.rightLimitAtStart == nu.rightLimitAt(seg.start));
      CHECK(seg.leftLimitAtEnd == nu.leftLimitAt(seg.end));
      const Rational mid = (seg.start + seg.end) / r(2);
      CHECK(seg.valueAt(mid) == nu.valueAt(mid));
    }
  }
}

TEST_CASE("classification of standard shapes") {
  const Classification beta = classify(rateLatency(r(2), r(1)));
  CHECK(beta.nonDecreasing);
  CHECK(beta.nonNegative);
  CHECK(beta.leftContinuous);
  CHECK(beta.rightContinuous);
  CHECK_FALSE(beta.ultimatelyConstant);
  CHECK_FALSE(beta.weaklyUltimatelyInfinite);
  REQUIRE(beta.ua.has_value());
  CHECK(beta.ua->affineStart == r(1));
  CHECK(beta.ua->slope == r(2));

  const Classification delay = classify(delayElement(r(3)));
  CHECK(delay.weaklyUltimatelyInfinite);
  CHECK(delay.nonDecreasing);
  CHECK(*delay.infinityStart == r(3));
  CHECK_FALSE(delay.ua.has_value());

  const Classification nu = classify(stair(r(1), r(1)));
  CHECK(nu.nonDecreasing);
  CHECK(nu.rightContinuous);
  CHECK_FALSE(nu.leftContinuous);  // jumps right after each integer
  CHECK_FALSE(nu.ua.has_value());
  CHECK_FALSE(nu.ultimatelyConstant);

  const Classification con = classify(constant(r(5)));
  CHECK(con.ultimatelyConstant);
  REQUIRE(con.constantTail.has_value());
  CHECK(con.constantTail->value == r(5));
  CHECK(con.constantTail->start == r(0));
  CHECK(con.constantTail->attainedAtStart);
  REQUIRE(con.ua.has_value());
  CHECK(con.ua->slope == r(0));
}

TEST_CASE("a finite point at the pseudo-period start blocks wUI") {
  // Infinite plateau but the pattern starts on the finite point at 1: the
  // extension recreates that finite value at every seam.
  const ExtValue inf = ExtValue::plusInfinity();
  const Curve notWui(Sequence({Point{r(0), v(0)},
                               Segment(r(0), r(1), v(0), v(0)),
                               Point{r(1), v(0)},
                               Segment(r(1), r(2), inf, inf)}),
                     r(1), r(1), r(0));
  CHECK_FALSE(classify(notWui).weaklyUltimatelyInfinite);
  CHECK(notWui.valueAt(r(2)) == v(0));  // the recurring finite seam value
}

TEST_CASE("minimize merges collinear pieces and restores the period start") {
  // Identity written with three pieces and an inflated T.
  const Curve messy(Sequence({Point{r(0), v(0)},
                              Segment(r(0), r(1), v(0), v(1)),
                              Point{r(1), v(1)},
                              Segment(r(1), r(2), v(1), v(2)),
                              Point{r(2), v(2)},
                              Segment(r(2), r(3), v(2), v(3))}),
                    r(2), r(1), r(1));
  const Curve m = minimize(messy);
  CHECK(m.pseudoPeriodStart() == r(0));
  CHECK(m.baseSequence().size() == 2);
  CHECK(equivalent(m, messy));

  // Already minimal: unchanged.
  const Curve nu = stair(r(1), r(1));
  CHECK(minimize(nu) == nu);
}

TEST_CASE("equivalence is encoding-independent pointwise equality") {
  const Curve nu = stair(r(1), r(1));
  // Same staircase with a doubled period.
  const Curve nu2(Sequence({Point{r(0), v(0)},
                            Segment(r(0), r(1), v(1), v(1)),
                            Point{r(1), v(1)},
                            Segment(r(1), r(2), v(2), v(2))}),
                  r(0), r(2), r(2));
  CHECK(equivalent(nu, nu2));
  CHECK(equivalent(nu, minimize(nu)));
  CHECK_FALSE(equivalent(nu, rateLatency(r(1), r(0))));
  // Differ only in one point value.
  const Curve almost(Sequence({Point{r(0), v(1, 2)},
                               Segment(r(0), r(1), v(1), v(1))}),
                     r(0), r(1), r(1));
  CHECK_FALSE(equivalent(nu, almost));
}

TEST_CASE("pointwise sum of curves") {
  const Curve sum = addCurves(stair(r(1), r(1)), rateLatency(r(1), r(0)));
  CHECK(sum.valueAt(r(0)) == v(0));
  CHECK(sum.valueAt(r(1, 2)) == v(3, 2));
  CHECK(sum.valueAt(r(2)) == v(4));
  CHECK(sum.rightLimitAt(r(2)) == v(5));
  const Rational d = sum.pseudoPeriodLength();
  CHECK(sum.valueAt(r(3, 4) + d) ==
        sum.valueAt(r(3, 4)) + ExtValue(sum.pseudoPeriodHeight()));
}
