#include "upp/sequence.hpp"

#include "doctest.h"

using namespace upp;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }
ExtValue v(long n, long d = 1) { return ExtValue(Rational(n, d)); }

// Identity on [0, 4[ with a breakpoint at 2.
Sequence identity4() {
  return Sequence({Point{r(0), v(0)}, Segment(r(0), r(2), v(0), v(2)),
                   Point{r(2), v(2)}, Segment(r(2), r(4), v(2), v(4))});
}

}  // namespace

TEST_CASE("alternation and chaining are enforced") {
  CHECK_THROWS_AS(Sequence({Point{r(0), v(0)}, Point{r(1), v(1)}}),
                  InvariantError);
  CHECK_THROWS_AS(Sequence({Point{r(0), v(0)},
                            Segment(r(1), r(2), v(0), v(0))}),
                  InvariantError);
  CHECK_THROWS_AS(Sequence(std::vector<Element>{}), InvariantError);
  CHECK_THROWS_AS(Sequence({Segment(r(0), r(1), v(0), v(0))}), InvariantError);
  CHECK_THROWS_AS(Segment(r(2), r(2), v(0), v(0)), InvariantError);
  CHECK_THROWS_AS(Segment(r(0), r(1), v(0), ExtValue::plusInfinity()),
                  InvariantError);
}

TEST_CASE("evaluation and one-sided limits") {
  const Sequence s({Point{r(0), v(1)}, Segment(r(0), r(1), v(1), v(1)),
                    Point{r(1), v(2)}, Segment(r(1), r(2), v(3), v(4))});
  CHECK(s.valueAt(r(0)) == v(1));
  CHECK(s.valueAt(r(1, 2)) == v(1));
  CHECK(s.valueAt(r(1)) == v(2));
  CHECK(s.valueAt(r(3, 2)) == v(7, 2));
  CHECK(s.leftLimitAt(r(1)) == v(1));
  CHECK(s.rightLimitAt(r(1)) == v(3));
  CHECK(s.leftLimitAt(r(2)) == v(4));
  CHECK(s.rightLimitAt(r(0)) == v(1));
  CHECK_THROWS_AS(s.valueAt(r(2)), PreconditionError);   // right-open
  CHECK_THROWS_AS(s.leftLimitAt(r(0)), PreconditionError);
  CHECK_THROWS_AS(s.rightLimitAt(r(2)), PreconditionError);
}

TEST_CASE("restrict splits segments and closes ends") {
  const Sequence s = identity4();
  const Sequence mid = s.restrict(r(1), r(3), true);
  CHECK(mid.domainStart() == r(1));
  CHECK(mid.domainEnd() == r(3));
  CHECK(mid.domainEndIncluded());
  CHECK(mid.valueAt(r(1)) == v(1));
  CHECK(mid.valueAt(r(3)) == v(3));
  CHECK(mid.valueAt(r(2)) == v(2));

  const Sequence open = s.restrict(r(0), r(2), false);
  CHECK_FALSE(open.domainEndIncluded());
  CHECK(open.size() == 2);

  const Sequence single = s.restrict(r(3), r(3), true);
  CHECK(single.size() == 1);
  CHECK(single.valueAt(r(3)) == v(3));

  CHECK_THROWS_AS(s.restrict(r(1), r(5), false), PreconditionError);
  CHECK_THROWS_AS(s.restrict(r(0), r(4), true), PreconditionError);
}

TEST_CASE("restrict preserves one-sided limits at interior jumps") {
  const Sequence s({Point{r(0), v(0)}, Segment(r(0), r(2), v(1), v(1)),
                    Point{r(2), v(5)}, Segment(r(2), r(4), v(6), v(8))});
  const Sequence w = s.restrict(r(1), r(3), true);
  CHECK(w.valueAt(r(1)) == v(1));
  CHECK(w.rightLimitAt(r(2)) == v(6));
  CHECK(w.leftLimitAt(r(2)) == v(1));
  CHECK(w.valueAt(r(3)) == v(7));
}

TEST_CASE("shift moves domain and values") {
  const Sequence s = identity4().shifted(r(10), r(-3));
  CHECK(s.domainStart() == r(10));
  CHECK(s.domainEnd() == r(14));
  CHECK(s.valueAt(r(12)) == v(-1));
}

TEST_CASE("collinear merge produces the canonical form") {
  const Sequence split({Point{r(0), v(0)}, Segment(r(0), r(2), v(0), v(2)),
                        Point{r(2), v(2)}, Segment(r(2), r(4), v(2), v(4))});
  const Sequence merged = mergeCollinear(split);
  CHECK(merged.size() == 2);
  CHECK(merged == Sequence({Point{r(0), v(0)},
                            Segment(r(0), r(4), v(0), v(4))}));

  // A jump or a slope change blocks the merge.
  const Sequence jump({Point{r(0), v(0)}, Segment(r(0), r(2), v(0), v(2)),
                       Point{r(2), v(3)}, Segment(r(2), r(4), v(3), v(5))});
  CHECK(mergeCollinear(jump).size() == 4);

  // Infinite plateaus merge like constant segments.
  const ExtValue inf = ExtValue::plusInfinity();
  const Sequence plateau({Point{r(0), v(0)}, Segment(r(0), r(1), inf, inf),
                          Point{r(1), inf}, Segment(r(1), r(2), inf, inf)});
  CHECK(mergeCollinear(plateau).size() == 2);
}

TEST_CASE("monotonicity checks") {
  CHECK(identity4().isNonDecreasing());
  CHECK(identity4().isNonNegative());
  const Sequence dip({Point{r(0), v(2)}, Segment(r(0), r(1), v(1), v(3))});
  CHECK_FALSE(dip.isNonDecreasing());
  const Sequence neg({Point{r(0), v(-1)}, Segment(r(0), r(1), v(0), v(1))});
  CHECK_FALSE(neg.isNonNegative());
}

TEST_CASE("cursor answers monotone queries like the sequence") {
  const Sequence s({Point{r(0), v(1)}, Segment(r(0), r(1), v(1), v(1)),
                    Point{r(1), v(2)}, Segment(r(1), r(3), v(3), v(5))});
  SequenceCursor cur(s);
  CHECK(cur.valueAt(r(0)) == v(1));
  CHECK(cur.valueAt(r(1, 2)) == v(1));
  CHECK(cur.valueAt(r(1)) == v(2));
  CHECK(cur.valueAt(r(2)) == v(4));
  SequenceCursor lims(s);
  CHECK(lims.rightLimitAt(r(0)) == v(1));
  CHECK(lims.isConstantRightOf(r(0)));
  CHECK(lims.rightLimitAt(r(1)) == v(3));
  CHECK_FALSE(lims.isConstantRightOf(r(1)));
  CHECK(lims.leftLimitAt(r(2)) == v(4));
  CHECK(lims.leftLimitAt(r(3)) == v(5));
}
