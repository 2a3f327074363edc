#pragma once

#include <variant>
#include <vector>

#include "upp/rational.hpp"

namespace upp {

// One abscissa/value pair: f(time) = value.
struct Point {
  Rational time;
  ExtValue value;

  friend bool operator==(const Point&, const Point&) = default;
};

// Describes f on the open interval ]start, end[ by its one-sided limits at
// the ends. The interior is affine between the two limits; infinite plateaus
// carry the same infinity on both sides (mixing a finite and an infinite
// limit in one segment is rejected).
struct Segment {
  Rational start;
  Rational end;
  ExtValue rightLimitAtStart;  // f(start^+)
  ExtValue leftLimitAtEnd;     // f(end^-)

  Segment(Rational s, Rational e, ExtValue rls, ExtValue lle);

  bool isConstant() const { return rightLimitAtStart == leftLimitAtEnd; }
  bool isFinite() const { return rightLimitAtStart.isFinite(); }
  Rational slope() const;
  ExtValue valueAt(const Rational& x) const;  // x in ]start, end[

  friend bool operator==(const Segment&, const Segment&) = default;
};

using Element = std::variant<Point, Segment>;

bool isPoint(const Element& e);
const Point& asPoint(const Element& e);
const Segment& asSegment(const Element& e);
Rational elementStart(const Element& e);
Rational elementEnd(const Element& e);

// An alternating list of points and open segments describing a function on
// [domainStart, domainEnd[ or [domainStart, domainEnd]. The first element is
// always a point; consecutive elements chain without gaps; the last element
// is a point exactly when the right end is included.
class Sequence {
 public:
  explicit Sequence(std::vector<Element> elements);

  const std::vector<Element>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  Rational domainStart() const;
  Rational domainEnd() const;
  bool domainEndIncluded() const;

  ExtValue valueAt(const Rational& x) const;
  ExtValue leftLimitAt(const Rational& x) const;   // x in ]start, end]
  ExtValue rightLimitAt(const Rational& x) const;  // x in [start, end[

  // Sub-interval [lo, hi[ or [lo, hi], splitting boundary segments and
  // inserting the boundary points. Requires the target interval to be
  // contained in the domain (hi == domainEnd with includeHi requires the
  // domain end to be included too). lo == hi with includeHi yields a single
  // point.
  Sequence restrict(const Rational& lo, const Rational& hi,
                    bool includeHi) const;

  // Same content shifted right by dt and up by dv.
  Sequence shifted(const Rational& dt, const Rational& dv) const;

  bool isNonDecreasing() const;
  bool isNonNegative() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::size_t indexFor(const Rational& x) const;
  std::vector<Element> elems_;
};

// Merges adjacent collinear pieces (segment + point + segment with matching
// slopes and no discontinuity at the point). The result describes the same
// function on the same domain; for a fixed domain this canonical form is
// unique, which is what makes exact sequence comparison meaningful.
Sequence mergeCollinear(const Sequence& s);

// Forward-only evaluator for monotonically non-decreasing query positions.
// Amortizes a full scan over any number of queries, which keeps the
// by-sequence operators linear.
class SequenceCursor {
 public:
  explicit SequenceCursor(const Sequence& s) : seq_(s) {}

  ExtValue valueAt(const Rational& x);
  ExtValue leftLimitAt(const Rational& x);
  ExtValue rightLimitAt(const Rational& x);

  // Whether the function is constant on a right (resp. left) neighborhood of
  // x. False at the domain boundary where no such neighborhood exists.
  bool isConstantRightOf(const Rational& x);
  bool isConstantLeftOf(const Rational& x);

  std::uint64_t advanceCount() const { return advances_; }

 private:
  const Segment* segmentRightOf(const Rational& x);
  const Segment* segmentLeftOf(const Rational& x);
  void advanceTo(const Rational& x);
  const Sequence& seq_;
  std::size_t idx_ = 0;
  std::uint64_t advances_ = 0;
};

}  // namespace upp
