#include "upp/pseudo_inverse.hpp"

#include <sstream>
#include <vector>

#include "upp/instrumentation.hpp"

namespace upp {

namespace perf {
Counters& counters() {
  thread_local Counters c;
  return c;
}
}  // namespace perf

namespace {

void validateInverseInput(const Sequence& s) {
  if (s.domainStart() != Rational(0))
    throw PreconditionError("pseudo-inverse input must start at 0, starts at " +
                            s.domainStart().str());
  const auto& elems = s.elements();
  ExtValue last = asPoint(elems.front()).value;
  if (!last.isFinite() || last.finite().isNegative())
    throw PreconditionError("pseudo-inverse input must start with a finite "
                            "non-negative value, got " +
                            last.str());
  for (std::size_t i = 1; i < elems.size(); ++i) {
    ExtValue lo, hi;
    if (isPoint(elems[i])) {
      lo = hi = asPoint(elems[i]).value;
    } else {
      lo = asSegment(elems[i]).rightLimitAtStart;
      hi = asSegment(elems[i]).leftLimitAtEnd;
    }
    if (!lo.isFinite() || !hi.isFinite())
      throw PreconditionError(
          "pseudo-inverse input has an infinite value near t=" +
          elementStart(elems[i]).str());
    if (lo < last || hi < lo) {
      std::ostringstream os;
      os << "pseudo-inverse input is not non-decreasing between elements "
         << i - 1 << " and " << i << " (near t=" << elementStart(elems[i])
         << ")";
      throw PreconditionError(os.str());
    }
    last = hi;
  }
}

// Output points live in value space: Point{y, x} states f_inv(y) = x.
Point invPoint(const Rational& y, const Rational& x) {
  return Point{y, ExtValue(x)};
}

Segment invConstant(const Rational& y0, const Rational& y1, const Rational& x) {
  return Segment(y0, y1, ExtValue(x), ExtValue(x));
}

}  // namespace

Sequence lowerPseudoInverseSequence(const Sequence& s) {
  validateInverseInput(s);
  const auto& elems = s.elements();
  const Rational zero(0);
  std::vector<Element> out;

  const Rational f0 = asPoint(elems.front()).value.finite();
  out.push_back(invPoint(zero, zero));
  if (f0 > zero) {
    // inf { x | f(x) >= y } = 0 for every y <= f(0).
    out.push_back(invConstant(zero, f0, zero));
    out.push_back(invPoint(f0, zero));
  }

  for (std::size_t i = 1; i < elems.size(); ++i) {
    ++perf::counters().lowerPseudoInverseVisits;
    if (isPoint(elems[i])) {
      // Point after segment: dispatch on the segment's constancy and on
      // left-continuity at the point.
      const Point& p = asPoint(elems[i]);
      const Segment& seg = asSegment(elems[i - 1]);
      const Rational b2 = seg.leftLimitAtEnd.finite();
      const Rational b3 = p.value.finite();
      if (seg.isConstant()) {
        if (b2 < b3) {  // c1
          out.push_back(invConstant(b2, b3, p.time));
          out.push_back(invPoint(b3, p.time));
        }
        // c2: the plateau already resolved to its left end, nothing to add
      } else {
        if (b2 < b3) {  // c3
          out.push_back(invPoint(b2, p.time));
          out.push_back(invConstant(b2, b3, p.time));
          out.push_back(invPoint(b3, p.time));
        } else {  // c4
          out.push_back(invPoint(b3, p.time));
        }
      }
    } else {
      // Segment after point: dispatch on constancy and on right-continuity
      // at the point.
      const Segment& seg = asSegment(elems[i]);
      const Rational a = asPoint(elems[i - 1]).value.finite();
      const Rational b = seg.rightLimitAtStart.finite();
      const Rational cv = seg.leftLimitAtEnd.finite();
      if (seg.isConstant()) {
        if (a < b) {  // c5
          out.push_back(invConstant(a, b, seg.start));
          out.push_back(invPoint(b, seg.start));
        }
        // c6: nothing to add
      } else {
        if (a < b) {  // c7
          out.push_back(invConstant(a, b, seg.start));
          out.push_back(invPoint(b, seg.start));
          out.push_back(Segment(b, cv, ExtValue(seg.start), ExtValue(seg.end)));
        } else {  // c8
          out.push_back(Segment(b, cv, ExtValue(seg.start), ExtValue(seg.end)));
        }
      }
    }
  }
  // The Sequence constructor re-checks alternation and chaining, so a broken
  // case analysis surfaces here instead of corrupting later stages.
  return Sequence(std::move(out));
}

Sequence upperPseudoInverseSequence(const Sequence& s) {
  validateInverseInput(s);
  const auto& elems = s.elements();
  const Rational zero(0);
  std::vector<Element> out;

  const Rational f0 = asPoint(elems.front()).value.finite();
  if (f0 > zero) {
    // sup over an empty set: f_inv(y) = 0 for y < f(0).
    out.push_back(invPoint(zero, zero));
    out.push_back(invConstant(zero, f0, zero));
  }
  // The point for a value level is deferred until the level is strictly
  // exceeded, so plateaus resolve to their right end.

  for (std::size_t i = 1; i < elems.size(); ++i) {
    ++perf::counters().upperPseudoInverseVisits;
    if (isPoint(elems[i])) {
      const Point& p = asPoint(elems[i]);
      const Segment& seg = asSegment(elems[i - 1]);
      const Rational b2 = seg.leftLimitAtEnd.finite();
      const Rational b3 = p.value.finite();
      if (b2 < b3) {
        // The jump closes the level below it, whether it tops a plateau or a
        // rising segment.
        out.push_back(invPoint(b2, p.time));
        out.push_back(invConstant(b2, b3, p.time));
      }
      // Continuous point: the level stays open across it.
    } else {
      const Segment& seg = asSegment(elems[i]);
      const Rational a = asPoint(elems[i - 1]).value.finite();
      const Rational b = seg.rightLimitAtStart.finite();
      const Rational cv = seg.leftLimitAtEnd.finite();
      if (seg.isConstant()) {
        if (a < b) {
          out.push_back(invPoint(a, seg.start));
          out.push_back(invConstant(a, b, seg.start));
        }
        // else: plateau continues, nothing to add
      } else {
        if (a < b) {
          out.push_back(invPoint(a, seg.start));
          out.push_back(invConstant(a, b, seg.start));
          out.push_back(invPoint(b, seg.start));
          out.push_back(Segment(b, cv, ExtValue(seg.start), ExtValue(seg.end)));
        } else {
          out.push_back(invPoint(a, seg.start));
          out.push_back(Segment(b, cv, ExtValue(seg.start), ExtValue(seg.end)));
        }
      }
    }
  }

  // Close the level that is still open at the end of the window.
  if (s.domainEndIncluded()) {
    const Point& p = asPoint(elems.back());
    out.push_back(invPoint(p.value.finite(), p.time));
  } else {
    const Segment& last = asSegment(elems.back());
    if (last.isConstant())
      out.push_back(invPoint(last.rightLimitAtStart.finite(), last.end));
  }
  return Sequence(std::move(out));
}

namespace {

const ExtValue kPlusInf = ExtValue::plusInfinity();

Segment infiniteTail(const Rational& from) {
  return Segment(from, from + Rational(1), kPlusInf, kPlusInf);
}

// Constant-zero curve, the pseudo-inverse of a function that is infinite
// immediately after 0.
Curve zeroCurve() {
  const Rational zero(0), one(1);
  std::vector<Element> elems{Point{zero, ExtValue(zero)},
                             Segment(zero, one, ExtValue(zero), ExtValue(zero))};
  return Curve(Sequence(std::move(elems)), zero, one, Rational(0));
}

Curve lpiOfUltimatelyConstant(const Curve& f, const ConstantTail& tail) {
  // Finite on [0, V] with f_inv(V) = plateau start; +inf past V.
  Sequence inv = lowerPseudoInverseSequence(mergeCollinear(f.baseSequence()));
  std::vector<Element> elems = inv.elements();
  elems.push_back(infiniteTail(tail.value));
  return Curve(Sequence(std::move(elems)), tail.value, Rational(1),
               Rational(0));
}

Curve upiOfUltimatelyConstant(const Curve& f, const ConstantTail& tail) {
  // sup { x | f(x) <= y } = +inf already at y = V.
  const Sequence merged = mergeCollinear(f.baseSequence());
  const Rational& V = tail.value;
  const Sequence head = merged.restrict(Rational(0), tail.start, true);
  Sequence inv = upperPseudoInverseSequence(head);
  std::vector<Element> elems = inv.elements();
  const Rational w = asPoint(elems.back()).time;  // = f(plateau start)
  if (w < V) {
    elems.push_back(invConstant(w, V, tail.start));
    elems.push_back(Point{V, kPlusInf});
  } else {
    elems.back() = Point{V, kPlusInf};
  }
  elems.push_back(infiniteTail(V));
  return Curve(Sequence(std::move(elems)), V, Rational(1), Rational(0));
}

Curve lpiOfWeaklyUltimatelyInfinite(const Curve& f, const Rational& tw) {
  if (tw.isZero()) return zeroCurve();
  const Rational vm = f.leftLimitAt(tw).finite();
  Sequence inv = lowerPseudoInverseSequence(f.cut(Rational(0), tw, false));
  std::vector<Element> elems = inv.elements();
  if (!inv.domainEndIncluded()) {
    // Left-continuity pins f_inv(vm) to the limit from below.
    elems.push_back(Point{vm, asSegment(elems.back()).leftLimitAtEnd});
  }
  elems.push_back(invConstant(vm, vm + Rational(1), tw));
  return Curve(Sequence(std::move(elems)), vm, Rational(1), Rational(0));
}

Curve upiOfWeaklyUltimatelyInfinite(const Curve& f, const Rational& tw) {
  if (tw.isZero()) return zeroCurve();
  const Rational vm = f.leftLimitAt(tw).finite();
  Sequence inv = upperPseudoInverseSequence(f.cut(Rational(0), tw, false));
  std::vector<Element> elems = inv.elements();
  if (!inv.domainEndIncluded()) elems.push_back(invPoint(vm, tw));
  elems.push_back(invConstant(vm, vm + Rational(1), tw));
  return Curve(Sequence(std::move(elems)), vm, Rational(1), Rational(0));
}

enum class Side { Lower, Upper };

Curve pseudoInverse(const Curve& f, Side side) {
  const Classification cls = classify(f);
  if (!cls.nonDecreasing)
    throw PreconditionError("pseudo-inverse requires a non-decreasing curve");
  if (f.valueAt(Rational(0)) < ExtValue(Rational(0)))
    throw PreconditionError("pseudo-inverse requires f(0) >= 0, got " +
                            f.valueAt(Rational(0)).str());

  if (cls.weaklyUltimatelyInfinite)
    return side == Side::Lower
               ? lpiOfWeaklyUltimatelyInfinite(f, *cls.infinityStart)
               : upiOfWeaklyUltimatelyInfinite(f, *cls.infinityStart);
  if (cls.ultimatelyConstant)
    return side == Side::Lower ? lpiOfUltimatelyConstant(f, *cls.constantTail)
                               : upiOfUltimatelyConstant(f, *cls.constantTail);

  const Rational& T = f.pseudoPeriodStart();
  const Rational& d = f.pseudoPeriodLength();
  const Rational& c = f.pseudoPeriodHeight();
  if (c.sign() <= 0)
    throw InvariantError("non-decreasing non-UC curve with height " + c.str());

  // Cutting right-closed lets the scan emit the closing constant segment in
  // ]f(end^-), f(end)[ when f has a left-discontinuity at the window end.
  const Rational cutEnd = side == Side::Lower ? T + d + d : T + d;
  const Sequence window = f.cut(Rational(0), cutEnd, true);
  const Sequence inv = side == Side::Lower
                           ? lowerPseudoInverseSequence(window)
                           : upperPseudoInverseSequence(window);

  const Rational resultT =
      f.valueAt(side == Side::Lower ? T + d : T).finite();
  const Rational resultD = c;
  const Rational resultC = d;
  return Curve(inv.restrict(Rational(0), resultT + resultD, false), resultT,
               resultD, resultC);
}

}  // namespace

Curve lowerPseudoInverse(const Curve& f) { return pseudoInverse(f, Side::Lower); }

Curve upperPseudoInverse(const Curve& f) { return pseudoInverse(f, Side::Upper); }

}  // namespace upp
