#include "upp/sequence.hpp"

#include <algorithm>
#include <sstream>

namespace upp {

namespace {

std::string describe(const Element& e) {
  std::ostringstream os;
  if (isPoint(e)) {
    const auto& p = asPoint(e);
    os << "point(t=" << p.time << ", v=" << p.value << ")";
  } else {
    const auto& s = asSegment(e);
    os << "segment(]" << s.start << ", " << s.end << "[, " << s.rightLimitAtStart
       << " -> " << s.leftLimitAtEnd << ")";
  }
  return os.str();
}

}  // namespace

Segment::Segment(Rational s, Rational e, ExtValue rls, ExtValue lle)
    : start(std::move(s)),
      end(std::move(e)),
      rightLimitAtStart(std::move(rls)),
      leftLimitAtEnd(std::move(lle)) {
  if (start >= end)
    throw InvariantError("segment with start " + start.str() + " >= end " +
                         end.str());
  if (rightLimitAtStart.isInfinite() || leftLimitAtEnd.isInfinite()) {
    if (rightLimitAtStart != leftLimitAtEnd)
      throw InvariantError(
          "segment mixing finite and infinite limits on ]" + start.str() +
          ", " + end.str() + "[");
  }
}

Rational Segment::slope() const {
  return (leftLimitAtEnd.finite() - rightLimitAtStart.finite()) / (end - start);
}

ExtValue Segment::valueAt(const Rational& x) const {
  if (!isFinite()) return rightLimitAtStart;  // infinite plateau
  if (isConstant()) return rightLimitAtStart;
  return ExtValue(rightLimitAtStart.finite() + slope() * (x - start));
}

bool isPoint(const Element& e) { return std::holds_alternative<Point>(e); }
const Point& asPoint(const Element& e) { return std::get<Point>(e); }
const Segment& asSegment(const Element& e) { return std::get<Segment>(e); }

Rational elementStart(const Element& e) {
  return isPoint(e) ? asPoint(e).time : asSegment(e).start;
}

Rational elementEnd(const Element& e) {
  return isPoint(e) ? asPoint(e).time : asSegment(e).end;
}

Sequence::Sequence(std::vector<Element> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw InvariantError("empty sequence");
  if (!isPoint(elems_.front()))
    throw InvariantError("sequence must start with a point, got " +
                         describe(elems_.front()));
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    const bool prevPoint = isPoint(elems_[i - 1]);
    const bool curPoint = isPoint(elems_[i]);
    if (prevPoint == curPoint)
      throw InvariantError("sequence does not alternate at elements " +
                           describe(elems_[i - 1]) + " and " +
                           describe(elems_[i]));
    if (elementEnd(elems_[i - 1]) != elementStart(elems_[i]))
      throw InvariantError("gap between " + describe(elems_[i - 1]) + " and " +
                           describe(elems_[i]));
  }
}

Rational Sequence::domainStart() const { return elementStart(elems_.front()); }
Rational Sequence::domainEnd() const { return elementEnd(elems_.back()); }
bool Sequence::domainEndIncluded() const { return isPoint(elems_.back()); }

// Largest element index whose start is <= x.
std::size_t Sequence::indexFor(const Rational& x) const {
  std::size_t lo = 0, hi = elems_.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (elementStart(elems_[mid]) <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

ExtValue Sequence::valueAt(const Rational& x) const {
  if (x < domainStart() || x > domainEnd() ||
      (x == domainEnd() && !domainEndIncluded()))
    throw PreconditionError("value query at " + x.str() +
                            " outside sequence domain");
  std::size_t i = indexFor(x);
  // A segment covers only its open interior; at its start the value belongs
  // to the preceding point.
  if (!isPoint(elems_[i]) && asSegment(elems_[i]).start == x) --i;
  const Element& e = elems_[i];
  if (isPoint(e)) return asPoint(e).value;
  return asSegment(e).valueAt(x);
}

ExtValue Sequence::leftLimitAt(const Rational& x) const {
  if (x <= domainStart() || x > domainEnd())
    throw PreconditionError("left-limit query at " + x.str() +
                            " outside sequence domain");
  std::size_t i = indexFor(x);
  if (isPoint(elems_[i]) || asSegment(elems_[i]).start == x) {
    // x sits on an element boundary, the limit comes from the previous
    // segment.
    while (i > 0 && elementStart(elems_[i]) == x) --i;
  }
  const Segment& s = asSegment(elems_[i]);
  if (s.end == x) return s.leftLimitAtEnd;
  return s.valueAt(x);
}

ExtValue Sequence::rightLimitAt(const Rational& x) const {
  if (x < domainStart() || x >= domainEnd())
    throw PreconditionError("right-limit query at " + x.str() +
                            " outside sequence domain");
  std::size_t i = indexFor(x);
  if (isPoint(elems_[i])) ++i;  // the segment right after the point
  const Segment& s = asSegment(elems_[i]);
  if (s.start == x) return s.rightLimitAtStart;
  return s.valueAt(x);
}

Sequence Sequence::restrict(const Rational& lo, const Rational& hi,
                            bool includeHi) const {
  if (lo > hi || (lo == hi && !includeHi))
    throw PreconditionError("empty restriction [" + lo.str() + ", " + hi.str() +
                            (includeHi ? "]" : "["));
  if (lo < domainStart() || hi > domainEnd() ||
      (hi == domainEnd() && includeHi && !domainEndIncluded()))
    throw PreconditionError("restriction [" + lo.str() + ", " + hi.str() +
                            (includeHi ? "]" : "[") +
                            " not contained in sequence domain");
  std::vector<Element> out;
  out.push_back(Point{lo, valueAt(lo)});
  if (lo < hi) {
    for (std::size_t i = indexFor(lo); i < elems_.size(); ++i) {
      const Element& e = elems_[i];
      if (elementEnd(e) <= lo) continue;
      if (elementStart(e) >= hi) break;
      if (isPoint(e)) {
        if (asPoint(e).time > lo) out.push_back(e);
        continue;
      }
      const Segment& s = asSegment(e);
      const Rational a = max(s.start, lo);
      const Rational b = min(s.end, hi);
      if (a >= b) continue;
      const ExtValue va = a == s.start ? s.rightLimitAtStart : s.valueAt(a);
      const ExtValue vb = b == s.end ? s.leftLimitAtEnd : s.valueAt(b);
      out.push_back(Segment(a, b, va, vb));
    }
    if (includeHi) out.push_back(Point{hi, valueAt(hi)});
  }
  return Sequence(std::move(out));
}

Sequence Sequence::shifted(const Rational& dt, const Rational& dv) const {
  std::vector<Element> out;
  out.reserve(elems_.size());
  const ExtValue dve(dv);
  for (const Element& e : elems_) {
    if (isPoint(e)) {
      const Point& p = asPoint(e);
      out.push_back(Point{p.time + dt, p.value + dve});
    } else {
      const Segment& s = asSegment(e);
      out.push_back(Segment(s.start + dt, s.end + dt,
                            s.rightLimitAtStart + dve, s.leftLimitAtEnd + dve));
    }
  }
  return Sequence(std::move(out));
}

bool Sequence::isNonDecreasing() const {
  ExtValue last = asPoint(elems_.front()).value;
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (isPoint(elems_[i])) {
      if (asPoint(elems_[i]).value < last) return false;
      last = asPoint(elems_[i]).value;
    } else {
      const Segment& s = asSegment(elems_[i]);
      if (s.rightLimitAtStart < last) return false;
      if (s.leftLimitAtEnd < s.rightLimitAtStart) return false;
      last = s.leftLimitAtEnd;
    }
  }
  return true;
}

bool Sequence::isNonNegative() const {
  const ExtValue zero{Rational(0)};
  for (const Element& e : elems_) {
    if (isPoint(e)) {
      if (asPoint(e).value < zero) return false;
    } else {
      const Segment& s = asSegment(e);
      if (s.rightLimitAtStart < zero || s.leftLimitAtEnd < zero) return false;
    }
  }
  return true;
}

Sequence mergeCollinear(const Sequence& s) {
  std::vector<Element> out;
  for (const Element& e : s.elements()) {
    if (out.size() >= 2 && !isPoint(e)) {
      const Segment& cur = asSegment(e);
      const Element& pe = out[out.size() - 1];
      const Element& se = out[out.size() - 2];
      if (isPoint(pe) && !isPoint(se)) {
        const Point& p = asPoint(pe);
        const Segment& prev = asSegment(se);
        const bool continuous = prev.leftLimitAtEnd == p.value &&
                                p.value == cur.rightLimitAtStart;
        bool sameSlope = false;
        if (continuous) {
          if (!prev.isFinite() || !cur.isFinite())
            sameSlope = prev.isConstant() && cur.isConstant();
          else
            sameSlope = prev.slope() == cur.slope();
        }
        if (continuous && sameSlope) {
          Segment merged(prev.start, cur.end, prev.rightLimitAtStart,
                         cur.leftLimitAtEnd);
          out.pop_back();
          out.pop_back();
          out.push_back(merged);
          continue;
        }
      }
    }
    out.push_back(e);
  }
  return Sequence(std::move(out));
}

void SequenceCursor::advanceTo(const Rational& x) {
  const auto& elems = seq_.elements();
  while (idx_ + 1 < elems.size() && elementEnd(elems[idx_]) <= x &&
         !(isPoint(elems[idx_]) && asPoint(elems[idx_]).time == x)) {
    ++idx_;
    ++advances_;
  }
  // Back up if queries regress; callers are expected to be monotone, but a
  // bounded regression (same element) is tolerated.
  while (idx_ > 0 && elementStart(elems[idx_]) > x) {
    --idx_;
    ++advances_;
  }
}

ExtValue SequenceCursor::valueAt(const Rational& x) {
  advanceTo(x);
  const Element& e = seq_.elements()[idx_];
  if (isPoint(e)) {
    if (asPoint(e).time != x)
      throw PreconditionError("cursor value query at " + x.str() +
                              " outside sequence domain");
    return asPoint(e).value;
  }
  const Segment& s = asSegment(e);
  if (x <= s.start || x >= s.end)
    throw PreconditionError("cursor value query at " + x.str() +
                            " outside sequence domain");
  return s.valueAt(x);
}

const Segment* SequenceCursor::segmentRightOf(const Rational& x) {
  advanceTo(x);
  const auto& elems = seq_.elements();
  std::size_t i = idx_;
  if (isPoint(elems[i])) {
    if (i + 1 >= elems.size()) return nullptr;
    ++i;
  }
  const Segment& s = asSegment(elems[i]);
  if (x < s.start || x >= s.end) return nullptr;
  return &s;
}

const Segment* SequenceCursor::segmentLeftOf(const Rational& x) {
  advanceTo(x);
  const auto& elems = seq_.elements();
  std::size_t i = idx_;
  if (isPoint(elems[i]) || asSegment(elems[i]).start == x) {
    if (i == 0) return nullptr;
    --i;
    if (isPoint(elems[i])) return nullptr;  // should not happen (alternation)
  }
  const Segment& s = asSegment(elems[i]);
  if (x <= s.start || x > s.end) return nullptr;
  return &s;
}

ExtValue SequenceCursor::rightLimitAt(const Rational& x) {
  const Segment* s = segmentRightOf(x);
  if (!s)
    throw PreconditionError("cursor right-limit query at " + x.str() +
                            " outside sequence domain");
  return x == s->start ? s->rightLimitAtStart : s->valueAt(x);
}

ExtValue SequenceCursor::leftLimitAt(const Rational& x) {
  const Segment* s = segmentLeftOf(x);
  if (!s)
    throw PreconditionError("cursor left-limit query at " + x.str() +
                            " outside sequence domain");
  return x == s->end ? s->leftLimitAtEnd : s->valueAt(x);
}

bool SequenceCursor::isConstantRightOf(const Rational& x) {
  const Segment* s = segmentRightOf(x);
  return s != nullptr && s->isConstant();
}

bool SequenceCursor::isConstantLeftOf(const Rational& x) {
  const Segment* s = segmentLeftOf(x);
  return s != nullptr && s->isConstant();
}

}  // namespace upp
