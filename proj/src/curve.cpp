#include "upp/curve.hpp"

#include <algorithm>
#include <vector>

namespace upp {

namespace {

Rational kTimesC(const Rational& t, const Rational& T, const Rational& d) {
  // Number of whole periods between T and t: floor((t - T) / d).
  return Rational(((t - T) / d).floor(), mpz_class(1));
}

}  // namespace

Curve::Curve(Sequence base, Rational pseudoPeriodStart,
             Rational pseudoPeriodLength, Rational pseudoPeriodHeight)
    : base_(std::move(base)),
      T_(std::move(pseudoPeriodStart)),
      d_(std::move(pseudoPeriodLength)),
      c_(std::move(pseudoPeriodHeight)) {
  if (T_.isNegative())
    throw InvariantError("pseudo-period start " + T_.str() + " is negative");
  if (d_.sign() <= 0)
    throw InvariantError("pseudo-period length " + d_.str() +
                         " is not positive");
  if (base_.domainStart() != Rational(0))
    throw InvariantError("curve base sequence must start at 0, starts at " +
                         base_.domainStart().str());
  if (base_.domainEnd() != T_ + d_ || base_.domainEndIncluded())
    throw InvariantError("curve base sequence must cover exactly [0, " +
                         (T_ + d_).str() + "[, covers [0, " +
                         base_.domainEnd().str() +
                         (base_.domainEndIncluded() ? "]" : "["));
}

ExtValue Curve::valueAt(const Rational& t) const {
  if (t.isNegative())
    throw PreconditionError("value query at negative time " + t.str());
  if (t < base_.domainEnd()) return base_.valueAt(t);
  const Rational k = kTimesC(t, T_, d_);
  return base_.valueAt(t - k * d_) + ExtValue(k * c_);
}

ExtValue Curve::leftLimitAt(const Rational& t) const {
  if (t.sign() <= 0)
    throw PreconditionError("left-limit query at non-positive time " +
                            t.str());
  if (t <= base_.domainEnd()) return base_.leftLimitAt(t);
  Rational k = kTimesC(t, T_, d_);
  Rational reduced = t - k * d_;
  if (reduced == T_) {  // left neighborhood lies in the previous period
    k -= Rational(1);
    reduced = T_ + d_;
  }
  return base_.leftLimitAt(reduced) + ExtValue(k * c_);
}

ExtValue Curve::rightLimitAt(const Rational& t) const {
  if (t.isNegative())
    throw PreconditionError("right-limit query at negative time " + t.str());
  if (t < base_.domainEnd()) return base_.rightLimitAt(t);
  const Rational k = kTimesC(t, T_, d_);
  return base_.rightLimitAt(t - k * d_) + ExtValue(k * c_);
}

Sequence Curve::cut(const Rational& lo, const Rational& hi,
                    bool includeHi) const {
  if (lo.isNegative())
    throw PreconditionError("cut starting at negative time " + lo.str());
  if (hi < lo || (hi == lo && !includeHi))
    throw PreconditionError("empty cut [" + lo.str() + ", " + hi.str() +
                            (includeHi ? "]" : "["));

  const Rational baseEnd = T_ + d_;
  std::vector<Element> elems;
  Rational coveredTo(0);
  mpz_class k = 0;

  if (lo < baseEnd) {
    elems = base_.elements();
    coveredTo = baseEnd;
    k = 1;
  } else {
    k = ((lo - T_) / d_).floor();
    coveredTo = T_ + Rational(k, mpz_class(1)) * d_;
  }

  const Sequence pattern = base_.restrict(T_, baseEnd, false);
  while (coveredTo < hi || (coveredTo == hi && includeHi)) {
    const Rational kr(k, mpz_class(1));
    const Sequence copy = pattern.shifted(kr * d_, kr * c_);
    for (const Element& e : copy.elements()) elems.push_back(e);
    coveredTo += d_;
    ++k;
  }
  return Sequence(std::move(elems)).restrict(lo, hi, includeHi);
}

namespace {

// Scans a collinear-merged base for an all-finite prefix followed by an
// all-+inf suffix covering the whole pseudo-periodic pattern.
std::optional<Rational> infinitySplit(const Sequence& base, const Rational& T) {
  const auto& elems = base.elements();
  std::optional<std::size_t> firstInf;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool inf;
    if (isPoint(elems[i]))
      inf = asPoint(elems[i]).value.isPlusInfinity();
    else
      inf = asSegment(elems[i]).rightLimitAtStart.isPlusInfinity();
    if (isPoint(elems[i]) ? asPoint(elems[i]).value.isMinusInfinity()
                          : asSegment(elems[i]).rightLimitAtStart
                                .isMinusInfinity())
      return std::nullopt;
    if (inf && !firstInf) firstInf = i;
    if (!inf && firstInf) return std::nullopt;  // finite after infinite
  }
  if (!firstInf) return std::nullopt;
  const std::size_t i = *firstInf;
  const Rational start = elementStart(elems[i]);
  // The pattern [T, T+d[ must be entirely infinite, otherwise the extension
  // re-creates finite values at every seam. When the infinite part opens
  // with a segment, the finite point at its start must therefore lie
  // strictly before T; an infinite point may sit at T itself.
  if (isPoint(elems[i]) ? start > T : start >= T) return std::nullopt;
  return start;
}

std::optional<ConstantTail> constantTailOf(const Sequence& base,
                                           const Rational& T,
                                           const Rational& c) {
  if (!c.isZero()) return std::nullopt;
  const auto& elems = base.elements();
  const Segment& last = asSegment(elems.back());
  if (!last.isConstant() || !last.isFinite()) return std::nullopt;
  if (last.start > T) return std::nullopt;
  const Point& startPoint = asPoint(elems[elems.size() - 2]);
  return ConstantTail{last.start, last.rightLimitAtStart.finite(),
                      startPoint.value == last.rightLimitAtStart};
}

std::optional<UaInfo> uaInfoOf(const Sequence& base, const Rational& T,
                               const Rational& d, const Rational& c) {
  const auto& elems = base.elements();
  const Segment& last = asSegment(elems.back());
  if (!last.isFinite()) return std::nullopt;
  const Rational rho = last.slope();
  if (c != rho * d) return std::nullopt;
  if (last.start > T) return std::nullopt;
  const Point& startPoint = asPoint(elems[elems.size() - 2]);
  const bool continuousAtStart = startPoint.value == last.rightLimitAtStart;
  if (last.start == T && !continuousAtStart) return std::nullopt;
  return UaInfo{continuousAtStart ? last.start : T, rho};
}

}  // namespace

Classification classify(const Curve& f) {
  Classification out;
  const Rational& T = f.pseudoPeriodStart();
  const Rational& d = f.pseudoPeriodLength();
  const Rational& c = f.pseudoPeriodHeight();
  const Sequence merged = mergeCollinear(f.baseSequence());
  const auto& elems = merged.elements();

  const ExtValue seamValue = merged.valueAt(T) + ExtValue(c);
  const ExtValue seamLeftLimit = asSegment(elems.back()).leftLimitAtEnd;

  out.nonDecreasing = merged.isNonDecreasing() && !c.isNegative() &&
                      seamLeftLimit <= seamValue;

  bool patternInfinite = asSegment(elems.back()).rightLimitAtStart
                             .isPlusInfinity();
  out.nonNegative =
      merged.isNonNegative() && (!c.isNegative() || patternInfinite);

  out.leftContinuous = seamValue == seamLeftLimit;
  out.rightContinuous = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!isPoint(elems[i])) continue;
    const Point& p = asPoint(elems[i]);
    if (i > 0 && asSegment(elems[i - 1]).leftLimitAtEnd != p.value)
      out.leftContinuous = false;
    if (i + 1 < elems.size() &&
        asSegment(elems[i + 1]).rightLimitAtStart != p.value)
      out.rightContinuous = false;
  }

  out.infinityStart = infinitySplit(merged, T);
  out.weaklyUltimatelyInfinite = out.infinityStart.has_value();
  if (!out.weaklyUltimatelyInfinite) {
    out.constantTail = constantTailOf(merged, T, c);
    out.ultimatelyConstant = out.constantTail.has_value();
    out.ua = uaInfoOf(merged, T, d, c);
  }
  return out;
}

Curve minimize(const Curve& f) {
  const Sequence merged = mergeCollinear(f.baseSequence());
  const Rational& d = f.pseudoPeriodLength();
  const Rational& c = f.pseudoPeriodHeight();
  Rational T = f.pseudoPeriodStart();

  // Earliest breakpoint from which the pattern already repeats: compare the
  // window [T', T[ shifted by one period against [T'+d, T+d[.
  Rational bestT = T;
  for (const Element& e : merged.elements()) {
    if (!isPoint(e)) continue;
    const Rational cand = asPoint(e).time;
    if (cand >= T) break;
    const Sequence a = merged.restrict(cand, T, false).shifted(d, c);
    const Sequence b = merged.restrict(cand + d, T + d, false);
    if (a == b) {
      bestT = cand;
      break;
    }
  }
  return Curve(merged.restrict(Rational(0), bestT + d, false), bestT, d, c);
}

bool equivalent(const Curve& f, const Curve& g) {
  if (f.pseudoPeriodHeight() * g.pseudoPeriodLength() !=
      g.pseudoPeriodHeight() * f.pseudoPeriodLength())
    return false;
  const Rational horizon =
      max(f.pseudoPeriodStart(), g.pseudoPeriodStart()) +
      lcm(f.pseudoPeriodLength(), g.pseudoPeriodLength());
  return mergeCollinear(f.cut(Rational(0), horizon, false)) ==
         mergeCollinear(g.cut(Rational(0), horizon, false));
}

Curve addCurves(const Curve& a, const Curve& b) {
  const Rational T =
      max(a.pseudoPeriodStart(), b.pseudoPeriodStart());
  const Rational d = lcm(a.pseudoPeriodLength(), b.pseudoPeriodLength());
  const Rational c = a.pseudoPeriodHeight() * (d / a.pseudoPeriodLength()) +
                     b.pseudoPeriodHeight() * (d / b.pseudoPeriodLength());
  const Rational end = T + d;
  const Sequence sa = a.cut(Rational(0), end, false);
  const Sequence sb = b.cut(Rational(0), end, false);

  std::vector<Rational> bounds;
  for (const Sequence* s : {&sa, &sb})
    for (const Element& e : s->elements())
      if (isPoint(e)) bounds.push_back(asPoint(e).time);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  bounds.push_back(end);

  SequenceCursor ca(sa), cb(sb);
  SequenceCursor ra(sa), rb(sb);  // separate cursors for right/left limits
  std::vector<Element> out;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const Rational& t0 = bounds[i];
    const Rational& t1 = bounds[i + 1];
    out.push_back(Point{t0, ca.valueAt(t0) + cb.valueAt(t0)});
    out.push_back(Segment(t0, t1, ra.rightLimitAt(t0) + rb.rightLimitAt(t0),
                          ra.leftLimitAt(t1) + rb.leftLimitAt(t1)));
  }
  return Curve(Sequence(std::move(out)), T, d, c);
}

}  // namespace upp
