#include "upp/oracle.hpp"

#include <vector>

namespace upp::oracle {

namespace {

const Rational kZero(0);

void checkScanArgs(const Rational& horizon, const Rational& step) {
  if (horizon.sign() <= 0)
    throw PreconditionError("oracle horizon must be > 0");
  if (step.sign() <= 0) throw PreconditionError("oracle step must be > 0");
}

// Whether the curve can still grow past its materialized window; when it
// cannot, a threshold unmet within [0, T+d] is unmet forever.
bool boundedForever(const Curve& f, const Rational& horizon) {
  return f.pseudoPeriodHeight().sign() <= 0 &&
         horizon >= f.pseudoPeriodStart() + f.pseudoPeriodLength();
}

}  // namespace

ScanResult lowerPseudoInverseAt(const Curve& f, const Rational& y,
                                const Rational& horizon, const Rational& step) {
  checkScanArgs(horizon, step);
  const ExtValue target{y};
  const Sequence window = f.cut(kZero, horizon, true);
  for (const Element& e : window.elements()) {
    if (isPoint(e)) {
      if (asPoint(e).value >= target) return ScanResult::of(asPoint(e).time);
      continue;
    }
    const Segment& s = asSegment(e);
    if (s.rightLimitAtStart >= target) return ScanResult::of(s.start);
    if (s.leftLimitAtEnd < target) continue;
    // The affine piece crosses the threshold; grid points only bracket it,
    // the crossing is solved exactly.
    const Rational b = s.rightLimitAtStart.finite();
    const Rational x = s.start + (y - b) / s.slope();
    return ScanResult::of(min(x, s.end));
  }
  return boundedForever(f, horizon) ? ScanResult::plusInfinity()
                                    : ScanResult::beyondHorizon();
}

ScanResult upperPseudoInverseAt(const Curve& f, const Rational& y,
                                const Rational& horizon, const Rational& step) {
  checkScanArgs(horizon, step);
  const ExtValue target{y};
  const Sequence window = f.cut(kZero, horizon, true);
  for (const Element& e : window.elements()) {
    if (isPoint(e)) {
      if (asPoint(e).value > target) return ScanResult::of(asPoint(e).time);
      continue;
    }
    const Segment& s = asSegment(e);
    if (s.rightLimitAtStart > target) return ScanResult::of(s.start);
    if (!(s.leftLimitAtEnd > target)) continue;
    const Rational b = s.rightLimitAtStart.finite();
    return ScanResult::of(s.start + (y - b) / s.slope());
  }
  return boundedForever(f, horizon) ? ScanResult::plusInfinity()
                                    : ScanResult::beyondHorizon();
}

ExtValue composeAt(const Curve& f, const Curve& g, const Rational& t) {
  const ExtValue inner = g.valueAt(t);
  if (!inner.isFinite())
    throw PreconditionError("oracle composition through an infinite inner "
                            "value at t=" +
                            t.str());
  return f.valueAt(inner.finite());
}

Rational convolveRateLatencyAt(const Curve& u, const Rational& rate,
                               const Rational& latency, const Rational& t) {
  if (t.isNegative())
    throw PreconditionError("oracle convolution query at negative time");
  auto objective = [&](const Rational& s, const ExtValue& us) {
    const Rational lag = t - s - latency;
    return us.finite() + (lag.sign() > 0 ? rate * lag : kZero);
  };

  Rational best = objective(kZero, u.valueAt(kZero));
  auto consider = [&](const Rational& s, const ExtValue& us) {
    best = min(best, objective(s, us));
  };

  const Sequence window = u.cut(kZero, t, true);
  for (const Element& e : window.elements()) {
    if (isPoint(e)) {
      consider(asPoint(e).time, asPoint(e).value);
    } else {
      const Segment& s = asSegment(e);
      consider(s.start, s.rightLimitAtStart);  // limit anchors: the infimum
      consider(s.end, s.leftLimitAtEnd);       // may approach an open end
    }
  }
  const Rational kink = t - latency;
  if (kink.sign() > 0) consider(kink, u.valueAt(kink));
  return best;
}

namespace {

Rational randomRational(std::mt19937_64& rng, int maxNum, int maxDen) {
  std::uniform_int_distribution<int> num(0, maxNum);
  std::uniform_int_distribution<int> den(1, maxDen);
  return Rational(num(rng), den(rng));
}

Rational randomPositiveRational(std::mt19937_64& rng, int maxNum, int maxDen) {
  std::uniform_int_distribution<int> num(1, maxNum);
  std::uniform_int_distribution<int> den(1, maxDen);
  return Rational(num(rng), den(rng));
}

bool chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace

Curve randomCurve(std::mt19937_64& rng, const RandomOptions& opts) {
  std::uniform_int_distribution<int> pieceCount(1, opts.maxPieces);
  const int pieces = pieceCount(rng);

  std::vector<Element> elems;
  Rational t(0);
  Rational v = chance(rng, 0.5) ? Rational(0) : randomRational(rng, 6, 12);
  elems.push_back(Point{t, ExtValue(v)});

  Rational lastLimit = v;
  for (int i = 0; i < pieces; ++i) {
    const Rational width = randomPositiveRational(rng, 6, 12);
    const Rational t1 = t + width;
    Rational startValue = lastLimit;
    if (!opts.forceLeftContinuous && chance(rng, opts.jumpProbability))
      startValue += randomPositiveRational(rng, 4, 12);
    Rational endValue = startValue;
    if (!chance(rng, opts.plateauProbability))
      endValue = startValue + randomPositiveRational(rng, 6, 12);
    elems.push_back(Segment(t, t1, ExtValue(startValue), ExtValue(endValue)));
    t = t1;
    lastLimit = endValue;
    Rational pv = lastLimit;
    if (!opts.forceLeftContinuous && chance(rng, opts.jumpProbability))
      pv += randomPositiveRational(rng, 4, 12);
    elems.push_back(Point{t, ExtValue(pv)});
    lastLimit = pv;
  }
  const Rational end = t + randomPositiveRational(rng, 6, 12);

  if (opts.kind == RandomKind::WeaklyUltimatelyInfinite) {
    // Finite transient, then +inf. The pseudo-period must lie entirely in
    // the infinite tail so the extension stays infinite; the value at the
    // threshold is unconstrained, so sometimes make it +inf too.
    const ExtValue inf = ExtValue::plusInfinity();
    if (chance(rng, 0.5)) {
      elems.back() = Point{t, inf};
      elems.push_back(Segment(t, end, inf, inf));
      return Curve(Sequence(std::move(elems)), t, end - t, Rational(0));
    }
    const Rational mid = (t + end) / Rational(2);
    elems.push_back(Segment(t, mid, inf, inf));
    elems.push_back(Point{mid, inf});
    elems.push_back(Segment(mid, end, inf, inf));
    return Curve(Sequence(std::move(elems)), mid, end - mid, Rational(0));
  }

  if (opts.kind == RandomKind::UltimatelyConstant) {
    Rational plateau = lastLimit;
    const bool jumpIn = chance(rng, opts.jumpProbability);
    if (jumpIn) plateau += randomPositiveRational(rng, 4, 12);
    if (!jumpIn) {
      elems.push_back(Segment(t, end, ExtValue(plateau), ExtValue(plateau)));
      return Curve(Sequence(std::move(elems)), t, end - t, Rational(0));
    }
    // Jump into the plateau: the pattern must start inside it so the point
    // at the pseudo-period start carries the plateau value.
    const Rational mid = (t + end) / Rational(2);
    elems.push_back(Segment(t, mid, ExtValue(plateau), ExtValue(plateau)));
    elems.push_back(Point{mid, ExtValue(plateau)});
    elems.push_back(Segment(mid, end, ExtValue(plateau), ExtValue(plateau)));
    return Curve(Sequence(std::move(elems)), mid, end - mid, Rational(0));
  }

  // Generic: close with one more segment and pick the pseudo-period among
  // the breakpoints. The height is the smallest monotone-compatible value
  // plus a random slack; zero slack keeps the seam left-continuous.
  Rational closingStart = lastLimit;
  if (!opts.forceLeftContinuous && chance(rng, opts.jumpProbability))
    closingStart += randomPositiveRational(rng, 4, 12);
  Rational closingEnd = closingStart;
  if (!chance(rng, opts.plateauProbability))
    closingEnd = closingStart + randomPositiveRational(rng, 6, 12);
  elems.push_back(Segment(t, end, ExtValue(closingStart),
                          ExtValue(closingEnd)));

  std::vector<Rational> times;
  for (const Element& e : elems)
    if (isPoint(e)) times.push_back(asPoint(e).time);
  std::uniform_int_distribution<std::size_t> pick(0, times.size() - 1);
  const Rational T = times[pick(rng)];

  Sequence base(std::move(elems));
  Rational c = closingEnd - base.valueAt(T).finite();
  if (chance(rng, 0.5)) c += randomPositiveRational(rng, 4, 12);
  return Curve(std::move(base), T, end - T, c);
}

}  // namespace upp::oracle
