#include "upp/composition.hpp"

#include <algorithm>
#include <vector>

#include "upp/instrumentation.hpp"
#include "upp/pseudo_inverse.hpp"

namespace upp {

namespace {

std::string intervalText(const Rational& lo, const Rational& hi, bool closed) {
  return "[" + lo.str() + ", " + hi.str() + (closed ? "]" : "[");
}

}  // namespace

Sequence composeSequences(const Sequence& sf, const Sequence& sg) {
  if (sg.domainStart() != Rational(0))
    throw PreconditionError("inner sequence must start at 0, starts at " +
                            sg.domainStart().str());
  if (sg.domainEndIncluded())
    throw PreconditionError("inner sequence must be right-open");
  if (!sg.isNonDecreasing())
    throw PreconditionError("inner sequence must be non-decreasing");
  if (!sg.isNonNegative())
    throw PreconditionError("inner sequence must be non-negative");

  const Rational windowEnd = sg.domainEnd();
  const Segment& gLast = asSegment(sg.elements().back());
  if (!asPoint(sg.elements().front()).value.isFinite() ||
      !gLast.leftLimitAtEnd.isFinite())
    throw PreconditionError("inner sequence must be finite-valued");
  const Rational rangeLo = asPoint(sg.elements().front()).value.finite();
  const Rational rangeHi = gLast.leftLimitAtEnd.finite();
  const bool gEndsConstant = gLast.isConstant();

  const bool coversEnd =
      sf.domainEnd() > rangeHi ||
      (sf.domainEnd() == rangeHi && (sf.domainEndIncluded() || !gEndsConstant));
  if (sf.domainStart() > rangeLo || !coversEnd)
    throw PreconditionError(
        "outer sequence on " +
        intervalText(sf.domainStart(), sf.domainEnd(), sf.domainEndIncluded()) +
        " does not cover the inner range " +
        intervalText(rangeLo, rangeHi, gEndsConstant));

  // Breakpoints of the result: times of the inner points merged with the
  // preimages of the outer interior breakpoint values. The lower
  // pseudo-inverse of the inner sequence is sufficient for the mapping.
  std::vector<Rational> gTimes;
  for (const Element& e : sg.elements())
    if (isPoint(e)) gTimes.push_back(asPoint(e).time);

  const Sequence gInv = lowerPseudoInverseSequence(sg);
  SequenceCursor gInvCursor(gInv);
  std::vector<Rational> mapped;
  for (const Element& e : sf.elements()) {
    if (!isPoint(e)) continue;
    const Rational& y = asPoint(e).time;
    if (y <= rangeLo || y >= rangeHi) continue;
    mapped.push_back(gInvCursor.valueAt(y).finite());
  }

  std::vector<Rational> bounds;
  bounds.reserve(gTimes.size() + mapped.size() + 1);
  std::merge(gTimes.begin(), gTimes.end(), mapped.begin(), mapped.end(),
             std::back_inserter(bounds));
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  bounds.push_back(windowEnd);

  SequenceCursor gValue(sg), gRight(sg), gLeft(sg);
  SequenceCursor fValue(sf), fRight(sf), fLeft(sf);
  std::vector<Element> out;
  out.reserve(2 * bounds.size());
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    ++perf::counters().compositionVisits;
    const Rational& t0 = bounds[i];
    const Rational& t1 = bounds[i + 1];

    out.push_back(Point{t0, fValue.valueAt(gValue.valueAt(t0).finite())});

    // One-sided limits through g: where g is locally constant the limit of
    // f(g(x)) is the value of f at the plateau level, not a limit of f.
    const Rational gr = gRight.rightLimitAt(t0).finite();
    const ExtValue rls = gRight.isConstantRightOf(t0) ? fValue.valueAt(gr)
                                                      : fRight.rightLimitAt(gr);
    const Rational gl = gLeft.leftLimitAt(t1).finite();
    const ExtValue lle = gLeft.isConstantLeftOf(t1) ? fValue.valueAt(gl)
                                                    : fLeft.leftLimitAt(gl);
    out.push_back(Segment(t0, t1, rls, lle));
  }
  return Sequence(std::move(out));
}

namespace {

Rational lowerInverseAt(const Curve& g, const Rational& y,
                        const char* context) {
  const ExtValue x = lowerPseudoInverse(g).valueAt(y);
  if (!x.isFinite())
    throw PreconditionError(std::string(context) +
                            ": inner function never reaches " + y.str());
  return x.finite();
}

Rational upperInverseAt(const Curve& g, const Rational& y) {
  return upperPseudoInverse(g).valueAt(y).finite();
}

struct ResultParams {
  std::string path;
  Rational T, d, c;
};

Curve assemble(const Curve& f, const Curve& g, const ResultParams& params,
               ComposeStats* stats) {
  const Rational end = params.T + params.d;
  const Sequence sg = g.cut(Rational(0), end, false);
  const bool endsConstant = asSegment(sg.elements().back()).isConstant();
  const Rational fLo = asPoint(sg.elements().front()).value.finite();
  const Rational fHi = asSegment(sg.elements().back()).leftLimitAtEnd.finite();
  const bool includeHi = fLo == fHi || endsConstant;
  const Sequence sf = f.cut(fLo, fHi, includeHi);

  for (const Element& e : sf.elements()) {
    const bool infinite = isPoint(e) ? asPoint(e).value.isInfinite()
                                     : asSegment(e).rightLimitAtStart
                                           .isInfinite();
    if (infinite)
      throw PreconditionError(
          "outer function is infinite inside the composition range " +
          intervalText(fLo, fHi, includeHi));
  }

  if (stats) {
    stats->path = params.path;
    stats->outerCutElements = sf.size();
    stats->innerCutElements = sg.size();
  }
  return Curve(composeSequences(sf, sg), params.T, params.d, params.c);
}

ResultParams generalParams(const Curve& f, const Curve& g) {
  const Rational tStar =
      lowerInverseAt(g, f.pseudoPeriodStart(), "general composition");
  const Rational T = max(tStar, g.pseudoPeriodStart());
  const Rational d = f.pseudoPeriodLength().numeratorAsRational() *
                     g.pseudoPeriodLength() *
                     g.pseudoPeriodHeight().denominatorAsRational();
  const Rational c = f.pseudoPeriodLength().denominatorAsRational() *
                     g.pseudoPeriodHeight().numeratorAsRational() *
                     f.pseudoPeriodHeight();
  return {"general", T, d, c};
}

}  // namespace

Curve compose(const Curve& f, const Curve& g, ComposeMode mode,
              ComposeStats* stats) {
  const Classification clsG = classify(g);
  if (!clsG.nonDecreasing)
    throw PreconditionError("composition requires a non-decreasing inner "
                            "function");
  if (!clsG.nonNegative)
    throw PreconditionError("composition requires a non-negative inner "
                            "function");
  if (clsG.weaklyUltimatelyInfinite)
    throw PreconditionError(
        "composition with an ultimately infinite inner function is not "
        "defined (the outer limit at +inf need not exist)");

  if (mode == ComposeMode::ForceGeneral)
    return assemble(f, g, generalParams(f, g), stats);

  const Classification clsF = classify(f);

  if (clsG.ultimatelyConstant) {
    // h(t) = f(V) for all t past the inner plateau.
    const ConstantTail& tail = *clsG.constantTail;
    const Rational T = tail.attainedAtStart
                           ? tail.start
                           : (tail.start + g.pseudoPeriodStart() +
                              g.pseudoPeriodLength()) /
                                 Rational(2);
    return assemble(f, g, {"g-uc", T, Rational(1), Rational(0)}, stats);
  }

  if (clsF.ultimatelyConstant) {
    // h becomes constant once g enters the outer plateau; where exactly that
    // happens depends on whether f attains the plateau value at its start
    // and on how g crosses the threshold, so probe the candidate start.
    const ConstantTail& tail = *clsF.constantTail;
    const ExtValue plateau{tail.value};
    const Rational candidate =
        tail.attainedAtStart ? lowerInverseAt(g, tail.start, "f-uc composition")
                             : upperInverseAt(g, tail.start);
    const bool startsThere =
        f.valueAt(g.valueAt(candidate).finite()) == plateau;
    const Rational T = startsThere ? candidate : candidate + Rational(1);
    return assemble(f, g, {"f-uc", T, Rational(1), Rational(0)}, stats);
  }

  if (clsF.ua && clsG.ua) {
    const Rational T = max(lowerInverseAt(g, clsF.ua->affineStart, "ua-ua "
                                                                   "composition"),
                           clsG.ua->affineStart);
    const Rational rho = clsF.ua->slope * clsG.ua->slope;
    return assemble(f, g, {"ua-ua", T, Rational(1), rho}, stats);
  }

  if (clsG.ua) {
    const Rational T =
        max(lowerInverseAt(g, f.pseudoPeriodStart(), "g-ua composition"),
            g.pseudoPeriodStart());
    const Rational d = f.pseudoPeriodLength() / clsG.ua->slope;
    return assemble(f, g, {"g-ua", T, d, f.pseudoPeriodHeight()}, stats);
  }

  if (clsF.ua) {
    const Rational T =
        max(lowerInverseAt(g, f.pseudoPeriodStart(), "f-ua composition"),
            g.pseudoPeriodStart());
    const Rational c = g.pseudoPeriodHeight() * clsF.ua->slope;
    return assemble(f, g, {"f-ua", T, g.pseudoPeriodLength(), c}, stats);
  }

  if (mode == ComposeMode::ForceSpecialized)
    throw PreconditionError(
        "no specialized composition path applies: neither operand is "
        "ultimately affine or ultimately constant");
  return assemble(f, g, generalParams(f, g), stats);
}

}  // namespace upp
