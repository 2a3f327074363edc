#include "upp/nc_ops.hpp"

#include <optional>
#include <vector>

#include "upp/pseudo_inverse.hpp"

namespace upp {

namespace {

const Rational kZero(0);
const Rational kOne(1);

}  // namespace

Curve rateLatency(const Rational& rate, const Rational& latency) {
  if (rate.sign() <= 0)
    throw PreconditionError("rate-latency curve requires rate > 0, got " +
                            rate.str());
  if (latency.isNegative())
    throw PreconditionError("rate-latency curve requires latency >= 0, got " +
                            latency.str());
  std::vector<Element> elems;
  elems.push_back(Point{kZero, ExtValue(kZero)});
  if (latency.sign() > 0) {
    elems.push_back(Segment(kZero, latency, ExtValue(kZero), ExtValue(kZero)));
    elems.push_back(Point{latency, ExtValue(kZero)});
  }
  elems.push_back(
      Segment(latency, latency + kOne, ExtValue(kZero), ExtValue(rate)));
  return Curve(Sequence(std::move(elems)), latency, kOne, rate);
}

Curve leakyBucket(const Rational& burst, const Rational& rate) {
  if (burst.isNegative() || rate.isNegative())
    throw PreconditionError("leaky-bucket curve requires sigma, rho >= 0");
  std::vector<Element> elems{
      Point{kZero, ExtValue(burst)},
      Segment(kZero, kOne, ExtValue(burst), ExtValue(burst + rate))};
  return Curve(Sequence(std::move(elems)), kZero, kOne, rate);
}

Curve constant(const Rational& k) {
  std::vector<Element> elems{Point{kZero, ExtValue(k)},
                             Segment(kZero, kOne, ExtValue(k), ExtValue(k))};
  return Curve(Sequence(std::move(elems)), kZero, kOne, kZero);
}

Curve delayElement(const Rational& latency) {
  if (latency.isNegative())
    throw PreconditionError("delay element requires latency >= 0, got " +
                            latency.str());
  const ExtValue inf = ExtValue::plusInfinity();
  std::vector<Element> elems;
  elems.push_back(Point{kZero, ExtValue(kZero)});
  if (latency.sign() > 0) {
    elems.push_back(Segment(kZero, latency, ExtValue(kZero), ExtValue(kZero)));
    elems.push_back(Point{latency, ExtValue(kZero)});
  }
  // The pseudo-period must lie inside the infinite tail; a finite point at
  // the period start would repeat at every seam.
  elems.push_back(Segment(latency, latency + kOne, inf, inf));
  elems.push_back(Point{latency + kOne, inf});
  elems.push_back(Segment(latency + kOne, latency + Rational(2), inf, inf));
  return Curve(Sequence(std::move(elems)), latency + kOne, kOne, kZero);
}

Curve stair(const Rational& height, const Rational& period) {
  return shiftedStair(height, period, kZero);
}

Curve shiftedStair(const Rational& height, const Rational& period,
                   const Rational& shift) {
  if (height.sign() <= 0 || period.sign() <= 0)
    throw PreconditionError("stair curve requires height > 0 and period > 0");
  if (shift.isNegative())
    throw PreconditionError("stair shift must be >= 0, got " + shift.str());
  std::vector<Element> elems;
  elems.push_back(Point{kZero, ExtValue(kZero)});
  if (shift.sign() > 0) {
    elems.push_back(Segment(kZero, shift, ExtValue(kZero), ExtValue(kZero)));
    elems.push_back(Point{shift, ExtValue(kZero)});
  }
  elems.push_back(Segment(shift, shift + period, ExtValue(height),
                          ExtValue(height)));
  return Curve(Sequence(std::move(elems)), shift, period, height);
}

namespace {

// One affine piece of the running envelope result: min of the operand piece
// (value b, slope rho from x0) and the carried line (value base, slope R
// from x0), emitted as one or two segments depending on where they cross.
void emitEnvelopeSegment(std::vector<Element>& out, const Rational& x0,
                         const Rational& x1, const Rational& b,
                         const Rational& rho, const Rational& base,
                         const Rational& rateR) {
  auto uAt = [&](const Rational& x) { return b + rho * (x - x0); };
  auto lineAt = [&](const Rational& x) { return base + rateR * (x - x0); };
  auto emit = [&](const Rational& a0, const Rational& a1, const Rational& v0,
                  const Rational& v1) {
    out.push_back(Segment(a0, a1, ExtValue(v0), ExtValue(v1)));
  };

  std::optional<Rational> cross;
  if (rho != rateR) {
    const Rational x = x0 + (base - b) / (rho - rateR);
    if (x > x0 && x < x1) cross = x;
  }
  if (!cross) {
    // One line dominates throughout; compare at the midpoint to break ties
    // at the boundary exactly.
    const Rational mid = (x0 + x1) / Rational(2);
    if (uAt(mid) <= lineAt(mid))
      emit(x0, x1, b, uAt(x1));
    else
      emit(x0, x1, base, lineAt(x1));
    return;
  }
  const Rational vc = uAt(*cross);
  if (b <= base) {
    emit(x0, *cross, b, vc);
    out.push_back(Point{*cross, ExtValue(vc)});
    emit(*cross, x1, vc, lineAt(x1));
  } else {
    emit(x0, *cross, base, vc);
    out.push_back(Point{*cross, ExtValue(vc)});
    emit(*cross, x1, vc, uAt(x1));
  }
}

struct EnvelopeScan {
  Sequence result;
  // Envelope carry at the seam abscissas T_U + k * d_U, indexed by k; a seam
  // that is not a breakpoint of the window stays unset.
  std::vector<std::optional<Rational>> carryAtSeams;
};

// result(x) = min(U(x), min over anchors s <= x of U-ish(s) + R (x - s)),
// computed left to right over a materialized window of U.
EnvelopeScan envelopeScan(const Sequence& su, const Rational& rateR,
                          const Rational& tU, const Rational& dU) {
  std::vector<Element> out;
  std::vector<std::optional<Rational>> seams;
  std::optional<Rational> carry;  // envelope value at the current position

  for (const Element& e : su.elements()) {
    if (isPoint(e)) {
      const Point& p = asPoint(e);
      const Rational v = p.value.finite();
      carry = carry ? min(*carry, v) : v;
      out.push_back(Point{p.time, ExtValue(*carry)});
      if (p.time >= tU) {
        const Rational offset = (p.time - tU) / dU;
        if (offset.isInteger()) {
          const std::size_t k = offset.floor().get_ui();
          if (seams.size() <= k) seams.resize(k + 1);
          seams[k] = *carry;
        }
      }
    } else {
      const Segment& s = asSegment(e);
      const Rational b = s.rightLimitAtStart.finite();
      const Rational lle = s.leftLimitAtEnd.finite();
      const Rational rho = s.slope();
      const Rational base = carry ? min(*carry, b) : b;
      emitEnvelopeSegment(out, s.start, s.end, b, rho, base, rateR);
      carry = min(base + rateR * (s.end - s.start), lle);
    }
  }
  return EnvelopeScan{Sequence(std::move(out)), std::move(seams)};
}

}  // namespace

Curve convolveWithRateLatency(const Curve& u, const Rational& rate,
                              const Rational& latency) {
  if (rate.sign() <= 0)
    throw PreconditionError("convolution rate must be > 0, got " + rate.str());
  if (latency.isNegative())
    throw PreconditionError("convolution latency must be >= 0, got " +
                            latency.str());
  const Classification cls = classify(u);
  if (!cls.nonDecreasing || !cls.nonNegative)
    throw PreconditionError(
        "convolution operand must be non-negative and non-decreasing");
  if (cls.weaklyUltimatelyInfinite)
    throw PreconditionError(
        "convolution with an ultimately infinite operand is not supported");

  const Rational& tU = u.pseudoPeriodStart();
  const Rational& dU = u.pseudoPeriodLength();
  const Rational& cU = u.pseudoPeriodHeight();
  const Rational cV = min(cU, rate * dU);

  // Grow the window until one full period of the scan output repeats with
  // increment cV and the envelope carry state repeats with it; from such a
  // state the scan dynamics are shift-invariant, so the pattern holds
  // forever.
  Rational resultT = tU;
  std::optional<Sequence> resultSeq;
  for (int periods = 3; periods <= 4096; periods *= 2) {
    const Rational horizon = tU + Rational(periods) * dU;
    const EnvelopeScan scan =
        envelopeScan(u.cut(kZero, horizon, false), rate, tU, dU);
    const Rational tStar = horizon - dU - dU;
    if (tStar < tU) continue;
    const Sequence a =
        scan.result.restrict(tStar, tStar + dU, false).shifted(dU, cV);
    const Sequence b = scan.result.restrict(tStar + dU, horizon, false);
    const std::size_t k = ((tStar - tU) / dU).floor().get_ui();
    const bool carryRepeats = k + 1 < scan.carryAtSeams.size() &&
                              scan.carryAtSeams[k].has_value() &&
                              scan.carryAtSeams[k + 1].has_value() &&
                              *scan.carryAtSeams[k] + cV ==
                                  *scan.carryAtSeams[k + 1];
    if (mergeCollinear(a) == mergeCollinear(b) && carryRepeats) {
      resultT = tStar;
      resultSeq = scan.result.restrict(kZero, tStar + dU, false);
      break;
    }
  }
  if (!resultSeq)
    throw InvariantError("rate-latency convolution did not reach a periodic "
                         "regime");

  if (latency.isZero())
    return Curve(*resultSeq, resultT, dU, cV);

  // result(t) = U(0) on [0, latency], then the unshifted result delayed.
  const ExtValue u0 = u.valueAt(kZero);
  std::vector<Element> elems;
  elems.push_back(Point{kZero, u0});
  elems.push_back(Segment(kZero, latency, u0, u0));
  for (const Element& e : resultSeq->shifted(latency, kZero).elements())
    elems.push_back(e);
  return Curve(Sequence(std::move(elems)), resultT + latency, dU, cV);
}

ExtValue horizontalDeviation(const Curve& alpha, const Curve& beta) {
  const Classification ca = classify(alpha);
  const Classification cb = classify(beta);
  if (!ca.nonDecreasing || !cb.nonDecreasing)
    throw PreconditionError("horizontal deviation requires non-decreasing "
                            "curves");
  if (!ca.nonNegative)
    throw PreconditionError("horizontal deviation requires a non-negative "
                            "arrival curve");
  if (ca.weaklyUltimatelyInfinite)
    throw PreconditionError("horizontal deviation of an ultimately infinite "
                            "arrival curve is not supported");

  if (cb.ultimatelyConstant) {
    // beta never serves more than its plateau; alpha must settle below it.
    if (!ca.ultimatelyConstant ||
        ca.constantTail->value > cb.constantTail->value)
      return ExtValue::plusInfinity();
  } else if (!cb.weaklyUltimatelyInfinite &&
             alpha.growthRate() > beta.growthRate()) {
    return ExtValue::plusInfinity();
  }

  // gap(t) = beta_lpi(alpha(t)) - t; past T_G the gap shrinks by d_G - c_G
  // per period, so its supremum is attained on [0, T_G + d_G].
  const Curve gapCurve = compose(lowerPseudoInverse(beta), alpha);
  const Rational horizon =
      gapCurve.pseudoPeriodStart() + gapCurve.pseudoPeriodLength();
  const Sequence window = gapCurve.cut(kZero, horizon, true);
  Rational best(0);
  for (const Element& e : window.elements()) {
    if (isPoint(e)) {
      const Point& p = asPoint(e);
      best = max(best, p.value.finite() - p.time);
    } else {
      const Segment& s = asSegment(e);
      best = max(best, s.rightLimitAtStart.finite() - s.start);
      best = max(best, s.leftLimitAtEnd.finite() - s.end);
    }
  }
  return ExtValue(best);
}

void validateIwrrConfig(const IwrrConfig& cfg) {
  const std::size_t n = cfg.weights.size();
  if (n == 0) throw PreconditionError("IWRR config needs at least one flow");
  if (cfg.minPacket.size() != n || cfg.maxPacket.size() != n)
    throw PreconditionError("IWRR packet bound lists must match the number of "
                            "flows");
  if (cfg.flowIndex < 1 || cfg.flowIndex > n)
    throw PreconditionError("IWRR flow index out of range");
  for (std::size_t j = 0; j < n; ++j) {
    if (cfg.weights[j] <= 0)
      throw PreconditionError("IWRR weights must be positive");
    if (cfg.minPacket[j].sign() <= 0 || cfg.maxPacket[j] < cfg.minPacket[j])
      throw PreconditionError(
          "IWRR packet bounds must satisfy 0 < min <= max for every flow");
  }
  const Classification cls = classify(cfg.beta);
  if (!cls.nonDecreasing || cfg.beta.valueAt(kZero) != ExtValue(kZero))
    throw PreconditionError(
        "IWRR aggregate service curve must be non-decreasing with beta(0)=0");
}

std::int64_t iwrrPhi(std::int64_t p, std::int64_t wi, std::int64_t wj) {
  if (p < 0 || wi <= 0 || wj <= 0)
    throw PreconditionError("iwrrPhi requires p >= 0 and positive weights");
  const std::int64_t spare = wj - wi > 0 ? wj - wi : 0;
  const std::int64_t turn = std::min(p % wi + 1, wj);
  return (p / wi) * wj + spare + turn;
}

Rational iwrrPsi(const Rational& x, const IwrrConfig& cfg) {
  if (x.isNegative()) throw PreconditionError("iwrrPsi requires x >= 0");
  const std::size_t i = cfg.flowIndex - 1;
  const std::int64_t p = (x / cfg.minPacket[i]).floor().get_si();
  Rational sum = x;
  for (std::size_t j = 0; j < cfg.weights.size(); ++j) {
    if (j == i) continue;
    sum += Rational(iwrrPhi(p, cfg.weights[i], cfg.weights[j])) *
           cfg.maxPacket[j];
  }
  return sum;
}

Rational iwrrLtot(const IwrrConfig& cfg) {
  const std::size_t i = cfg.flowIndex - 1;
  Rational total = Rational(cfg.weights[i]) * cfg.minPacket[i];
  for (std::size_t j = 0; j < cfg.weights.size(); ++j)
    if (j != i) total += Rational(cfg.weights[j]) * cfg.maxPacket[j];
  return total;
}

Curve iwrrU(const IwrrConfig& cfg) {
  validateIwrrConfig(cfg);
  const std::size_t i = cfg.flowIndex - 1;
  const Rational lMin = cfg.minPacket[i];
  const Rational lTot = iwrrLtot(cfg);
  std::optional<Curve> sum;
  for (std::int64_t k = 0; k < cfg.weights[i]; ++k) {
    const Rational shift = iwrrPsi(Rational(k) * lMin, cfg);
    Curve term = shiftedStair(lMin, lTot, shift);
    sum = sum ? addCurves(*sum, term) : term;
  }
  return minimize(*sum);
}

Curve iwrrGamma(const IwrrConfig& cfg) {
  return convolveWithRateLatency(iwrrU(cfg), kOne, kZero);
}

Curve iwrrServiceCurve(const IwrrConfig& cfg, ComposeMode mode,
                       ComposeStats* stats) {
  return compose(iwrrGamma(cfg), cfg.beta, mode, stats);
}

}  // namespace upp
