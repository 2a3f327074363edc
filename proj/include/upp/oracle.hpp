#pragma once

#include <random>

#include "upp/curve.hpp"

namespace upp::oracle {

// Definition-level reference implementations for differential testing. They
// walk the materialized elements of a curve and solve the affine piece that
// crosses the threshold exactly, so the answers are exact rationals; the
// horizon/step arguments bound the scan, they do not introduce tolerance.

struct ScanResult {
  enum class Kind { Value, PlusInfinity, BeyondHorizon } kind;
  Rational value;  // meaningful for Kind::Value

  static ScanResult of(Rational v) {
    return {Kind::Value, std::move(v)};
  }
  static ScanResult plusInfinity() { return {Kind::PlusInfinity, Rational(0)}; }
  static ScanResult beyondHorizon() {
    return {Kind::BeyondHorizon, Rational(0)};
  }

  bool isValue() const { return kind == Kind::Value; }
  bool isPlusInfinity() const { return kind == Kind::PlusInfinity; }
};

// inf { x | f(x) >= y }, by scanning the elements of f on [0, horizon].
// "beyond horizon" is reported when the threshold is not reached inside the
// window but f still grows; +inf when f provably never reaches it.
ScanResult lowerPseudoInverseAt(const Curve& f, const Rational& y,
                                const Rational& horizon, const Rational& step);

// sup { x | f(x) <= y } = inf { x | f(x) > y }, same scan conventions.
ScanResult upperPseudoInverseAt(const Curve& f, const Rational& y,
                                const Rational& horizon, const Rational& step);

// f(g(t)).
ExtValue composeAt(const Curve& f, const Curve& g, const Rational& t);

// inf_{0 <= s <= t} U(s) + R * max(t - s - theta, 0), evaluated over the
// breakpoints and one-sided limits of U plus the kink at s = t - theta. The
// objective is piecewise affine in s, so those candidates attain the exact
// infimum.
Rational convolveRateLatencyAt(const Curve& u, const Rational& rate,
                               const Rational& latency, const Rational& t);

// Random UPP curve generation for property tests. Coordinates use small
// denominators (<= 12) to keep hyperperiods and oracle scans desk-scale.
enum class RandomKind { Generic, UltimatelyConstant, WeaklyUltimatelyInfinite };

struct RandomOptions {
  RandomKind kind = RandomKind::Generic;
  int maxPieces = 8;
  double plateauProbability = 0.3;
  double jumpProbability = 0.3;
  bool forceLeftContinuous = false;
};

Curve randomCurve(std::mt19937_64& rng, const RandomOptions& opts = {});

}  // namespace upp::oracle
