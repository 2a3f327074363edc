#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace upp {

// Error hierarchy shared by the whole library. The CLI maps these onto
// distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (JSON, rational literals, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called on arguments violating its stated preconditions
// (non-monotone operand, division by zero, wUI inner function, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A structural invariant of a Sequence or Curve does not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Exact rational number, always stored in lowest terms with a positive
// denominator. Backed by GMP so coordinates can grow without overflow:
// composition multiplies periods by numerators/denominators of the operands'
// parameters, which blows past any fixed-width type quickly.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors int
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "p/q", "p", or a decimal like "3.25" (exact).
  static Rational fromString(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  // Numerator/denominator as integer-valued rationals, convenient when they
  // feed back into rational arithmetic (e.g. period computations).
  Rational numeratorAsRational() const;
  Rational denominatorAsRational() const;

  bool isZero() const { return sgn(v_) == 0; }
  bool isNegative() const { return sgn(v_) < 0; }
  bool isInteger() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class floor() const;
  mpz_class ceil() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Text form "p/q", or just "p" when the denominator is 1.
  std::string str() const;
  double toDouble() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational abs(const Rational& a);

// Least common multiple of two positive rationals:
// lcm(a, b) is the smallest positive rational that is an integer multiple of
// both. With a = p/q and c = r/s in lowest terms, lcm = lcm(p, r) / gcd(q, s).
Rational lcm(const Rational& a, const Rational& b);

// A rational extended with +inf / -inf, ordered -inf < finite < +inf.
// Sums of opposite infinities are reported as errors: they never arise from
// valid operator inputs, so hitting one indicates a bug upstream.
class ExtValue {
 public:
  ExtValue() : kind_(Kind::Finite) {}
  ExtValue(Rational r) : kind_(Kind::Finite), v_(std::move(r)) {}  // NOLINT
  ExtValue(long n) : kind_(Kind::Finite), v_(n) {}                 // NOLINT

  static ExtValue plusInfinity() { return ExtValue(Kind::PlusInf); }
  static ExtValue minusInfinity() { return ExtValue(Kind::MinusInf); }

  bool isFinite() const { return kind_ == Kind::Finite; }
  bool isPlusInfinity() const { return kind_ == Kind::PlusInf; }
  bool isMinusInfinity() const { return kind_ == Kind::MinusInf; }
  bool isInfinite() const { return kind_ != Kind::Finite; }

  // The finite value; precondition error if infinite.
  const Rational& finite() const;

  ExtValue operator-() const;
  friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
  friend ExtValue operator-(const ExtValue& a, const ExtValue& b);

  friend bool operator==(const ExtValue& a, const ExtValue& b);
  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);

  std::string str() const;

 private:
  enum class Kind { MinusInf, Finite, PlusInf };
  explicit ExtValue(Kind k) : kind_(k) {}
  Kind kind_;
  Rational v_;
};

std::ostream& operator<<(std::ostream& os, const ExtValue& v);

}  // namespace upp
