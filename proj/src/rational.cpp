#include "upp/rational.hpp"

#include <ostream>

namespace upp {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
  v_.canonicalize();
}

Rational Rational::fromString(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  const auto dot = text.find('.');
  try {
    if (slash != std::string::npos) {
      mpz_class num(text.substr(0, slash));
      mpz_class den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
      return Rational(num, den);
    }
    if (dot != std::string::npos) {
      // "a.b" == (a*10^k + b) / 10^k, exact.
      const std::string ip = text.substr(0, dot);
      const std::string fp = text.substr(dot + 1);
      if (fp.empty()) throw ParseError("trailing dot in \"" + text + "\"");
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
      const bool neg = !ip.empty() && ip[0] == '-';
      mpz_class whole(ip.empty() || ip == "-" ? std::string("0") : ip);
      mpz_class frac(fp);
      mpz_class num = whole * scale + (neg ? -frac : frac);
      return Rational(num, scale);
    }
    return Rational(mpz_class(text), mpz_class(1));
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational \"" + text + "\"");
  }
}

Rational Rational::numeratorAsRational() const {
  return Rational(numerator(), mpz_class(1));
}

Rational Rational::denominatorAsRational() const {
  return Rational(denominator(), mpz_class(1));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw PreconditionError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }
Rational abs(const Rational& a) { return a.isNegative() ? -a : a; }

Rational lcm(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw PreconditionError("lcm requires positive rationals");
  mpz_class num, den;
  mpz_lcm(num.get_mpz_t(), a.numerator().get_mpz_t(),
          b.numerator().get_mpz_t());
  mpz_gcd(den.get_mpz_t(), a.denominator().get_mpz_t(),
          b.denominator().get_mpz_t());
  return Rational(num, den);
}

const Rational& ExtValue::finite() const {
  if (kind_ != Kind::Finite)
    throw PreconditionError("expected a finite value, got " + str());
  return v_;
}

ExtValue ExtValue::operator-() const {
  switch (kind_) {
    case Kind::PlusInf:
      return minusInfinity();
    case Kind::MinusInf:
      return plusInfinity();
    default:
      return ExtValue(-v_);
  }
}

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
  if (a.isFinite() && b.isFinite()) return ExtValue(a.v_ + b.v_);
  if (a.isPlusInfinity() && b.isMinusInfinity())
    throw PreconditionError("+inf + -inf is undefined");
  if (a.isMinusInfinity() && b.isPlusInfinity())
    throw PreconditionError("-inf + +inf is undefined");
  if (a.isInfinite()) return a;
  return b;
}

ExtValue operator-(const ExtValue& a, const ExtValue& b) { return a + (-b); }

bool operator==(const ExtValue& a, const ExtValue& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != ExtValue::Kind::Finite) return true;
  return a.v_ == b.v_;
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  auto rank = [](ExtValue::Kind k) {
    return k == ExtValue::Kind::MinusInf ? -1
           : k == ExtValue::Kind::PlusInf ? 1
                                          : 0;
  };
  if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
  if (a.kind_ != ExtValue::Kind::Finite) return std::strong_ordering::equal;
  return a.v_ <=> b.v_;
}

std::string ExtValue::str() const {
  switch (kind_) {
    case Kind::PlusInf:
      return "inf";
    case Kind::MinusInf:
      return "-inf";
    default:
      return v_.str();
  }
}

std::ostream& operator<<(std::ostream& os, const ExtValue& v) {
  return os << v.str();
}

}  // namespace upp
