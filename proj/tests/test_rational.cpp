#include "upp/rational.hpp"

#include <random>
#include <sstream>

#include "doctest.h"

using namespace upp;

TEST_CASE("construction normalizes to lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
  CHECK(Rational(0, 7).str() == "0");
}

TEST_CASE("exact field arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
  CHECK(Rational(1) / Rational(3) == Rational(1, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), PreconditionError);
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
}

TEST_CASE("numerator and denominator in lowest terms") {
  CHECK(Rational(3).numerator() == 3);
  CHECK(Rational(3).denominator() == 1);
  CHECK(Rational(6, 4).numerator() == 3);
  CHECK(Rational(6, 4).denominator() == 2);
  CHECK(Rational(0).numerator() == 0);
  CHECK(Rational(0).denominator() == 1);
}

TEST_CASE("round trip through addition is exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (!b.isZero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("scaling numerator and denominator together is identity") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 30), k(1, 9);
  for (int i = 0; i < 200; ++i) {
    const long p = num(rng), q = den(rng), m = k(rng);
    CHECK(Rational(p, q) == Rational(m * p, m * q));
  }
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("lcm of rationals") {
  CHECK(lcm(Rational(1, 2), Rational(1, 3)) == Rational(1));
  CHECK(lcm(Rational(3, 4), Rational(1, 2)) == Rational(3, 2));
  CHECK(lcm(Rational(2), Rational(3)) == Rational(6));
  // Both arguments divide the lcm an integer number of times.
  CHECK((lcm(Rational(3, 4), Rational(5, 6)) / Rational(3, 4)).isInteger());
  CHECK((lcm(Rational(3, 4), Rational(5, 6)) / Rational(5, 6)).isInteger());
}

TEST_CASE("text form") {
  CHECK(Rational(5, 3).str() == "5/3");
  CHECK(Rational(-5, 3).str() == "-5/3");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational::fromString("7/2") == Rational(7, 2));
  CHECK(Rational::fromString("-9") == Rational(-9));
  CHECK(Rational::fromString("3.25") == Rational(13, 4));
  CHECK_THROWS_AS(Rational::fromString("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::fromString("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::fromString(""), ParseError);
}

TEST_CASE("extended values order with infinities at the extremes") {
  const ExtValue minf = ExtValue::minusInfinity();
  const ExtValue pinf = ExtValue::plusInfinity();
  CHECK(pinf > ExtValue(Rational(5)));
  CHECK(minf < ExtValue(Rational(-1000000000L)));
  CHECK(ExtValue(Rational(1, 3)) == ExtValue(Rational(2, 6)));
  CHECK(pinf == ExtValue::plusInfinity());
  CHECK(minf < pinf);
}

TEST_CASE("extended value arithmetic") {
  const ExtValue pinf = ExtValue::plusInfinity();
  CHECK(pinf + ExtValue(Rational(3)) == pinf);
  CHECK(-pinf == ExtValue::minusInfinity());
  CHECK_THROWS_AS(pinf + ExtValue::minusInfinity(), PreconditionError);
  CHECK_THROWS_AS(pinf - pinf, PreconditionError);
  CHECK_THROWS_AS(ExtValue::plusInfinity().finite(), PreconditionError);
  std::ostringstream os;
  os << pinf << " " << ExtValue(Rational(1, 2));
  CHECK(os.str() == "inf 1/2");
}
