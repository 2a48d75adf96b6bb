#include "doctest.h"

#include "toricforge/error.hpp"
#include "toricforge/scalar.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

using namespace toricforge;

namespace {

using Float200 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<200, boost::multiprecision::digit_base_2>>;

int float_sign(const Scalar& x) {
  Float200 v = x.to_real<Float200>();
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Scalar random_golden(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("sign of simple values") {
  CHECK(scalar_sign(Scalar(1)) == 1);
  CHECK(scalar_sign(Scalar(-2) + Scalar::phi()) == -1);
  CHECK(scalar_sign(Scalar(2) - Scalar::phi()) == 1);
  CHECK(scalar_sign(Scalar(0)) == 0);
}

TEST_CASE("sign agrees with 200-bit evaluation") {
  std::mt19937_64 rng(20261015);
  for (int i = 0; i < 10000; ++i) {
    Scalar x = random_golden(rng, i < 5000 ? 50 : 100000);
    REQUIRE(scalar_sign(x) == float_sign(x));
  }
  // Near-cancellation: Fibonacci ratios approximating phi.
  Integer f0 = 1, f1 = 1;
  for (int i = 0; i < 80; ++i) {
    Scalar x = Scalar(Rational(f1, f0)) - Scalar::phi();
    REQUIRE(scalar_sign(x) == float_sign(x));
    Integer t = f0 + f1;
    f0 = f1;
    f1 = t;
  }
}

TEST_CASE("multiplication uses phi^2 = phi + 1") {
  Scalar p = Scalar::phi();
  CHECK(p * p == p + 1);
  CHECK(p.inverse() == p - 1);
  CHECK(Scalar(1) / p + 1 == p);
  Scalar x(Rational(3, 2), Rational(-5, 7)), y(Rational(1, 3), Rational(2));
  Rational a = x.rational_part(), b = x.phi_part(), c = y.rational_part(), d = y.phi_part();
  CHECK(x * y == Scalar(a * c + b * d, a * d + b * c + b * d));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Scalar x = random_golden(rng, 30), y = random_golden(rng, 30), z = random_golden(rng, 30);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
  }
}

TEST_CASE("field tag") {
  CHECK(Scalar::fraction(1, 2).field() == Field::Rational);
  CHECK(Scalar::phi().field() == Field::Golden);
  CHECK((Scalar::phi() - Scalar::phi()).field() == Field::Rational);
}

TEST_CASE("text syntax round-trips") {
  CHECK(Scalar::parse("3") == Scalar(3));
  CHECK(Scalar::parse("-3/4") == Scalar::fraction(-3, 4));
  CHECK(Scalar::parse("1/2 + 3/5*phi") == Scalar(Rational(1, 2), Rational(3, 5)));
  CHECK(Scalar::parse(" -1/2 - phi ") == Scalar(Rational(-1, 2), Rational(-1)));
  CHECK(Scalar::parse("2/phi") == Scalar(2) / Scalar::phi());
  CHECK(Scalar::parse("2*phi") == Scalar(0, 2));
  CHECK(Scalar::parse("(phi+1)/2") == (Scalar::phi() + 1) / 2);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Scalar x = random_golden(rng, 1000);
    CHECK(Scalar::parse(x.str()) == x);
  }
  CHECK_THROWS_AS(Scalar::parse("1/"), Error);
  CHECK_THROWS_AS(Scalar::parse("phi phi"), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
}

TEST_CASE("canonical text") {
  CHECK(Scalar(Rational(2), Rational(-2)).str() == "2 - 2*phi");
  CHECK(Scalar::phi().str() == "phi");
  CHECK(Scalar(0, 2).str() == "2*phi");
  CHECK(Scalar::fraction(-1, 3).str() == "-1/3");
}

TEST_CASE("display form") {
  Scalar p = Scalar::phi();
  CHECK((Scalar(-2) / p).pretty() == "-2/φ");
  CHECK((Scalar(1) / (p * p)).pretty() == "1/φ²");
  CHECK((Scalar(2) * p).pretty() == "2φ");
  CHECK(Scalar(3).pretty() == "3");
}

TEST_CASE("floor and fractional part") {
  Scalar p = Scalar::phi();
  CHECK(p.floor() == 1);
  CHECK((-p).floor() == -2);
  CHECK((Scalar(2) * p).frac() == Scalar(2) * p - 3);
  CHECK(Scalar(-3).floor() == -3);
  CHECK(Scalar::fraction(-1, 2).frac() == Scalar::fraction(1, 2));
  Scalar big = Scalar(Integer("123456789012345678901234567890")) + p;
  CHECK(big.floor() == Integer("123456789012345678901234567891"));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    Scalar x = random_golden(rng, 200);
    Scalar f(x.floor());
    CHECK(f <= x);
    CHECK(x < f + 1);
  }
}
