#pragma once

// Exact elements of Q(phi), phi = (1 + sqrt 5) / 2, stored as a + b*phi.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace toricforge {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

enum class Field { Rational, Golden };

class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}
  Scalar(long v) : a_(v) {}
  Scalar(long long v) : a_(v) {}
  Scalar(const Integer& v) : a_(v) {}
  Scalar(Rational a) : a_(std::move(a)) {}
  Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar phi() { return Scalar(Rational(0), Rational(1)); }
  static Scalar fraction(long long num, long long den) { return Scalar(Rational(num, den)); }
  static Scalar parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& phi_part() const { return b_; }
  Field field() const { return b_ == 0 ? Field::Rational : Field::Golden; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_integer() const;

  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  // Galois conjugate: phi -> 1 - phi.
  Scalar conjugate() const { return Scalar(a_ + b_, -b_); }
  // Field norm x * conj(x) = a^2 + ab - b^2.
  Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
  Scalar inverse() const;
  Integer floor() const;
  // Representative of x mod 1 in [0, 1).
  Scalar frac() const { return *this - Scalar(floor()); }

  double to_double() const;
  template <class Real>
  Real to_real() const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Real a = Real(numerator(a_)) / Real(denominator(a_));
    Real b = Real(numerator(b_)) / Real(denominator(b_));
    Real phi = (Real(1) + sqrt(Real(5))) / Real(2);
    return a + b * phi;
  }

  // Canonical text "a + b*phi"; parse(str()) == *this.
  std::string str() const;
  // Display form for reports, e.g. "-2/φ", "1/φ²", "φ+1/φ" style where it fits.
  std::string pretty() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const { return Scalar(-a_, -b_); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

int scalar_sign(const Scalar& x);
std::ostream& operator<<(std::ostream& os, const Scalar& x);

Integer floor_div(const Integer& a, const Integer& b);
Integer lcm_of_denominators(const Scalar& x);
std::string rational_str(const Rational& r);

}  // namespace toricforge
