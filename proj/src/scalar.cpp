#include "toricforge/scalar.hpp"

#include "toricforge/error.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace toricforge {

namespace {

constexpr double kPhi = 1.6180339887498948482;

int rational_sign(const Rational& r) { return r.sign(); }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, "scalar '" + std::string(s_) + "': " + what + " at offset " +
                                      std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept("+")) {
        v += term();
      } else if (accept("-")) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept("*")) {
        v *= unary();
      } else if (accept("/")) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return primary();
  }

  Scalar primary() {
    skip_ws();
    if (accept("(")) {
      Scalar v = expr();
      if (!accept(")")) fail("expected ')'");
      return v;
    }
    if (accept("phi") || accept("\xCF\x86")) return Scalar::phi();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number, 'phi' or '('");
    Integer n(std::string(s_.substr(start, pos_ - start)));
    // Implicit product such as "2phi".
    skip_ws();
    if (s_.substr(pos_, 3) == "phi") {
      pos_ += 3;
      return Scalar(n) * Scalar::phi();
    }
    return Scalar(n);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string coefficient_prefix(const Rational& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return rational_str(c);
}

}  // namespace

std::string rational_str(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

Integer lcm_of_denominators(const Scalar& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  return lcm(denominator(x.rational_part()), denominator(x.phi_part()));
}

bool Scalar::is_integer() const {
  using boost::multiprecision::denominator;
  return b_ == 0 && denominator(a_) == 1;
}

int Scalar::sign() const {
  int sa = rational_sign(a_);
  int sb = rational_sign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a + b*phi = (p + q*sqrt5) / 2 with p = 2a + b, q = b.
  Rational p = 2 * a_ + b_;
  const Rational& q = b_;
  int sp = rational_sign(p);
  if (sp == 0 || sp == sb) return sb;
  Rational lhs = p * p;
  Rational rhs = 5 * q * q;
  return lhs > rhs ? sp : sb;
}

int scalar_sign(const Scalar& x) { return x.sign(); }

Scalar Scalar::inverse() const {
  Rational n = norm();
  if (n == 0) throw Error(ErrorCode::Singular, "inverse of zero scalar");
  // (a + b*phi)^{-1} = (a + b - b*phi) / (a^2 + ab - b^2)
  return Scalar((a_ + b_) / n, -b_ / n);
}

Integer Scalar::floor() const {
  double d = to_double();
  Integer f(static_cast<long long>(std::floor(d)));
  if (!std::isfinite(d) || std::fabs(d) > 1e15) {
    // Large magnitude: bisect on exact comparisons.
    Integer lo = -1, hi = 1;
    while (Scalar(lo) > *this) lo *= 2;
    while (Scalar(hi) <= *this) hi *= 2;
    while (hi - lo > 1) {
      Integer mid = floor_div(lo + hi, 2);
      if (Scalar(mid) <= *this) lo = mid; else hi = mid;
    }
    return lo;
  }
  while (Scalar(f) > *this) f -= 1;
  while (Scalar(f + 1) <= *this) f += 1;
  return f;
}

double Scalar::to_double() const {
  return static_cast<double>(a_) + static_cast<double>(b_) * kPhi;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ + bd;
  Rational b = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.b_ == 0) {
    if (o.a_ == 0) throw Error(ErrorCode::Singular, "division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::parse(std::string_view text) { return Parser(text).run(); }

std::string Scalar::str() const {
  if (b_ == 0) return rational_str(a_);
  std::string phi_term = coefficient_prefix(b_) + (b_ == 1 || b_ == -1 ? "phi" : "*phi");
  if (a_ == 0) return phi_term;
  if (b_ < 0) {
    Rational mb = -b_;
    return rational_str(a_) + " - " + coefficient_prefix(mb) + (mb == 1 ? "phi" : "*phi");
  }
  return rational_str(a_) + " + " + phi_term;
}

std::string Scalar::pretty() const {
  if (b_ == 0) return rational_str(a_);
  static const char* const kPow[] = {"", "φ", "φ²", "φ³"};
  Scalar p = Scalar::phi();
  Scalar up = p, down = p.inverse();
  for (int m = 1; m <= 3; ++m) {
    Scalar hi = *this / up;
    if (hi.is_rational()) {
      const Rational& c = hi.a_;
      return coefficient_prefix(c) + kPow[m];
    }
    Scalar lo = *this / down;
    if (lo.is_rational()) {
      const Rational& c = lo.a_;
      using boost::multiprecision::denominator;
      using boost::multiprecision::numerator;
      std::string den = denominator(c) == 1 ? std::string(kPow[m])
                                            : "(" + denominator(c).str() + kPow[m] + ")";
      return numerator(c).str() + "/" + den;
    }
    up *= p;
    down /= p;
  }
  std::string phi_term = (b_ == 1 ? "" : (b_ == -1 ? "-" : rational_str(b_))) + std::string("φ");
  if (a_ == 0) return phi_term;
  if (b_ < 0) {
    Rational mb = -b_;
    return rational_str(a_) + "-" + (mb == 1 ? "" : rational_str(mb)) + "φ";
  }
  return rational_str(a_) + "+" + phi_term;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace toricforge
