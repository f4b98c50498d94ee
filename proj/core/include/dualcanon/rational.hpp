#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "dualcanon/errors.hpp"

namespace dualcanon {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p" or "p/q". Throws ParseError on malformed input or q = 0.
  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational::wrap(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw NotInvertible("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  Rational inverse() const {
    if (is_zero()) throw NotInvertible("inverse of zero");
    return Rational::wrap(1 / v_);
  }

  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

 private:
  static Rational wrap(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }
  mpq_class v_;  // GMP keeps canonical form through arithmetic
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  // mpq_set_str is permissive about whitespace; reject anything that is not
  // an optional sign followed by digits and at most one '/'.
  std::size_t slashes = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '-' ) {
      if (i != 0 && s[i - 1] != '/') throw ParseError("bad rational: " + s);
    } else if (c == '/') {
      ++slashes;
    } else if (c < '0' || c > '9') {
      throw ParseError("bad rational: " + s);
    }
  }
  if (slashes > 1 || s.back() == '/' || s.front() == '/')
    throw ParseError("bad rational: " + s);
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  if (v.get_den() == 0) throw ParseError("zero denominator: " + s);
  v.canonicalize();
  return Rational(std::move(v));
}

}  // namespace dualcanon
