#pragma once

#include <ostream>

#include "dualcanon/rational.hpp"

namespace dualcanon {

/// Element a0 + a1*zeta of the dual numbers over the rationals, zeta^2 = 0.
/// Invertible iff a0 != 0.
struct DualScalar {
  Rational a0;
  Rational a1;

  DualScalar() = default;
  DualScalar(Rational classical, Rational dual = Rational(0))
      : a0(std::move(classical)), a1(std::move(dual)) {}

  bool is_zero() const { return a0.is_zero() && a1.is_zero(); }
  bool is_invertible() const { return !a0.is_zero(); }

  DualScalar operator-() const { return {-a0, -a1}; }

  friend DualScalar operator+(const DualScalar& x, const DualScalar& y) {
    return {x.a0 + y.a0, x.a1 + y.a1};
  }
  friend DualScalar operator-(const DualScalar& x, const DualScalar& y) {
    return {x.a0 - y.a0, x.a1 - y.a1};
  }
  friend DualScalar operator*(const DualScalar& x, const DualScalar& y) {
    return {x.a0 * y.a0, x.a0 * y.a1 + x.a1 * y.a0};
  }
  friend bool operator==(const DualScalar& x, const DualScalar& y) {
    return x.a0 == y.a0 && x.a1 == y.a1;
  }
  friend bool operator!=(const DualScalar& x, const DualScalar& y) {
    return !(x == y);
  }

  DualScalar inverse() const {
    if (a0.is_zero()) throw NotInvertible("dual scalar with zero classical part");
    Rational i = a0.inverse();
    return {i, -a1 * i * i};
  }

  /// Lexicographic (a0, a1) order; total order used for canonical sorting.
  friend bool operator<(const DualScalar& x, const DualScalar& y) {
    if (x.a0 != y.a0) return x.a0 < y.a0;
    return x.a1 < y.a1;
  }

  friend std::ostream& operator<<(std::ostream& os, const DualScalar& x) {
    return os << x.a0 << "+" << x.a1 << "z";
  }
};

inline DualScalar dual_mul(const DualScalar& x, const DualScalar& y) {
  return x * y;
}

inline DualScalar dual_inv(const DualScalar& x) { return x.inverse(); }

}  // namespace dualcanon
