#pragma once

#include <utility>
#include <vector>

#include "dualcanon/dual_matrix.hpp"
#include "dualcanon/dual_scalar.hpp"
#include "dualcanon/rational.hpp"

namespace dualcanon {

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first. The zero polynomial is the empty coefficient vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static QPoly constant(Rational c) { return QPoly({std::move(c)}); }
  static QPoly monomial(int deg, Rational c = Rational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& c, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  Rational eval(const Rational& x) const;
  QPoly monic() const;
  /// Quotient and remainder; divisor must be non-zero.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd.
QPoly poly_gcd(const QPoly& f, const QPoly& g);

struct BezoutResult {
  QPoly u, v, d;  // u f + v g = d = gcd(f, g), d monic
};
BezoutResult bezout(const QPoly& f, const QPoly& g);

/// Polynomial over the dual numbers, p = part0 + part1 * zeta.
struct DPoly {
  QPoly part0, part1;

  DPoly() = default;
  DPoly(QPoly p0, QPoly p1) : part0(std::move(p0)), part1(std::move(p1)) {}
  static DPoly classical(QPoly p) { return {std::move(p), QPoly()}; }

  int degree() const { return std::max(part0.degree(), part1.degree()); }
  bool is_zero() const { return part0.is_zero() && part1.is_zero(); }
  DualScalar coeff(int k) const { return {part0.coeff(k), part1.coeff(k)}; }

  friend DPoly operator+(const DPoly& a, const DPoly& b) {
    return {a.part0 + b.part0, a.part1 + b.part1};
  }
  friend DPoly operator*(const DPoly& a, const DPoly& b) {
    return {a.part0 * b.part0, a.part0 * b.part1 + a.part1 * b.part0};
  }
  friend bool operator==(const DPoly& a, const DPoly& b) {
    return a.part0 == b.part0 && a.part1 == b.part1;
  }
  friend bool operator!=(const DPoly& a, const DPoly& b) { return !(a == b); }

  DualScalar eval(const DualScalar& x) const;
};

/// Resultant of two dual polynomials as the determinant of their Sylvester
/// matrix (rows of f first). Degrees are taken over the dual coefficients.
DualScalar resultant(const DPoly& f, const DPoly& g);

/// Lifts the coprime classical factorization f.part0 = f0p * f0pp to an
/// exact factorization f = fp * fpp over the dual numbers, with
/// fp.part0 = f0p and fpp.part0 = f0pp. Throws NotCoprime.
std::pair<DPoly, DPoly> lift_factorization(const DPoly& f, const QPoly& f0p,
                                           const QPoly& f0pp);

struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
  bool complete = false;  // multiplicities sum to the degree
};
/// All rational roots with multiplicities, roots ascending. f must be
/// non-zero.
RationalRoots rational_roots(const QPoly& f);

/// Characteristic polynomial det(tE - A), monic of degree n.
QPoly char_poly(const KMatrix& a);
DPoly char_poly(const DualMatrix& a);

/// Evaluates a dual polynomial at a dual matrix.
DualMatrix eval_at(const DPoly& p, const DualMatrix& a);

}  // namespace dualcanon
