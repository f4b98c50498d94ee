#pragma once

#include "dualcanon/dual_scalar.hpp"
#include "dualcanon/kmatrix.hpp"

namespace dualcanon {

/// Square matrix A = part0 + part1*zeta over the dual numbers.
class DualMatrix {
 public:
  DualMatrix() = default;
  explicit DualMatrix(int n) : part0_(n, n), part1_(n, n) {}
  DualMatrix(KMatrix part0, KMatrix part1)
      : part0_(std::move(part0)), part1_(std::move(part1)) {
    if (!part0_.is_square() || part0_.rows() != part1_.rows() ||
        part1_.rows() != part1_.cols())
      throw DimensionMismatch("dual matrix parts must be square, same order");
  }
  /// Embeds a classical matrix (zero zeta-part).
  static DualMatrix classical(KMatrix part0) {
    KMatrix z(part0.rows(), part0.cols());
    return DualMatrix(std::move(part0), std::move(z));
  }
  static DualMatrix identity(int n) {
    return classical(KMatrix::identity(n));
  }

  int order() const { return part0_.rows(); }
  const KMatrix& part0() const { return part0_; }
  const KMatrix& part1() const { return part1_; }
  KMatrix& part0() { return part0_; }
  KMatrix& part1() { return part1_; }

  DualScalar at(int i, int j) const {
    return {part0_.at(i, j), part1_.at(i, j)};
  }
  void set(int i, int j, const DualScalar& x) {
    part0_.at(i, j) = x.a0;
    part1_.at(i, j) = x.a1;
  }

  bool is_zero() const { return part0_.is_zero() && part1_.is_zero(); }
  bool is_diagonal() const {
    return part0_.is_diagonal() && part1_.is_diagonal();
  }

  friend DualMatrix operator+(const DualMatrix& a, const DualMatrix& b) {
    return {a.part0_ + b.part0_, a.part1_ + b.part1_};
  }
  friend DualMatrix operator-(const DualMatrix& a, const DualMatrix& b) {
    return {a.part0_ - b.part0_, a.part1_ - b.part1_};
  }
  friend DualMatrix operator*(const DualMatrix& a, const DualMatrix& b) {
    return {a.part0_ * b.part0_, a.part0_ * b.part1_ + a.part1_ * b.part0_};
  }
  friend DualMatrix operator*(const DualScalar& c, const DualMatrix& a) {
    return {c.a0 * a.part0_, c.a0 * a.part1_ + c.a1 * a.part0_};
  }
  friend bool operator==(const DualMatrix& a, const DualMatrix& b) {
    return a.part0_ == b.part0_ && a.part1_ == b.part1_;
  }
  friend bool operator!=(const DualMatrix& a, const DualMatrix& b) {
    return !(a == b);
  }

  DualScalar trace() const {
    return {part0_.trace(), part1_.trace()};
  }

  DualMatrix submatrix_delete(const IndexSet& R, const IndexSet& S) const {
    return {part0_.submatrix_delete(R, S), part1_.submatrix_delete(R, S)};
  }
  DualMatrix submatrix_keep(const IndexSet& R, const IndexSet& S) const {
    return {part0_.submatrix_keep(R, S), part1_.submatrix_keep(R, S)};
  }

 private:
  KMatrix part0_, part1_;
};

/// det(A0 + A1 z) = det(A0) + z * sum_i det(A0 with row i replaced by A1's).
inline DualScalar det(const DualMatrix& a) {
  int n = a.order();
  Rational d0 = det(a.part0());
  Rational d1;
  for (int i = 0; i < n; ++i) {
    KMatrix m = a.part0();
    for (int j = 0; j < n; ++j) m.at(i, j) = a.part1().at(i, j);
    d1 += det(m);
  }
  return {d0, d1};
}

/// (A0 + A1 z)^{-1} = A0^{-1} - A0^{-1} A1 A0^{-1} z; needs det(A0) != 0.
inline DualMatrix mat_inv(const DualMatrix& a) {
  KMatrix i0 = inverse(a.part0());
  return {i0, -(i0 * (a.part1() * i0))};
}

inline DualMatrix mat_mul(const DualMatrix& a, const DualMatrix& b) {
  return a * b;
}
inline DualMatrix mat_add(const DualMatrix& a, const DualMatrix& b) {
  return a + b;
}
inline DualMatrix mat_scale(const DualScalar& c, const DualMatrix& a) {
  return c * a;
}
inline DualScalar trace(const DualMatrix& a) { return a.trace(); }

}  // namespace dualcanon
