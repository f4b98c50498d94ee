#pragma once

#include <ostream>
#include <vector>

#include "dualcanon/index_set.hpp"
#include "dualcanon/rational.hpp"

namespace dualcanon {

/// Dense matrix over the rationals. Most of the theory lives on square
/// matrices; rectangular shapes appear only in submatrix extraction and
/// linear solving.
class KMatrix {
 public:
  KMatrix() : rows_(0), cols_(0) {}
  KMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static KMatrix identity(int n) {
    KMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }
  static KMatrix zero(int n) { return KMatrix(n, n); }
  static KMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static KMatrix diagonal(const std::vector<Rational>& d) {
    KMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  int order() const {
    if (!is_square()) throw DimensionMismatch("order of non-square matrix");
    return rows_;
  }

  // 0-based element access.
  Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i != j && !at(i, j).is_zero()) return false;
    return true;
  }

  KMatrix operator-() const {
    KMatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  friend KMatrix operator+(const KMatrix& a, const KMatrix& b) {
    a.check_same_shape(b);
    KMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }
  friend KMatrix operator-(const KMatrix& a, const KMatrix& b) {
    a.check_same_shape(b);
    KMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }
  friend KMatrix operator*(const KMatrix& a, const KMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch();
    KMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j)
          r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }
  friend KMatrix operator*(const Rational& c, const KMatrix& a) {
    KMatrix r = a;
    for (auto& x : r.e_) x *= c;
    return r;
  }
  friend bool operator==(const KMatrix& a, const KMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const KMatrix& a, const KMatrix& b) {
    return !(a == b);
  }

  KMatrix transpose() const {
    KMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Rational trace() const {
    Rational t;
    for (int i = 0; i < order(); ++i) t += at(i, i);
    return t;
  }

  /// A_{R,S}: delete rows in R and columns in S (1-based index sets).
  KMatrix submatrix_delete(const IndexSet& R, const IndexSet& S) const;
  /// A(R,S): keep only rows in R and columns in S (1-based index sets).
  KMatrix submatrix_keep(const IndexSet& R, const IndexSet& S) const;

  friend std::ostream& operator<<(std::ostream& os, const KMatrix& m) {
    for (int i = 0; i < m.rows_; ++i) {
      os << (i == 0 ? "[" : " ");
      for (int j = 0; j < m.cols_; ++j)
        os << m.at(i, j) << (j + 1 < m.cols_ ? " " : "");
      os << (i + 1 < m.rows_ ? ";\n" : "]");
    }
    return os;
  }

 private:
  void check_same_shape(const KMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
  }
  int rows_, cols_;
  std::vector<Rational> e_;
};

inline KMatrix KMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  KMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch();
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

inline KMatrix KMatrix::submatrix_delete(const IndexSet& R,
                                         const IndexSet& S) const {
  R.check_bounds(rows_);
  S.check_bounds(cols_);
  return submatrix_keep(R.complement(rows_), S.complement(cols_));
}

inline KMatrix KMatrix::submatrix_keep(const IndexSet& R,
                                       const IndexSet& S) const {
  R.check_bounds(rows_);
  S.check_bounds(cols_);
  KMatrix r(R.size(), S.size());
  for (int i = 0; i < R.size(); ++i)
    for (int j = 0; j < S.size(); ++j) r.at(i, j) = at(R[i] - 1, S[j] - 1);
  return r;
}

// Exact linear algebra over the rationals (Gaussian elimination throughout).
Rational det(const KMatrix& a);
KMatrix inverse(const KMatrix& a);  // throws NotInvertible
int rank(const KMatrix& a);
/// Reduced row echelon form; pivot column indices (0-based) are appended to
/// *pivots when non-null.
KMatrix rref(const KMatrix& a, std::vector<int>* pivots = nullptr);
/// Basis of the right null space, pivot-ordered for determinism; vectors are
/// the columns of the result.
KMatrix null_space(const KMatrix& a);
/// One solution of A x = b (b may have several columns). Throws
/// NotInvertible when the system is inconsistent.
KMatrix solve(const KMatrix& a, const KMatrix& b);

}  // namespace dualcanon
