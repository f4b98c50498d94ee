#include "dualcanon/kmatrix.hpp"

namespace dualcanon {

Rational det(const KMatrix& a) {
  int n = a.order();
  KMatrix m = a;
  Rational d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rational inv = m.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col) * inv;
      for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return d;
}

KMatrix rref(const KMatrix& a, std::vector<int>* pivots) {
  KMatrix m = a;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rational inv = m.at(r, col).inverse();
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return m;
}

int rank(const KMatrix& a) {
  std::vector<int> piv;
  rref(a, &piv);
  return static_cast<int>(piv.size());
}

KMatrix inverse(const KMatrix& a) {
  int n = a.order();
  KMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  std::vector<int> piv;
  KMatrix r = rref(aug, &piv);
  if (static_cast<int>(piv.size()) != n || piv.back() != n - 1)
    throw NotInvertible("singular matrix");
  KMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = r.at(i, n + j);
  return out;
}

KMatrix null_space(const KMatrix& a) {
  std::vector<int> piv;
  KMatrix r = rref(a, &piv);
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int c = 0; c < a.cols(); ++c) {
      if (p < piv.size() && piv[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  KMatrix basis(a.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, static_cast<int>(k)) = Rational(1);
    for (size_t p = 0; p < piv.size(); ++p)
      basis.at(piv[p], static_cast<int>(k)) = -r.at(static_cast<int>(p), fc);
  }
  return basis;
}

KMatrix solve(const KMatrix& a, const KMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch();
  KMatrix aug(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  std::vector<int> piv;
  KMatrix r = rref(aug, &piv);
  // Inconsistent iff some pivot lands in the augmented part.
  for (int p : piv)
    if (p >= a.cols()) throw NotInvertible("inconsistent linear system");
  KMatrix x(a.cols(), b.cols());
  for (size_t p = 0; p < piv.size(); ++p)
    for (int j = 0; j < b.cols(); ++j)
      x.at(piv[p], j) = r.at(static_cast<int>(p), a.cols() + j);
  return x;
}

}  // namespace dualcanon
