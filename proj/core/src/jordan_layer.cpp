#include "dualcanon/jordan_layer.hpp"

#include "dualcanon/polyalg.hpp"

namespace dualcanon {

TraceInvariants q_traces(const KMatrix& a1) {
  int n = a1.order();
  TraceInvariants t;
  t.q.resize(n);
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) t.q[k - 1] += a1.at(i - 1, i - k);
  return t;
}

std::pair<DualMatrix, SimilarityWitness> single_block_canonical(
    const DualMatrix& a) {
  int n = a.order();
  Rational alpha = a.part0().at(0, 0);
  if (a.part0() != jordan_block(n, alpha)) throw WrongShape();
  const KMatrix& a1 = a.part1();
  // Solve b_{ij} = a_{ij} + d_{i,j-1} - d_{i+1,j} = 0 for j >= 2, diagonal
  // by diagonal. Each target diagonal determines the next unknown diagonal
  // of C1 by back-substitution; the free unknown of each superdiagonal
  // system stays 0.
  KMatrix c1(n, n);
  auto dval = [&](int i, int j) {
    return (i >= 1 && i <= n && j >= 1 && j <= n) ? c1.at(i - 1, j - 1)
                                                  : Rational(0);
  };
  for (int l = -(n - 1); l <= n - 2; ++l)
    for (int j = n; j >= 2; --j) {
      int i = j + l;
      if (i < 1 || i > n) continue;
      c1.at(i - 1, j - 2) = -a1.at(i - 1, j - 1) + dval(i + 1, j);
    }
  DualMatrix d(KMatrix::identity(n), c1);
  DualMatrix b = d * a * mat_inv(d);
  // Only column 1 of B1 survives, carrying the trace invariants.
  TraceInvariants q = q_traces(a1);
  if (b.part0() != a.part0())
    throw Error("internal: single-block conjugation moved the classical part");
  for (int i = 0; i < n; ++i) {
    if (b.part1().at(i, 0) != q.q[i])
      throw Error("internal: canonical column disagrees with q invariants");
    for (int j = 1; j < n; ++j)
      if (!b.part1().at(i, j).is_zero())
        throw Error("internal: single-block canonical form not column-1");
  }
  return {std::move(b), SimilarityWitness{std::move(d)}};
}

DualMatrix scalar_case_canonical(const DualMatrix& a) {
  int n = a.order();
  Rational alpha = a.part0().at(0, 0);
  if (a.part0() != alpha * KMatrix::identity(n)) throw WrongShape();
  auto [t, j] = jordan_form_rational(a.part1());
  (void)t;
  return DualMatrix(a.part0(), j);
}

namespace {

// Appends v to cols when it is independent of their span.
bool try_extend(std::vector<std::vector<Rational>>& cols,
                const std::vector<Rational>& v) {
  int n = static_cast<int>(v.size());
  KMatrix m(n, static_cast<int>(cols.size()) + 1);
  for (size_t c = 0; c < cols.size(); ++c)
    for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(c)) = cols[c][i];
  for (int i = 0; i < n; ++i) m.at(i, cols.size()) = v[i];
  if (rank(m) != static_cast<int>(cols.size()) + 1) return false;
  cols.push_back(v);
  return true;
}

std::vector<Rational> mat_apply(const KMatrix& a, const std::vector<Rational>& v) {
  int n = a.order();
  std::vector<Rational> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += a.at(i, j) * v[j];
  return out;
}

}  // namespace

std::pair<KMatrix, Partition> nilpotent_jordan(const KMatrix& a0) {
  int n = a0.order();
  std::vector<KMatrix> powers{KMatrix::identity(n)};
  while (static_cast<int>(powers.size()) <= n && !powers.back().is_zero())
    powers.push_back(powers.back() * a0);
  if (!powers.back().is_zero()) throw NotNilpotent();
  int p = static_cast<int>(powers.size()) - 1;
  // Jordan chains, built top height first. A chain is stored top-down:
  // chain[t] = a0^t * top.
  std::vector<std::vector<std::vector<Rational>>> chains;
  for (int k = p; k >= 1; --k) {
    std::vector<std::vector<Rational>> span;
    KMatrix lower = null_space(powers[k - 1]);
    for (int c = 0; c < lower.cols(); ++c) {
      std::vector<Rational> v(n);
      for (int i = 0; i < n; ++i) v[i] = lower.at(i, c);
      try_extend(span, v);
    }
    // Push existing chains down one level; their new bottoms join the span.
    for (auto& chain : chains) {
      chain.push_back(mat_apply(a0, chain.back()));
      try_extend(span, chain.back());
    }
    KMatrix ker = null_space(powers[k]);
    for (int c = 0; c < ker.cols(); ++c) {
      std::vector<Rational> v(n);
      for (int i = 0; i < n; ++i) v[i] = ker.at(i, c);
      if (try_extend(span, v)) chains.push_back({v});
    }
  }
  std::vector<int> parts;
  KMatrix s(n, n);
  int col = 0;
  for (const auto& chain : chains) {
    parts.push_back(static_cast<int>(chain.size()));
    // Kernel vector first, top last, matching the Jordan block layout.
    for (auto it = chain.rbegin(); it != chain.rend(); ++it, ++col)
      for (int i = 0; i < n; ++i) s.at(i, col) = (*it)[i];
  }
  Partition nu(parts);
  KMatrix t = inverse(s);
  if (t * a0 * s != jordan_matrix(nu, Rational(0)))
    throw Error("internal: nilpotent Jordan reduction failed verification");
  return {std::move(t), std::move(nu)};
}

std::pair<KMatrix, KMatrix> jordan_form_rational(const KMatrix& a) {
  int n = a.order();
  RationalRoots rr = rational_roots(char_poly(a));
  if (!rr.complete) throw IrrationalSpectrum();
  KMatrix v(n, n);
  int col = 0;
  for (const auto& [alpha, mult] : rr.roots) {
    (void)mult;
    KMatrix shifted = a - alpha * KMatrix::identity(n);
    KMatrix power = KMatrix::identity(n);
    for (int k = 0; k < n; ++k) power = power * shifted;
    KMatrix basis = null_space(power);
    for (int c = 0; c < basis.cols(); ++c, ++col)
      for (int i = 0; i < n; ++i) v.at(i, col) = basis.at(i, c);
  }
  KMatrix t1 = inverse(v);
  KMatrix m = t1 * a * v;
  KMatrix t(n, n), j(n, n);
  int off = 0;
  for (size_t b = 0; b < rr.roots.size(); ++b) {
    const auto& [alpha, mult] = rr.roots[b];
    IndexSet keep = IndexSet::range(off + 1, off + mult);
    KMatrix blk = m.submatrix_keep(keep, keep);
    auto [tb, nu] =
        nilpotent_jordan(blk - alpha * KMatrix::identity(mult));
    KMatrix jb = jordan_matrix(nu, alpha);
    for (int i = 0; i < mult; ++i)
      for (int k = 0; k < mult; ++k) {
        t.at(off + i, off + k) = tb.at(i, k);
        j.at(off + i, off + k) = jb.at(i, k);
      }
    off += mult;
  }
  t = t * t1;
  if (t * a * inverse(t) != j)
    throw Error("internal: Jordan form failed verification");
  return {std::move(t), std::move(j)};
}

}  // namespace dualcanon
