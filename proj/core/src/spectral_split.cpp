#include "dualcanon/spectral_split.hpp"

#include <algorithm>

#include "dualcanon/polyalg.hpp"

namespace dualcanon {

bool SimilarityWitness::verify(const DualMatrix& a,
                               const DualMatrix& b) const {
  if (D.order() != a.order() || a.order() != b.order()) return false;
  if (det(D.part0()).is_zero()) return false;
  return D * a * mat_inv(D) == b;
}

KMatrix sylvester_solve(const KMatrix& l, const KMatrix& r,
                        const KMatrix& rhs) {
  int p = l.order(), q = r.order();
  if (rhs.rows() != p || rhs.cols() != q) throw DimensionMismatch();
  DualScalar res = resultant(DPoly::classical(char_poly(l)),
                             DPoly::classical(char_poly(r)));
  if (res.a0.is_zero()) throw SpectraNotDisjoint();
  // Linearize over the entries of X, row-major.
  KMatrix sys(p * q, p * q), b(p * q, 1);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      int eq = i * q + j;
      for (int k = 0; k < p; ++k) sys.at(eq, k * q + j) += l.at(i, k);
      for (int k = 0; k < q; ++k) sys.at(eq, i * q + k) -= r.at(k, j);
      b.at(eq, 0) = rhs.at(i, j);
    }
  KMatrix x = solve(sys, b);
  KMatrix out(p, q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) out.at(i, j) = x.at(i * q + j, 0);
  return out;
}

std::pair<std::vector<SpectralBlock>, SimilarityWitness> spectral_split(
    const DualMatrix& a) {
  int n = a.order();
  RationalRoots rr = rational_roots(char_poly(a.part0()));
  if (!rr.complete) throw IrrationalSpectrum();
  // Change of basis stacking generalized eigenspace bases, eigenvalues
  // ascending (rational_roots already sorts them).
  KMatrix v(n, n);
  std::vector<int> sizes;
  int col = 0;
  for (const auto& [alpha, mult] : rr.roots) {
    KMatrix shifted = a.part0() - alpha * KMatrix::identity(n);
    KMatrix power = KMatrix::identity(n);
    for (int k = 0; k < n; ++k) power = power * shifted;
    KMatrix basis = null_space(power);
    if (basis.cols() != mult)
      throw Error("internal: generalized eigenspace dimension mismatch");
    for (int k = 0; k < mult; ++k, ++col)
      for (int i = 0; i < n; ++i) v.at(i, col) = basis.at(i, k);
    sizes.push_back(mult);
  }
  DualMatrix t = DualMatrix::classical(inverse(v));
  DualMatrix atil = t * a * mat_inv(t);
  // Kill the off-diagonal zeta blocks with D = E + C1 zeta.
  int m = static_cast<int>(sizes.size());
  std::vector<int> off(m + 1, 0);
  for (int i = 0; i < m; ++i) off[i + 1] = off[i] + sizes[i];
  KMatrix c1(n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      IndexSet ri = IndexSet::range(off[i] + 1, off[i + 1]);
      IndexSet rj = IndexSet::range(off[j] + 1, off[j + 1]);
      KMatrix x = sylvester_solve(atil.part0().submatrix_keep(ri, ri),
                                  atil.part0().submatrix_keep(rj, rj),
                                  atil.part1().submatrix_keep(ri, rj));
      for (int u = 0; u < sizes[i]; ++u)
        for (int w = 0; w < sizes[j]; ++w)
          c1.at(off[i] + u, off[j] + w) = x.at(u, w);
    }
  DualMatrix d1(KMatrix::identity(n), c1);
  DualMatrix split = d1 * atil * mat_inv(d1);
  std::vector<SpectralBlock> blocks;
  for (int i = 0; i < m; ++i) {
    IndexSet ri = IndexSet::range(off[i] + 1, off[i + 1]);
    SpectralBlock blk;
    blk.eigenvalue = rr.roots[i].first;
    blk.size = sizes[i];
    blk.block = split.submatrix_keep(ri, ri);
    blocks.push_back(std::move(blk));
  }
  SimilarityWitness w{d1 * t};
  if (!w.verify(a, assemble_blocks(blocks)))
    throw Error("internal: spectral_split witness failed verification");
  return {std::move(blocks), std::move(w)};
}

DualMatrix assemble_blocks(const std::vector<SpectralBlock>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.size;
  DualMatrix out(n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size; ++i)
      for (int j = 0; j < b.size; ++j)
        out.set(off + i, off + j, b.block.at(i, j));
    off += b.size;
  }
  return out;
}

DualMatrix diagonal_canonical(const DualMatrix& a) {
  if (!a.is_diagonal()) throw NotDiagonal();
  int n = a.order();
  std::vector<DualScalar> d;
  for (int i = 0; i < n; ++i) d.push_back(a.at(i, i));
  std::sort(d.begin(), d.end());
  DualMatrix out(n);
  for (int i = 0; i < n; ++i) out.set(i, i, d[i]);
  return out;
}

std::pair<KMatrix, KMatrix> factor_stabilizer(const DualMatrix& d) {
  KMatrix b0 = d.part0();
  KMatrix c1 = d.part1() * inverse(b0);
  return {std::move(c1), std::move(b0)};
}

}  // namespace dualcanon
