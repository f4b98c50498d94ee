#include "dualcanon/pipeline.hpp"

#include <random>

#include "dualcanon/polyalg.hpp"

namespace dualcanon {

std::string family_name(Family f) {
  switch (f) {
    case Family::N2_DIAG: return "N2_DIAG";
    case Family::N2_JORDAN: return "N2_JORDAN";
    case Family::N2_SCALAR: return "N2_SCALAR";
    case Family::N3_DIAG: return "N3_DIAG";
    case Family::N3_SPLIT_2PLUS1: return "N3_SPLIT_2PLUS1";
    case Family::N3_MIXED_21: return "N3_MIXED_21";
    case Family::N3_JORDAN: return "N3_JORDAN";
    case Family::N3_SCALAR: return "N3_SCALAR";
  }
  return "?";
}

namespace {

CanonicalForm finish(Family family, DualMatrix matrix, DualMatrix d,
                     const DualMatrix& input) {
  CanonicalForm out{family, std::move(matrix), SimilarityWitness{std::move(d)}};
  if (!out.witness.verify(input, out.matrix))
    throw Error("internal: canonical witness failed verification");
  return out;
}

CanonicalForm mixed_21_canonical(const DualMatrix& ap, const Partition& nu,
                                 const DualMatrix& td,
                                 const DualMatrix& input) {
  // ap = J_(2,1) + alpha E + A1' zeta. First drive (A1')_{P,Q} to its
  // mu-canonical form by conjugating with a lift of the mu-witness, then
  // clear the W_nu positions reachable by E + C1 zeta.
  PQSets pq = pq_sets(nu);
  KMatrix m = ap.part1().submatrix_delete(pq.P, pq.Q);
  MuCanonResult mc = mu_canonical(m);
  KMatrix b = lift(mc.witness.pair.C, mc.witness.pair.Ctilde, nu);
  DualMatrix bd = DualMatrix::classical(b);
  DualMatrix app = bd * ap * mat_inv(bd);
  const KMatrix& at = app.part1();
  KMatrix c1(3, 3);
  c1.at(0, 0) = -at.at(0, 1);
  c1.at(1, 0) = -at.at(1, 1);
  c1.at(2, 0) = -at.at(2, 1);
  c1.at(1, 2) = at.at(0, 2);
  DualMatrix d2(KMatrix::identity(3), c1);
  DualMatrix canon = d2 * app * mat_inv(d2);
  // Shape checks: only (1,1) and the (P,Q)-deleted 2x2 grid survive, the
  // latter equal to the R_2 representative.
  const KMatrix& b1 = canon.part1();
  if (canon.part0() != ap.part0() ||
      !b1.at(0, 1).is_zero() || !b1.at(0, 2).is_zero() ||
      !b1.at(1, 1).is_zero() || !b1.at(2, 1).is_zero() ||
      b1.submatrix_delete(pq.P, pq.Q) != mc.Rm ||
      b1.at(0, 0) != at.at(0, 0) + at.at(1, 1))
    throw Error("internal: mixed (2,1) canonical form has wrong shape");
  return finish(Family::N3_MIXED_21, std::move(canon), d2 * bd * td, input);
}

}  // namespace

CanonicalForm canonical_small(const DualMatrix& a) {
  int n = a.order();
  if (n != 2 && n != 3) throw UnsupportedOrder();
  RationalRoots rr = rational_roots(char_poly(a.part0()));
  if (!rr.complete) throw IrrationalSpectrum();
  int d = static_cast<int>(rr.roots.size());
  if (d == n) {
    auto [blocks, w] = spectral_split(a);
    // 1x1 blocks, eigenvalues ascending; already the sorted diagonal.
    DualMatrix canon = diagonal_canonical(assemble_blocks(blocks));
    return finish(n == 2 ? Family::N2_DIAG : Family::N3_DIAG,
                  std::move(canon), w.D, a);
  }
  if (d > 1) {
    // n = 3 with eigenvalue multiplicities {2,1}: canonicalize the 2x2
    // piece recursively, keep the eigenvalue-ascending block order.
    auto [blocks, w] = spectral_split(a);
    DualMatrix dtot = w.D;
    std::vector<SpectralBlock> out_blocks;
    for (auto& blk : blocks) {
      if (blk.size == 1) {
        out_blocks.push_back(blk);
        continue;
      }
      CanonicalForm sub = canonical_small(blk.block);
      SpectralBlock nb{blk.eigenvalue, blk.size, sub.matrix};
      out_blocks.push_back(std::move(nb));
      // Embed the sub-witness at this block's offset.
      int off = 0;
      for (const auto& prev : blocks) {
        if (&prev == &blk) break;
        off += prev.size;
      }
      DualMatrix emb = DualMatrix::identity(3);
      for (int i = 0; i < blk.size; ++i)
        for (int j = 0; j < blk.size; ++j)
          emb.set(off + i, off + j, sub.witness.D.at(i, j));
      dtot = emb * dtot;
    }
    return finish(Family::N3_SPLIT_2PLUS1, assemble_blocks(out_blocks),
                  std::move(dtot), a);
  }
  // Single eigenvalue: shift to nilpotent, normalize to J_nu.
  const Rational& alpha = rr.roots[0].first;
  auto [t, nu] = nilpotent_jordan(a.part0() - alpha * KMatrix::identity(n));
  DualMatrix td = DualMatrix::classical(std::move(t));
  DualMatrix ap = td * a * mat_inv(td);
  if (nu == Partition({n})) {
    auto [b, w2] = single_block_canonical(ap);
    return finish(n == 2 ? Family::N2_JORDAN : Family::N3_JORDAN,
                  std::move(b), w2.D * td, a);
  }
  if (nu.parts().front() == 1) {
    auto [t1, j] = jordan_form_rational(ap.part1());
    DualMatrix canon(ap.part0(), j);
    return finish(n == 2 ? Family::N2_SCALAR : Family::N3_SCALAR,
                  std::move(canon), DualMatrix::classical(t1) * td, a);
  }
  return mixed_21_canonical(ap, nu, td, a);
}

namespace {

SimilarResult decide_randomized(const DualMatrix& a, const DualMatrix& b,
                                int trials, std::uint64_t seed) {
  int n = a.order();
  // C A = B C over the duals, linear in (C0, C1).
  KMatrix sys(2 * n * n, 2 * n * n);
  auto c0_idx = [n](int i, int j) { return i * n + j; };
  auto c1_idx = [n](int i, int j) { return n * n + i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int eq0 = i * n + j, eq1 = n * n + i * n + j;
      for (int k = 0; k < n; ++k) {
        sys.at(eq0, c0_idx(i, k)) += a.part0().at(k, j);
        sys.at(eq0, c0_idx(k, j)) -= b.part0().at(i, k);
        sys.at(eq1, c0_idx(i, k)) += a.part1().at(k, j);
        sys.at(eq1, c1_idx(i, k)) += a.part0().at(k, j);
        sys.at(eq1, c1_idx(k, j)) -= b.part0().at(i, k);
        sys.at(eq1, c0_idx(k, j)) -= b.part1().at(i, k);
      }
    }
  KMatrix ns = null_space(sys);
  if (ns.cols() == 0) return {Verdict::NOT_SIMILAR, std::nullopt, 0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int trial = 1; trial <= trials; ++trial) {
    std::vector<Rational> coeff(ns.cols());
    for (auto& c : coeff) c = Rational(dist(rng));
    KMatrix c0(n, n), c1(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < ns.cols(); ++k) {
          c0.at(i, j) += ns.at(c0_idx(i, j), k) * coeff[k];
          c1.at(i, j) += ns.at(c1_idx(i, j), k) * coeff[k];
        }
    if (det(c0).is_zero()) continue;
    SimilarityWitness w{DualMatrix(std::move(c0), std::move(c1))};
    if (!w.verify(a, b))
      throw Error("internal: sampled conjugator failed verification");
    return {Verdict::SIMILAR, std::move(w), trial};
  }
  return {Verdict::PROBABLY_NOT_SIMILAR, std::nullopt, trials};
}

}  // namespace

SimilarResult similar(const DualMatrix& a, const DualMatrix& b, int trials,
                      std::uint64_t seed) {
  if (a.order() != b.order()) throw DimensionMismatch();
  int n = a.order();
  if (n == 1) {
    // Conjugation is trivial at order 1.
    if (a == b)
      return {Verdict::SIMILAR, SimilarityWitness{DualMatrix::identity(1)},
              0};
    return {Verdict::NOT_SIMILAR, std::nullopt, 0};
  }
  if (n <= 3) {
    try {
      CanonicalForm ca = canonical_small(a);
      CanonicalForm cb = canonical_small(b);
      if (ca.matrix == cb.matrix) {
        SimilarityWitness w{mat_inv(cb.witness.D) * ca.witness.D};
        if (!w.verify(a, b))
          throw Error("internal: composed witness failed verification");
        return {Verdict::SIMILAR, std::move(w), 0};
      }
      return {Verdict::NOT_SIMILAR, std::nullopt, 0};
    } catch (const IrrationalSpectrum&) {
      // Fall back to the randomized linear oracle.
    }
  }
  return decide_randomized(a, b, trials, seed);
}

DualMatrix fuzz_conjugate(const DualMatrix& a, std::uint64_t seed) {
  int n = a.order();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  KMatrix d0(n, n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d0.at(i, j) = Rational(dist(rng));
  } while (det(d0).is_zero());
  KMatrix d1(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d1.at(i, j) = Rational(dist(rng));
  DualMatrix d(std::move(d0), std::move(d1));
  return d * a * mat_inv(d);
}

}  // namespace dualcanon
