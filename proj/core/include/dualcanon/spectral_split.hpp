#pragma once

#include <utility>
#include <vector>

#include "dualcanon/dual_matrix.hpp"

namespace dualcanon {

/// One block of a spectral splitting: the classical part of `block` has the
/// single eigenvalue `eigenvalue`.
struct SpectralBlock {
  Rational eigenvalue;
  int size = 0;
  DualMatrix block;
};

/// Conjugator recorded against a pair (A, B) with B = D A D^{-1}.
struct SimilarityWitness {
  DualMatrix D;
  bool verify(const DualMatrix& a, const DualMatrix& b) const;
};

/// Unique X with L X - X R = rhs; requires the spectra of L and R to be
/// disjoint (checked through the resultant of the characteristic
/// polynomials). Throws SpectraNotDisjoint.
KMatrix sylvester_solve(const KMatrix& l, const KMatrix& r,
                        const KMatrix& rhs);

/// Splits A into block-diagonal pieces along the distinct classical
/// eigenvalues (ascending), with an exact conjugation witness. Requires the
/// classical spectrum to be rational; throws IrrationalSpectrum.
std::pair<std::vector<SpectralBlock>, SimilarityWitness> spectral_split(
    const DualMatrix& a);

/// Direct sum of the blocks, in the given order.
DualMatrix assemble_blocks(const std::vector<SpectralBlock>& blocks);

/// Sorts the diagonal entries lexicographically by (classical part,
/// zeta part); a complete similarity invariant for diagonal matrices.
/// Throws NotDiagonal.
DualMatrix diagonal_canonical(const DualMatrix& a);

/// Factors D = (E + C1 zeta) B0 with B0 classical; returns (C1, B0).
/// Throws NotInvertible when det(D.part0) = 0.
std::pair<KMatrix, KMatrix> factor_stabilizer(const DualMatrix& d);

}  // namespace dualcanon
