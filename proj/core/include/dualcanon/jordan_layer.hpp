#pragma once

#include <utility>
#include <vector>

#include "dualcanon/dual_matrix.hpp"
#include "dualcanon/nu_structure.hpp"
#include "dualcanon/spectral_split.hpp"

namespace dualcanon {

/// q_k = sum of the (k-1)-th subdiagonal of A1 (k = 1 is the main
/// diagonal); similarity invariants of J_{n,0} + A1 zeta.
struct TraceInvariants {
  std::vector<Rational> q;
};

struct JordanType {
  Partition nu;
  Rational alpha;
};

TraceInvariants q_traces(const KMatrix& a1);

/// Canonical form of A = J_{n,alpha} + A1 zeta: B = J_{n,alpha} + B1 zeta
/// with B1 supported on column 1, (B1)_{k,1} = q_k. Throws WrongShape when
/// the classical part is not a single Jordan block.
std::pair<DualMatrix, SimilarityWitness> single_block_canonical(
    const DualMatrix& a);

/// Canonical form of A = alpha E + A1 zeta: alpha E + J zeta with J the
/// Jordan form of A1 in normalized order (eigenvalues ascending, block
/// sizes descending). Throws IrrationalSpectrum.
DualMatrix scalar_case_canonical(const DualMatrix& a);

/// Jordan reduction of a nilpotent matrix: T invertible with
/// T A0 T^{-1} = J_nu. Throws NotNilpotent.
std::pair<KMatrix, Partition> nilpotent_jordan(const KMatrix& a0);

/// Jordan form of a classical matrix with rational spectrum: returns
/// (T, J) with T A T^{-1} = J, eigenvalues ascending and per-eigenvalue
/// block sizes descending. Throws IrrationalSpectrum.
std::pair<KMatrix, KMatrix> jordan_form_rational(const KMatrix& a);

}  // namespace dualcanon
