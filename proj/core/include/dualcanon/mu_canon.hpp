#pragma once

#include <utility>
#include <vector>

#include "dualcanon/index_set.hpp"
#include "dualcanon/kmatrix.hpp"

namespace dualcanon {

/// Position (r, s), 1-based, of a marked element: a_rs is the only non-zero
/// entry of the leading submatrix A([r], [s]).
struct MarkedPosition {
  int r = 0;
  int s = 0;
  friend bool operator==(const MarkedPosition& a, const MarkedPosition& b) {
    return a.r == b.r && a.s == b.s;
  }
  friend bool operator<(const MarkedPosition& a, const MarkedPosition& b) {
    return a.r != b.r ? a.r < b.r : a.s < b.s;
  }
};

/// Maximal chain of non-zero positions of a U_m matrix: consecutive
/// positions linked by i_{t+1} = j_t, the leading row strictly below all
/// later rows; closed iff it returns to the leading row.
struct Chain {
  std::vector<std::pair<int, int>> positions;  // 1-based (i, j)
  bool closed = false;
};

/// Lower triangular C and upper triangular Ctilde with equal non-zero
/// diagonals (mu = (1,...,1)); the witness equation is C A = B Ctilde.
struct MuMutualPair {
  KMatrix C, Ctilde;
};

struct MuWitness {
  MuMutualPair pair;
  /// Exact verification of C A = B Ctilde plus the structural constraints.
  bool verify(const KMatrix& a, const KMatrix& b,
              bool require_unit_diag = false) const;
};

std::vector<MarkedPosition> marked_positions(const KMatrix& a);
/// The marked position minimal in the row order; throws ZeroMatrix.
MarkedPosition minimal_marked(const KMatrix& a);

/// Minor map f_{R,S} for |R| = |S| <= 1.
KMatrix f_RS(const KMatrix& a, const IndexSet& R, const IndexSet& S);

/// A_{<R,S>} = Y_{R,S} H_s a_rs^{-1} for the minimal marked (r, s).
std::pair<KMatrix, MarkedPosition> reduced_matrix(const KMatrix& a);

struct UnitaryCanonResult {
  KMatrix U;  // member of U_m
  MuWitness witness;
};
/// Canonical representative under unitary mu-similarity (Prop 3.3).
UnitaryCanonResult unitary_canonical(const KMatrix& a);

bool is_in_Um(const KMatrix& a);
bool is_in_Rm(const KMatrix& a);

/// Chain decomposition of a U_m matrix; throws NotInUm.
std::vector<Chain> chains(const KMatrix& u);

/// Diagonal conjugation taking U in U_m to R_m; returns (Rm, Cdiag) with
/// Rm = Cdiag U Cdiag^{-1}.
std::pair<KMatrix, KMatrix> scale_to_Rm(const KMatrix& u);

struct MuCanonResult {
  KMatrix Rm;
  MuWitness witness;
};
/// Canonical representative under mu-similarity, mu = (1,...,1) (Thm 3.1).
MuCanonResult mu_canonical(const KMatrix& a);

/// Decides mu-similarity by exact linear algebra, independent of the
/// canonicalization path.
bool mu_similar_oracle(const KMatrix& a, const KMatrix& b);

}  // namespace dualcanon
