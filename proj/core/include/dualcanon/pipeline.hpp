#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dualcanon/jordan_layer.hpp"
#include "dualcanon/mu_canon.hpp"
#include "dualcanon/spectral_split.hpp"

namespace dualcanon {

/// The canonical families for orders 2 and 3. DIAG: distinct classical
/// eigenvalues, sorted diagonal. SPLIT_2PLUS1: two eigenvalues at order 3,
/// a canonical 2x2 piece plus a 1x1. MIXED_21: single eigenvalue, Jordan
/// type (2,1). JORDAN: single Jordan block, zeta part on column 1. SCALAR:
/// scalar classical part, zeta part in Jordan form.
enum class Family {
  N2_DIAG,
  N2_JORDAN,
  N2_SCALAR,
  N3_DIAG,
  N3_SPLIT_2PLUS1,
  N3_MIXED_21,
  N3_JORDAN,
  N3_SCALAR,
};

std::string family_name(Family f);

struct CanonicalForm {
  Family family;
  DualMatrix matrix;
  SimilarityWitness witness;  // matrix = D * input * D^{-1}
};

/// Complete canonicalization for orders 2 and 3. Throws UnsupportedOrder
/// outside that range and IrrationalSpectrum when the classical spectrum is
/// not rational.
CanonicalForm canonical_small(const DualMatrix& a);

enum class Verdict { SIMILAR, NOT_SIMILAR, PROBABLY_NOT_SIMILAR };

struct SimilarResult {
  Verdict verdict;
  std::optional<SimilarityWitness> witness;  // set iff SIMILAR
  int trials = 0;  // samples drawn by the randomized path
};

/// Decides similarity. Orders <= 3 with rational spectra go through
/// canonical forms (exact). Otherwise the linear system C A = B C is solved
/// over the duals and its solution space sampled for an invertible point;
/// failure after `trials` samples yields PROBABLY_NOT_SIMILAR (NOT_SIMILAR
/// when the space is trivial).
SimilarResult similar(const DualMatrix& a, const DualMatrix& b,
                      int trials = 64, std::uint64_t seed = 1);

/// Seeded random conjugate D A D^{-1} with D invertible over the duals.
DualMatrix fuzz_conjugate(const DualMatrix& a, std::uint64_t seed);

}  // namespace dualcanon
