#pragma once

#include <string>

#include "dualcanon/dual_matrix.hpp"

namespace dualcanon {

/// Parses {"n": int, "part0": [[...]], "part1": [[...]]} with every entry a
/// rational string "p/q" (or "p"). Strict: unknown keys, wrong shapes and
/// non-string entries are rejected. Throws ParseError.
DualMatrix parse_matrix_document(const std::string& text);

/// Inverse of parse_matrix_document; round-trips bit-exactly.
std::string write_matrix_document(const DualMatrix& a, int indent = 2);

/// JSON array-of-arrays of rational strings (no wrapper object).
std::string write_kmatrix_json(const KMatrix& a);

}  // namespace dualcanon
