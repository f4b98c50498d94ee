#pragma once

#include <random>
#include <vector>

#include "dualcanon/dual_matrix.hpp"
#include "dualcanon/kmatrix.hpp"
#include "dualcanon/mu_canon.hpp"

namespace dualcanon::testing {

inline KMatrix km(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> out;
    for (long x : row) out.emplace_back(x);
    r.push_back(std::move(out));
  }
  return KMatrix::from_rows(r);
}

inline KMatrix random_kmatrix(int n, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  KMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rational(dist(rng));
  return m;
}

inline KMatrix random_invertible(int n, std::mt19937_64& rng, int bound = 9) {
  KMatrix m(n, n);
  do {
    m = random_kmatrix(n, rng, bound);
  } while (det(m).is_zero());
  return m;
}

inline DualMatrix random_dual(int n, std::mt19937_64& rng, int bound = 9) {
  return {random_kmatrix(n, rng, bound), random_kmatrix(n, rng, bound)};
}

inline DualMatrix random_invertible_dual(int n, std::mt19937_64& rng,
                                         int bound = 9) {
  return {random_invertible(n, rng, bound), random_kmatrix(n, rng, bound)};
}

/// Classical part with a rational spectrum: random integer triangular
/// matrix conjugated by a random invertible integer matrix.
inline DualMatrix random_rational_spectrum_dual(int n, std::mt19937_64& rng,
                                                int eig_bound = 2,
                                                int bound = 3) {
  std::uniform_int_distribution<int> eig(-eig_bound, eig_bound);
  std::uniform_int_distribution<int> entry(-bound, bound);
  KMatrix u(n, n);
  for (int i = 0; i < n; ++i) {
    u.at(i, i) = Rational(eig(rng));
    for (int j = i + 1; j < n; ++j) u.at(i, j) = Rational(entry(rng));
  }
  KMatrix t = random_invertible(n, rng, bound);
  return {t * u * inverse(t), random_kmatrix(n, rng, bound)};
}

/// Random mu-mutual pair for mu = (1,...,1): lower C and upper Ctilde with
/// equal non-zero diagonals.
inline MuMutualPair random_mu_mutual(int m, std::mt19937_64& rng,
                                     int bound = 5) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::uniform_int_distribution<int> nz(1, bound);
  std::uniform_int_distribution<int> sign(0, 1);
  KMatrix c(m, m), ct(m, m);
  for (int i = 0; i < m; ++i) {
    Rational d((sign(rng) ? 1 : -1) * nz(rng));
    c.at(i, i) = d;
    ct.at(i, i) = d;
    for (int j = 0; j < i; ++j) c.at(i, j) = Rational(entry(rng));
    for (int j = i + 1; j < m; ++j) ct.at(i, j) = Rational(entry(rng));
  }
  return {std::move(c), std::move(ct)};
}

}  // namespace dualcanon::testing
