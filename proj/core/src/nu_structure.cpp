#include "dualcanon/nu_structure.hpp"

namespace dualcanon {

std::vector<int> Partition::multiplicities() const {
  std::vector<int> out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i == 0 || parts_[i] != parts_[i - 1])
      out.push_back(1);
    else
      ++out.back();
  }
  return out;
}

std::vector<int> Partition::distinct_parts() const {
  std::vector<int> out;
  for (size_t i = 0; i < parts_.size(); ++i)
    if (i == 0 || parts_[i] != parts_[i - 1]) out.push_back(parts_[i]);
  return out;
}

KMatrix jordan_block(int n, const Rational& alpha) {
  KMatrix j(n, n);
  for (int i = 0; i < n; ++i) {
    j.at(i, i) = alpha;
    if (i + 1 < n) j.at(i, i + 1) = Rational(1);
  }
  return j;
}

KMatrix jordan_matrix(const Partition& nu, const Rational& alpha) {
  int n = nu.n();
  KMatrix j(n, n);
  int off = 0;
  for (int p : nu.parts()) {
    for (int i = 0; i < p; ++i) {
      j.at(off + i, off + i) = alpha;
      if (i + 1 < p) j.at(off + i, off + i + 1) = Rational(1);
    }
    off += p;
  }
  return j;
}

PQSets pq_sets(const Partition& nu) {
  PQSets out;
  std::vector<int> p, q;
  int off = 0;
  for (int part : nu.parts()) {
    for (int i = 1; i < part; ++i) {
      p.push_back(off + i);      // rows 1..part-1 of the block carry a 1
      q.push_back(off + i + 1);  // columns 2..part
    }
    off += part;
  }
  out.P = IndexSet(std::move(p));
  out.Q = IndexSet(std::move(q));
  out.r = out.P.size();
  out.m = nu.n() - out.r;
  return out;
}

std::vector<std::pair<int, int>> wnu_basis(const Partition& nu) {
  PQSets pq = pq_sets(nu);
  int n = nu.n();
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (pq.P.contains(i) || pq.Q.contains(j)) out.emplace_back(i, j);
  return out;
}

namespace {

// Forced-zero test for an entry of a regular k x l block (1-based local
// indices).
bool regular_zero(int i, int j, int k, int l) {
  if (i > j) return true;
  if (k > l && i > l) return true;
  if (k < l && j <= l - k) return true;
  return false;
}

bool block_is_regular(const KMatrix& b, int row_off, int col_off, int k,
                      int l) {
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j)
      if (regular_zero(i, j, k, l) &&
          !b.at(row_off + i - 1, col_off + j - 1).is_zero())
        return false;
  // Constant diagonals.
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j)
      if (i + 1 <= k && j + 1 <= l &&
          b.at(row_off + i - 1, col_off + j - 1) !=
              b.at(row_off + i, col_off + j))
        return false;
  return true;
}

}  // namespace

bool is_in_Bnu(const KMatrix& b, const Partition& nu, bool* invertible) {
  if (b.order() != nu.n()) throw DimensionMismatch();
  const auto& parts = nu.parts();
  for (int u = 0; u < nu.count(); ++u)
    for (int v = 0; v < nu.count(); ++v)
      if (!block_is_regular(b, nu.sigma(u), nu.sigma(v), parts[u], parts[v]))
        return false;
  if (invertible) *invertible = !det(b).is_zero();
  return true;
}

std::pair<KMatrix, KMatrix> restrict_pq(const KMatrix& b,
                                        const Partition& nu) {
  PQSets pq = pq_sets(nu);
  return {b.submatrix_delete(pq.P, pq.P), b.submatrix_delete(pq.Q, pq.Q)};
}

bool is_mu_mutual(const KMatrix& c, const KMatrix& ctilde,
                  const std::vector<int>& mu, bool require_unit_diag) {
  int m = 0;
  for (int s : mu) m += s;
  if (!c.is_square() || c.order() != m || !ctilde.is_square() ||
      ctilde.order() != m)
    return false;
  std::vector<int> group(m);  // block index of each row/column
  {
    int g = 0, left = mu.empty() ? 0 : mu[0];
    for (int i = 0; i < m; ++i) {
      while (left == 0) left = mu[static_cast<size_t>(++g)];
      group[i] = g;
      --left;
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (group[i] < group[j] && !c.at(i, j).is_zero()) return false;
      if (group[i] > group[j] && !ctilde.at(i, j).is_zero()) return false;
      if (group[i] == group[j]) {
        if (c.at(i, j) != ctilde.at(i, j)) return false;
        if (require_unit_diag &&
            c.at(i, j) != (i == j ? Rational(1) : Rational(0)))
          return false;
      }
    }
  return !det(c).is_zero() && !det(ctilde).is_zero();
}

KMatrix lift(const KMatrix& c, const KMatrix& ctilde, const Partition& nu) {
  std::vector<int> mu = nu.multiplicities();
  if (!is_mu_mutual(c, ctilde, mu)) throw NotMuMutual();
  const auto& parts = nu.parts();
  int m = nu.count();
  KMatrix b(nu.n(), nu.n());
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      int k = parts[u], l = parts[v];
      int ro = nu.sigma(u), co = nu.sigma(v);
      if (k == l) {
        // Square block: constant main diagonal (both corners survive).
        const Rational& val = c.at(u, v);
        for (int d = 0; d < k; ++d) b.at(ro + d, co + d) = val;
      } else if (k > l) {
        // Tall block: only the left-upper corner survives (in B_Q).
        const Rational& val = ctilde.at(u, v);
        for (int d = 0; d < l; ++d) b.at(ro + d, co + d) = val;
      } else {
        // Wide block: only the right-lower corner survives (in B_P).
        const Rational& val = c.at(u, v);
        for (int d = 0; d < k; ++d) b.at(ro + d, co + d + (l - k)) = val;
      }
    }
  return b;
}

bool det_identities_check(const KMatrix& b, const Partition& nu) {
  bool inv = false;
  if (!is_in_Bnu(b, nu, &inv)) throw Error("matrix not in \\bar B_nu");
  auto [bp, bq] = restrict_pq(b, nu);
  (void)bp;
  std::vector<int> alphas = nu.distinct_parts();
  std::vector<int> mults = nu.multiplicities();
  Rational rhs(1);
  int off = 0;
  for (size_t i = 0; i < alphas.size(); ++i) {
    IndexSet keep = IndexSet::range(off + 1, off + mults[i]);
    Rational blk = det(bq.submatrix_keep(keep, keep));
    for (int e = 0; e < alphas[i]; ++e) rhs *= blk;
    off += mults[i];
  }
  return det(b) == rhs;
}

KMatrix random_bnu(const Partition& nu, std::mt19937_64& rng,
                   bool require_invertible, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  const auto& parts = nu.parts();
  int m = nu.count();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    KMatrix b(nu.n(), nu.n());
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) {
        int k = parts[u], l = parts[v];
        int ro = nu.sigma(u), co = nu.sigma(v);
        int omin = std::max(0, l - k);
        for (int o = omin; o < l; ++o) {
          Rational val(dist(rng));
          for (int i = 1; i <= k && i + o <= l; ++i)
            b.at(ro + i - 1, co + i + o - 1) = val;
        }
      }
    if (!require_invertible || !det(b).is_zero()) return b;
  }
  throw Error("failed to sample an invertible B_nu member");
}

}  // namespace dualcanon
