#include "dualcanon/mu_canon.hpp"

#include <algorithm>
#include <map>

namespace dualcanon {

bool MuWitness::verify(const KMatrix& a, const KMatrix& b,
                       bool require_unit_diag) const {
  const KMatrix& c = pair.C;
  const KMatrix& ct = pair.Ctilde;
  int m = a.order();
  if (c.order() != m || ct.order() != m || b.order() != m) return false;
  for (int i = 0; i < m; ++i) {
    if (c.at(i, i) != ct.at(i, i) || c.at(i, i).is_zero()) return false;
    if (require_unit_diag && c.at(i, i) != Rational(1)) return false;
    for (int j = i + 1; j < m; ++j)
      if (!c.at(i, j).is_zero() || !ct.at(j, i).is_zero()) return false;
  }
  return c * a == b * ct;
}

std::vector<MarkedPosition> marked_positions(const KMatrix& a) {
  int m = a.order();
  std::vector<MarkedPosition> out;
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      if (a.at(r, s).is_zero()) continue;
      bool marked = true;
      for (int i = 0; i <= r && marked; ++i)
        for (int j = 0; j <= s && marked; ++j)
          if ((i != r || j != s) && !a.at(i, j).is_zero()) marked = false;
      if (marked) out.push_back({r + 1, s + 1});
    }
  std::sort(out.begin(), out.end());
  return out;
}

MarkedPosition minimal_marked(const KMatrix& a) {
  int m = a.order();
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      if (!a.at(r, s).is_zero()) return {r + 1, s + 1};
  throw ZeroMatrix();
}

KMatrix f_RS(const KMatrix& a, const IndexSet& R, const IndexSet& S) {
  int m = a.order();
  R.check_bounds(m);
  S.check_bounds(m);
  if (R.size() != S.size()) throw UnsupportedCardinality();
  if (R.empty()) return a;
  if (R.size() > 1) throw UnsupportedCardinality();
  int r = R[0], s = S[0];
  KMatrix y(m, m);
  y.at(r - 1, s - 1) = Rational(1);
  for (int k = 1; k <= m; ++k) {
    if (k == r) continue;
    for (int l = 1; l <= m; ++l) {
      if (l == s) continue;
      IndexSet rows{r, k}, cols{s, l};
      y.at(k - 1, l - 1) = det(a.submatrix_keep(rows, cols));
    }
  }
  return y;
}

std::pair<KMatrix, MarkedPosition> reduced_matrix(const KMatrix& a) {
  MarkedPosition p = minimal_marked(a);
  int m = a.order();
  KMatrix y = f_RS(a, IndexSet{p.r}, IndexSet{p.s});
  KMatrix yrs = y.submatrix_delete(IndexSet{p.r}, IndexSet{p.s});
  // H_s = diag(-1 x (s-1), 1 x (m-s)) of order m-1, applied to columns.
  for (int j = 0; j < p.s - 1; ++j)
    for (int i = 0; i < m - 1; ++i) yrs.at(i, j) = -yrs.at(i, j);
  Rational inv = a.at(p.r - 1, p.s - 1).inverse();
  return {inv * yrs, p};
}

namespace {

// Inserts an identity row/column at (row, col) (1-based) around M.
KMatrix embed_at(const KMatrix& m, int row, int col, int order) {
  KMatrix out(order, order);
  out.at(row - 1, col - 1) = Rational(1);
  for (int i = 0, mi = 0; i < order; ++i) {
    if (i == row - 1) continue;
    for (int j = 0, mj = 0; j < order; ++j) {
      if (j == col - 1) continue;
      out.at(i, j) = m.at(mi, mj);
      ++mj;
    }
    ++mi;
  }
  return out;
}

struct UnitaryStep {
  KMatrix U, C, D;  // C A D = U, C lower / D upper unitriangular
};

UnitaryStep unitary_rec(const KMatrix& a) {
  int m = a.order();
  if (a.is_zero()) return {a, KMatrix::identity(m), KMatrix::identity(m)};
  MarkedPosition p = minimal_marked(a);
  int r = p.r - 1, s = p.s - 1;
  Rational inv = a.at(r, s).inverse();
  // Clear column s below the pivot and row r after the pivot.
  KMatrix c0 = KMatrix::identity(m);
  for (int i = r + 1; i < m; ++i) c0.at(i, r) = -a.at(i, s) * inv;
  KMatrix d0 = KMatrix::identity(m);
  for (int j = s + 1; j < m; ++j) d0.at(s, j) = -a.at(r, j) * inv;
  KMatrix b0 = c0 * a * d0;
  UnitaryStep rec =
      unitary_rec(b0.submatrix_delete(IndexSet{p.r}, IndexSet{p.s}));
  KMatrix u = embed_at(rec.U, p.r, p.s, m);
  // The pivot survives unchanged; embed_at put a 1 there.
  u.at(r, s) = a.at(r, s);
  KMatrix c = embed_at(rec.C, p.r, p.r, m) * c0;
  KMatrix d = d0 * embed_at(rec.D, p.s, p.s, m);
  return {std::move(u), std::move(c), std::move(d)};
}

}  // namespace

UnitaryCanonResult unitary_canonical(const KMatrix& a) {
  UnitaryStep step = unitary_rec(a);
  UnitaryCanonResult out;
  out.U = std::move(step.U);
  out.witness.pair.C = std::move(step.C);
  out.witness.pair.Ctilde = inverse(step.D);
  return out;
}

bool is_in_Um(const KMatrix& a) {
  int m = a.order();
  for (int i = 0; i < m; ++i) {
    int nz = 0;
    for (int j = 0; j < m; ++j)
      if (!a.at(i, j).is_zero()) ++nz;
    if (nz > 1) return false;
  }
  for (int j = 0; j < m; ++j) {
    int nz = 0;
    for (int i = 0; i < m; ++i)
      if (!a.at(i, j).is_zero()) ++nz;
    if (nz > 1) return false;
  }
  return true;
}

namespace {

// Path/cycle decomposition of the non-zero positions of a U_m matrix,
// viewing an entry (i, j) as the edge i -> j on indices.
struct Walks {
  std::vector<std::vector<int>> paths;   // vertex sequences, length >= 2
  std::vector<std::vector<int>> cycles;  // vertex sequences, first = min row
};

Walks decompose(const KMatrix& u) {
  if (!is_in_Um(u)) throw NotInUm();
  int m = u.order();
  std::vector<int> succ(m + 1, 0), pred(m + 1, 0);  // 1-based, 0 = none
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (!u.at(i - 1, j - 1).is_zero()) {
        succ[i] = j;
        pred[j] = i;
      }
  Walks w;
  std::vector<bool> used(m + 1, false);  // vertex consumed as a walk member
  for (int v = 1; v <= m; ++v) {
    if (used[v] || succ[v] == 0 || pred[v] != 0) continue;
    std::vector<int> path{v};
    used[v] = true;
    int cur = v;
    while (succ[cur] != 0 && !used[succ[cur]]) {
      cur = succ[cur];
      path.push_back(cur);
      used[cur] = true;
    }
    if (succ[cur] != 0) path.push_back(succ[cur]);  // open walk into a used
    w.paths.push_back(std::move(path));             // endpoint (no out-edge)
  }
  for (int v = 1; v <= m; ++v) {
    if (used[v] || succ[v] == 0) continue;
    // Remaining vertices with edges lie on cycles; start from the minimum.
    std::vector<int> cyc{v};
    used[v] = true;
    int cur = succ[v];
    while (cur != v) {
      cyc.push_back(cur);
      used[cur] = true;
      cur = succ[cur];
    }
    w.cycles.push_back(std::move(cyc));
  }
  return w;
}

}  // namespace

std::vector<Chain> chains(const KMatrix& u) {
  Walks w = decompose(u);
  std::vector<Chain> out;
  for (const auto& path : w.paths) {
    // Greedy maximal segments: a chain extends while its leading row stays
    // strictly below every later row.
    size_t t = 0;
    while (t + 1 < path.size()) {
      Chain ch;
      int leader = path[t];
      ch.positions.emplace_back(path[t], path[t + 1]);
      size_t t2 = t + 1;
      while (t2 + 1 < path.size() && path[t2] > leader) {
        ch.positions.emplace_back(path[t2], path[t2 + 1]);
        ++t2;
      }
      ch.closed = false;
      out.push_back(std::move(ch));
      t = t2;
    }
  }
  for (const auto& cyc : w.cycles) {
    Chain ch;
    ch.closed = true;
    for (size_t t = 0; t < cyc.size(); ++t)
      ch.positions.emplace_back(cyc[t], cyc[(t + 1) % cyc.size()]);
    out.push_back(std::move(ch));
  }
  std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
    return a.positions.front() < b.positions.front();
  });
  return out;
}

std::pair<KMatrix, KMatrix> scale_to_Rm(const KMatrix& u) {
  Walks w = decompose(u);
  int m = u.order();
  std::vector<Rational> gamma(m, Rational(1));
  for (const auto& path : w.paths) {
    // gamma at the final vertex stays 1; walk backwards making every entry 1.
    for (size_t t = path.size() - 1; t-- > 0;) {
      gamma[path[t] - 1] =
          gamma[path[t + 1] - 1] / u.at(path[t] - 1, path[t + 1] - 1);
    }
  }
  for (const auto& cyc : w.cycles) {
    // Leading entry absorbs the chain product; the rest become 1.
    size_t l = cyc.size();
    for (size_t t = l - 1; t >= 1; --t) {
      int next = cyc[(t + 1) % l];
      gamma[cyc[t] - 1] = gamma[next - 1] / u.at(cyc[t] - 1, next - 1);
    }
  }
  KMatrix cdiag = KMatrix::diagonal(gamma);
  KMatrix rm = u;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      rm.at(i, j) = gamma[i] * u.at(i, j) / gamma[j];
  return {std::move(rm), std::move(cdiag)};
}

bool is_in_Rm(const KMatrix& a) {
  if (!is_in_Um(a)) return false;
  for (const Chain& ch : chains(a)) {
    size_t first = ch.closed ? 1 : 0;  // closed chains may have any leading
    for (size_t t = first; t < ch.positions.size(); ++t) {
      auto [i, j] = ch.positions[t];
      if (a.at(i - 1, j - 1) != Rational(1)) return false;
    }
  }
  return true;
}

MuCanonResult mu_canonical(const KMatrix& a) {
  UnitaryCanonResult uc = unitary_canonical(a);
  auto [rm, cdiag] = scale_to_Rm(uc.U);
  MuCanonResult out;
  out.Rm = std::move(rm);
  out.witness.pair.C = cdiag * uc.witness.pair.C;
  out.witness.pair.Ctilde = cdiag * uc.witness.pair.Ctilde;
  if (!out.witness.verify(a, out.Rm))
    throw Error("internal: mu_canonical witness failed verification");
  return out;
}

bool mu_similar_oracle(const KMatrix& a, const KMatrix& b) {
  if (a.order() != b.order()) throw DimensionMismatch();
  int m = a.order();
  // Unknowns: strict lower part of C, strict upper part of Ctilde, shared
  // diagonal. C A - B Ctilde = 0 is linear in them.
  auto c_idx = [m](int i, int j) {  // i > j
    int idx = 0;
    for (int r = 0; r < i; ++r) idx += r;
    return idx + j;
  };
  int lower = m * (m - 1) / 2;
  auto ct_idx = [m, lower](int i, int j) {  // i < j
    int idx = 0;
    for (int r = 0; r < i; ++r) idx += m - r - 1;
    return lower + idx + (j - i - 1);
  };
  int diag_base = m * (m - 1);
  int unknowns = m * m;
  KMatrix sys(m * m, unknowns);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int eq = i * m + j;
      for (int k = 0; k <= i; ++k) {  // (C A)_{ij}
        int col = (k == i) ? diag_base + i : c_idx(i, k);
        sys.at(eq, col) += a.at(k, j);
      }
      for (int k = j; k >= 0; --k) {  // (B Ctilde)_{ij}
        int col = (k == j) ? diag_base + j : ct_idx(k, j);
        sys.at(eq, col) -= b.at(i, k);
      }
    }
  KMatrix ns = null_space(sys);
  // Over an infinite field a finite union of proper subspaces cannot cover
  // the solution space, so a common non-vanishing diagonal exists iff each
  // diagonal functional is individually non-zero on the space.
  for (int i = 0; i < m; ++i) {
    bool nonzero = false;
    for (int k = 0; k < ns.cols(); ++k)
      if (!ns.at(diag_base + i, k).is_zero()) {
        nonzero = true;
        break;
      }
    if (!nonzero) return false;
  }
  return true;
}

}  // namespace dualcanon
