#pragma once

#include <random>
#include <utility>
#include <vector>

#include "dualcanon/index_set.hpp"
#include "dualcanon/kmatrix.hpp"

namespace dualcanon {

/// Non-increasing partition nu = (nu_1, ..., nu_m) of n.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw Error("partition parts must be positive and non-increasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int count() const { return static_cast<int>(parts_.size()); }
  int n() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  /// sigma_k = nu_1 + ... + nu_k (sigma_0 = 0).
  int sigma(int k) const {
    int s = 0;
    for (int i = 0; i < k; ++i) s += parts_[i];
    return s;
  }
  /// Multiplicity sequence of the distinct parts, largest part first.
  std::vector<int> multiplicities() const;
  /// The distinct parts, descending.
  std::vector<int> distinct_parts() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }

 private:
  std::vector<int> parts_;
};

struct PQSets {
  IndexSet P;  // non-zero rows of J_nu
  IndexSet Q;  // non-zero columns of J_nu
  int r = 0;   // |P| = |Q|
  int m = 0;   // n - r = number of parts
};

/// Block-diagonal Jordan matrix for nu with the given eigenvalue.
KMatrix jordan_matrix(const Partition& nu, const Rational& alpha);
/// Single Jordan block of order n.
KMatrix jordan_block(int n, const Rational& alpha);

PQSets pq_sets(const Partition& nu);

/// Matrix-unit basis of W_nu = {A : A_{P,Q} = 0}: the 1-based pairs (i, j)
/// with i in P or j in Q, row-major order.
std::vector<std::pair<int, int>> wnu_basis(const Partition& nu);

/// Membership in \bar B_nu = {B : B J_nu = J_nu B}, tested through the
/// regular-block characterization. Reports invertibility separately.
bool is_in_Bnu(const KMatrix& b, const Partition& nu,
               bool* invertible = nullptr);

/// (B_P, B_Q) = (delete P rows/cols, delete Q rows/cols).
std::pair<KMatrix, KMatrix> restrict_pq(const KMatrix& b, const Partition& nu);

/// Checks that (C, Ctilde) is a mu-mutual pair for mu = multiplicities(nu):
/// C lower block triangular, Ctilde upper, equal diagonal blocks, both
/// invertible.
bool is_mu_mutual(const KMatrix& c, const KMatrix& ctilde,
                  const std::vector<int>& mu, bool require_unit_diag = false);

/// Minimal preimage of the restriction maps: returns B in B_nu with
/// B_P = C and B_Q = Ctilde, all non-surviving regular-block parameters
/// zero. Throws NotMuMutual.
KMatrix lift(const KMatrix& c, const KMatrix& ctilde, const Partition& nu);

/// |B| = prod_i |B''_ii|^{alpha_i} over the distinct parts alpha_i, with
/// B''_ii the diagonal blocks of B_Q in the multiplicity partition.
bool det_identities_check(const KMatrix& b, const Partition& nu);

/// Random member of \bar B_nu with parameters in [-bound, bound]; resamples
/// until invertible when require_invertible is set.
KMatrix random_bnu(const Partition& nu, std::mt19937_64& rng,
                   bool require_invertible, int bound = 5);

}  // namespace dualcanon
