#include "doctest.h"
#include "dualcanon/mu_canon.hpp"
#include "dualcanon/nu_structure.hpp"
#include "helpers.hpp"

using namespace dualcanon;
using dualcanon::testing::km;
using dualcanon::testing::random_kmatrix;
using dualcanon::testing::random_mu_mutual;

namespace {

// The 4x4 member of B_(2,2): two-by-two regular (Toeplitz upper triangular)
// blocks b_uv E + c_uv N.
KMatrix b22_example(long b11, long c11, long b12, long c12, long b21,
                    long c21, long b22, long c22) {
  return km({{b11, c11, b12, c12},
             {0, b11, 0, b12},
             {b21, c21, b22, c22},
             {0, b21, 0, b22}});
}

}  // namespace

TEST_CASE("jordan matrices") {
  KMatrix j21 = jordan_matrix(Partition({2, 1}), Rational(0));
  CHECK(j21 == km({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(jordan_matrix(Partition({1, 1, 1}), Rational(5)) ==
        Rational(5) * KMatrix::identity(3));
  CHECK(jordan_matrix(Partition({3}), Rational(2)) ==
        jordan_block(3, Rational(2)));
}

TEST_CASE("P and Q index sets") {
  PQSets pq21 = pq_sets(Partition({2, 1}));
  CHECK(pq21.P == IndexSet{1});
  CHECK(pq21.Q == IndexSet{2});
  CHECK(pq21.r == 1);
  CHECK(pq21.m == 2);
  PQSets pq22 = pq_sets(Partition({2, 2}));
  CHECK(pq22.P == IndexSet({1, 3}));
  CHECK(pq22.Q == IndexSet({2, 4}));
  PQSets pq111 = pq_sets(Partition({1, 1, 1}));
  CHECK(pq111.P.empty());
  CHECK(pq111.Q.empty());
}

TEST_CASE("W_nu basis") {
  auto w21 = wnu_basis(Partition({2, 1}));
  std::vector<std::pair<int, int>> expect{
      {1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 2}};
  CHECK(w21 == expect);
  CHECK(wnu_basis(Partition({1, 1})).empty());
  auto wn = wnu_basis(Partition({4}));
  CHECK(static_cast<int>(wn.size()) == 15);  // all pairs but (4,1)
  for (const auto& [i, j] : wn) CHECK(!(i == 4 && j == 1));
}

TEST_CASE("B_nu membership") {
  Partition nu22({2, 2});
  KMatrix b = b22_example(1, 2, 3, 4, 5, 6, 7, 8);
  bool inv = false;
  CHECK(is_in_Bnu(b, nu22, &inv));
  KMatrix j = jordan_matrix(nu22, Rational(0));
  CHECK(b * j == j * b);  // membership matches commutation with J_nu
  for (const auto& nu : {Partition({2, 1}), Partition({3}), Partition({1, 1})})
    CHECK(is_in_Bnu(KMatrix::identity(nu.n()), nu));
  KMatrix bad = KMatrix::identity(3);
  bad.at(1, 0) = Rational(1);
  CHECK(!is_in_Bnu(bad, Partition({2, 1})));
}

TEST_CASE("restriction maps") {
  Partition nu22({2, 2});
  KMatrix b = b22_example(1, 2, 3, 4, 5, 6, 7, 8);
  auto [bp, bq] = restrict_pq(b, nu22);
  CHECK(bp == km({{1, 3}, {5, 7}}));
  CHECK(bq == bp);  // B_P = B_Q = (b_uv) for nu = (2,2)
  auto [ep, eq] = restrict_pq(KMatrix::identity(4), nu22);
  CHECK(ep == KMatrix::identity(2));
  CHECK(eq == KMatrix::identity(2));
}

TEST_CASE("restriction is multiplicative and inverts") {
  std::mt19937_64 rng(31);
  std::vector<Partition> nus{Partition({2, 1}), Partition({2, 2}),
                             Partition({3, 1}), Partition({2, 2, 1}),
                             Partition({3, 2, 1})};
  for (const auto& nu : nus)
    for (int t = 0; t < 60; ++t) {
      KMatrix b1 = random_bnu(nu, rng, false);
      KMatrix b2 = random_bnu(nu, rng, false);
      auto [p1, q1] = restrict_pq(b1, nu);
      auto [p2, q2] = restrict_pq(b2, nu);
      auto [pp, qq] = restrict_pq(b1 * b2, nu);
      CHECK(pp == p1 * p2);
      CHECK(qq == q1 * q2);
      KMatrix binv_src = random_bnu(nu, rng, true);
      auto [ip, iq] = restrict_pq(inverse(binv_src), nu);
      auto [sp, sq] = restrict_pq(binv_src, nu);
      (void)ip;
      (void)sp;
      CHECK(iq == inverse(sq));  // (B^{-1})_Q = (B_Q)^{-1}
    }
}

TEST_CASE("conjugation restricts to the P,Q grid") {
  std::mt19937_64 rng(32);
  std::vector<Partition> nus{Partition({2, 1}), Partition({3, 1}),
                             Partition({2, 2, 1})};
  for (const auto& nu : nus) {
    PQSets pq = pq_sets(nu);
    for (int t = 0; t < 100; ++t) {
      KMatrix b = random_bnu(nu, rng, true);
      KMatrix a = random_kmatrix(nu.n(), rng);
      KMatrix lhs = (b * a * inverse(b)).submatrix_delete(pq.P, pq.Q);
      auto [bp, bq] = restrict_pq(b, nu);
      CHECK(lhs == bp * a.submatrix_delete(pq.P, pq.Q) * inverse(bq));
    }
  }
}

TEST_CASE("W_nu absorbs multiplication by B_nu") {
  std::mt19937_64 rng(33);
  Partition nu({2, 2, 1});
  PQSets pq = pq_sets(nu);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 100; ++t) {
    // Random A with A_{P,Q} = 0, built on the W_nu basis.
    KMatrix a(nu.n(), nu.n());
    for (const auto& [i, j] : wnu_basis(nu))
      a.at(i - 1, j - 1) = Rational(d(rng));
    REQUIRE(a.submatrix_delete(pq.P, pq.Q).is_zero());
    KMatrix b = random_bnu(nu, rng, false);
    CHECK((b * a).submatrix_delete(pq.P, pq.Q).is_zero());
    CHECK((a * b).submatrix_delete(pq.P, pq.Q).is_zero());
  }
}

TEST_CASE("members of B_nu satisfy conditions (P) and (Q-bar)") {
  std::mt19937_64 rng(34);
  for (const auto& nu : {Partition({2, 1}), Partition({3, 2, 1}),
                         Partition({2, 2})}) {
    PQSets pq = pq_sets(nu);
    for (int t = 0; t < 60; ++t) {
      KMatrix b = random_bnu(nu, rng, false);
      for (int i = 1; i <= nu.n(); ++i)
        for (int j = 1; j <= nu.n(); ++j) {
          if (!pq.P.contains(i) && pq.P.contains(j))
            CHECK(b.at(i - 1, j - 1).is_zero());
          if (pq.Q.contains(i) && !pq.Q.contains(j))
            CHECK(b.at(i - 1, j - 1).is_zero());
        }
    }
  }
}

TEST_CASE("lift") {
  Partition nu({2, 1});
  KMatrix c = km({{3, 0}, {7, 4}});
  KMatrix ct = km({{3, 5}, {0, 4}});
  KMatrix b = lift(c, ct, nu);
  CHECK(b == km({{3, 0, 5}, {0, 3, 0}, {0, 7, 4}}));
  KMatrix j = jordan_matrix(nu, Rational(0));
  CHECK(b * j == j * b);
  auto [bp, bq] = restrict_pq(b, nu);
  CHECK(bp == c);
  CHECK(bq == ct);
  CHECK(lift(KMatrix::identity(2), KMatrix::identity(2), nu) ==
        KMatrix::identity(3));
  CHECK_THROWS_AS(lift(km({{0, 0}, {0, 1}}), km({{0, 0}, {0, 1}}), nu),
                  NotMuMutual);
}

TEST_CASE("lift round-trips through restriction") {
  std::mt19937_64 rng(35);
  for (const auto& nu :
       {Partition({2, 1}), Partition({3, 1}), Partition({3, 2})}) {
    std::vector<int> mu = nu.multiplicities();
    for (int t = 0; t < 200; ++t) {
      MuMutualPair p = random_mu_mutual(nu.count(), rng);
      if (!is_mu_mutual(p.C, p.Ctilde, mu)) continue;
      KMatrix b = lift(p.C, p.Ctilde, nu);
      REQUIRE(is_in_Bnu(b, nu));
      auto [bp, bq] = restrict_pq(b, nu);
      CHECK(bp == p.C);
      CHECK(bq == p.Ctilde);
    }
  }
}

TEST_CASE("determinant identities") {
  Partition nu22({2, 2});
  KMatrix b = b22_example(1, 2, 3, 4, 5, 6, 7, 8);
  auto [bp, bq] = restrict_pq(b, nu22);
  (void)bq;
  CHECK(det(b) == det(bp) * det(bp));  // |B| = |B_P|^2
  CHECK(det_identities_check(b, nu22));
  CHECK(det_identities_check(KMatrix::identity(4), nu22));

  std::mt19937_64 rng(36);
  std::vector<Partition> nus{Partition({2, 2}), Partition({3, 1}),
                             Partition({2, 2, 1}), Partition({4, 2}),
                             Partition({3, 2, 1})};
  for (const auto& nu : nus)
    for (int t = 0; t < 60; ++t)
      CHECK(det_identities_check(random_bnu(nu, rng, false), nu));
}
