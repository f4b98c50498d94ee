#include "dualcanon/polyalg.hpp"

#include <algorithm>

namespace dualcanon {

QPoly QPoly::monomial(int deg, Rational c) {
  std::vector<Rational> v(static_cast<size_t>(deg) + 1);
  v[deg] = std::move(c);
  return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(v));
}

QPoly operator*(const Rational& c, const QPoly& a) {
  QPoly r = a;
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw NotInvertible("polynomial division by zero");
  QPoly r = *this;
  std::vector<Rational> q(
      std::max<int>(0, degree() - d.degree() + 1));
  Rational linv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rational c = r.leading() * linv;
    q[k] = c;
    r = r - c * (QPoly::monomial(k) * d);
  }
  return {QPoly(std::move(q)), std::move(r)};
}

QPoly poly_gcd(const QPoly& f, const QPoly& g) {
  QPoly a = f, b = g;
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

BezoutResult bezout(const QPoly& f, const QPoly& g) {
  if (f.is_zero() && g.is_zero())
    throw Error("bezout of two zero polynomials");
  QPoly r0 = f, r1 = g;
  QPoly u0 = QPoly::constant(Rational(1)), u1;
  QPoly v0, v1 = QPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    QPoly u2 = u0 - q * u1;
    QPoly v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  Rational linv = r0.leading().inverse();
  return {linv * u0, linv * v0, r0.monic()};
}

DualScalar DPoly::eval(const DualScalar& x) const {
  DualScalar acc;
  for (int k = degree(); k >= 0; --k) acc = acc * x + coeff(k);
  return acc;
}

namespace {

// det over the dual numbers via the directional expansion of det at part0.
DualScalar dual_det_of(const std::vector<std::vector<DualScalar>>& m) {
  int n = static_cast<int>(m.size());
  KMatrix m0(n, n), m1(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m0.at(i, j) = m[i][j].a0;
      m1.at(i, j) = m[i][j].a1;
    }
  return det(DualMatrix(m0, m1));
}

}  // namespace

DualScalar resultant(const DPoly& f, const DPoly& g) {
  int p = f.degree(), q = g.degree();
  if (p < 1 || q < 1)
    throw Error("resultant requires degrees >= 1");
  int n = p + q;
  std::vector<std::vector<DualScalar>> s(
      n, std::vector<DualScalar>(n, DualScalar()));
  // Rows of f first; columns ordered by ascending power so that
  // Res(t-1, t-2) = 1. The classical-part identity pins the convention.
  for (int i = 0; i < q; ++i)
    for (int k = 0; k <= p; ++k) s[i][n - 1 - i - k] = f.coeff(p - k);
  for (int i = 0; i < p; ++i)
    for (int k = 0; k <= q; ++k) s[q + i][n - 1 - i - k] = g.coeff(q - k);
  return dual_det_of(s);
}

std::pair<DPoly, DPoly> lift_factorization(const DPoly& f, const QPoly& f0p,
                                           const QPoly& f0pp) {
  if (f.part0 != f0p * f0pp)
    throw Error("classical parts do not factor as stated");
  BezoutResult bz = bezout(f0p, f0pp);
  if (bz.d.degree() != 0) throw NotCoprime();
  // Scale so that f0p*g' + f0pp*g'' = 1 exactly.
  QPoly gp = bz.u, gpp = bz.v;
  DPoly fp(f0p, gpp * f.part1);
  DPoly fpp(f0pp, gp * f.part1);
  return {std::move(fp), std::move(fpp)};
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> lo, hi;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      lo.push_back(i);
      if (i * i != n) hi.push_back(n / i);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

}  // namespace

RationalRoots rational_roots(const QPoly& f) {
  if (f.is_zero()) throw Error("rational_roots of the zero polynomial");
  RationalRoots out;
  int deg = f.degree();
  QPoly work = f;
  // Root 0: strip powers of t.
  int zero_mult = 0;
  while (!work.is_zero() && work.coeff(0).is_zero() && work.degree() > 0) {
    std::vector<Rational> shifted(work.coeffs().begin() + 1,
                                  work.coeffs().end());
    work = QPoly(std::move(shifted));
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);
  if (work.degree() > 0) {
    // Clear denominators to get an integer polynomial.
    mpz_class lcm_den(1);
    for (const auto& c : work.coeffs())
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              c.denominator().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : work.coeffs())
      ic.push_back(c.numerator() * (lcm_den / c.denominator()));
    std::vector<mpz_class> ps = positive_divisors(ic.front());
    std::vector<mpz_class> qs = positive_divisors(ic.back());
    std::vector<Rational> candidates;
    for (const auto& p : ps)
      for (const auto& q : qs) {
        if (gcd(p, q) != 1) continue;
        candidates.push_back(Rational(mpq_class(p, q)));
        candidates.push_back(Rational(mpq_class(-p, q)));
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (const auto& r : candidates) {
      if (!work.eval(r).is_zero()) continue;
      int mult = 0;
      QPoly lin({-r, Rational(1)});
      while (true) {
        auto [q2, rem] = work.divmod(lin);
        if (!rem.is_zero()) break;
        work = std::move(q2);
        ++mult;
      }
      out.roots.emplace_back(r, mult);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  int total = 0;
  for (const auto& [r, m] : out.roots) total += m;
  out.complete = (total == deg);
  return out;
}

namespace {

void add_diag(KMatrix& m, int i, const Rational& c) { m.at(i, i) += c; }
void add_diag(DualMatrix& m, int i, const DualScalar& c) {
  m.set(i, i, m.at(i, i) + c);
}

// Faddeev-LeVerrier; valid over any commutative Q-algebra.
template <typename Mat, typename Scalar>
std::vector<Scalar> faddev_coeffs(const Mat& a, int n, const Mat& eye) {
  // Returns c_0..c_n with char poly = sum c_k t^k, c_n = 1.
  std::vector<Scalar> c(static_cast<size_t>(n) + 1);
  c[n] = Scalar(Rational(1));
  Mat m = eye;
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    Scalar ck = m.trace();
    // c_{n-k} = -tr(M_k)/k
    Scalar coef = Scalar(Rational(-1, k)) * ck;
    c[n - k] = coef;
    // M_{k+1} = A(M_k + c_{n-k} E) computed incrementally below.
    for (int i = 0; i < n; ++i) add_diag(m, i, coef);
  }
  return c;
}

}  // namespace

QPoly char_poly(const KMatrix& a) {
  int n = a.order();
  std::vector<Rational> c = faddev_coeffs<KMatrix, Rational>(
      a, n, KMatrix::identity(n));
  return QPoly(std::move(c));
}

DPoly char_poly(const DualMatrix& a) {
  int n = a.order();
  std::vector<DualScalar> c = faddev_coeffs<DualMatrix, DualScalar>(
      a, n, DualMatrix::identity(n));
  std::vector<Rational> c0(c.size()), c1(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    c0[i] = c[i].a0;
    c1[i] = c[i].a1;
  }
  return {QPoly(std::move(c0)), QPoly(std::move(c1))};
}

DualMatrix eval_at(const DPoly& p, const DualMatrix& a) {
  int n = a.order();
  DualMatrix acc(n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * a;
    DualScalar c = p.coeff(k);
    for (int i = 0; i < n; ++i) acc.set(i, i, acc.at(i, i) + c);
  }
  return acc;
}

}  // namespace dualcanon
