#include "wloc/number_theory.hpp"

#include "wloc/errors.hpp"

namespace wloc::nt {

bool is_prime(long n) {
  if (n < 2) return false;
  Integer z = n;
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

long mod(const Integer& a, long m) { return mod(a, Integer(m)).get_si(); }

int legendre(const Integer& a, long p) {
  Integer pp = p;
  return mpz_legendre(mod(a, pp).get_mpz_t(), pp.get_mpz_t());
}

long least_nonresidue(long p) {
  for (long s = 2; s < p; ++s)
    if (legendre(s, p) == -1) return s;
  fail(ErrorCode::BadParameters, "no non-residue modulo " + std::to_string(p));
}

std::vector<std::pair<Integer, int>> factor(const Integer& n) {
  if (n == 0) fail(ErrorCode::ZeroInput, "cannot factor 0");
  Integer m = abs(n);
  std::vector<std::pair<Integer, int>> out;
  auto strip = [&](const Integer& q) {
    int e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) {
      m /= q;
      ++e;
    }
    if (e > 0) out.emplace_back(q, e);
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (Integer d = 5; d * d <= m; d += 6) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) break;
    strip(d);
    strip(d + 2);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

Integer squarefree_kernel(const Rational& q) {
  if (q == 0) fail(ErrorCode::ZeroInput, "square class of 0");
  // num * den lies in the same square class as num / den
  Integer prod = q.get_num() * q.get_den();
  Integer out = sgn(prod) < 0 ? -1 : 1;
  for (const auto& [prime, e] : factor(prod))
    if (e % 2 == 1) out *= prime;
  return out;
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return is_square(c.get_num()) && is_square(c.get_den());
}

Rational rational_sqrt(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), c.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), c.get_den().get_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) fail(ErrorCode::ZeroInput, "valuation of 0");
  Integer m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const Rational& q, const Integer& p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), mod(a, m).get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::ZeroInput, "element not invertible modulo " + m.get_str());
  return r;
}

namespace {

Integer powm(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer tonelli_shanks(const Integer& a, long p) {
  Integer P = p;
  Integer n = mod(a, P);
  if (n == 0) return 0;
  if (p % 4 == 3) return powm(n, (P + 1) / 4, P);
  Integer q = P - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = least_nonresidue(p);
  Integer c = powm(z, q, P);
  Integer r = powm(n, (q + 1) / 2, P);
  Integer t = powm(n, q, P);
  int m = s;
  while (t != 1) {
    int i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = mod(tt * tt, P);
      ++i;
    }
    Integer b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mod(b * b, P);
    r = mod(r * b, P);
    c = mod(b * b, P);
    t = mod(t * c, P);
    m = i;
  }
  return r;
}

}  // namespace

Integer sqrt_mod_prime_power(const Integer& a, long p, int k) {
  Integer r = tonelli_shanks(a, p);
  Integer pk = p;
  for (int i = 1; i < k; ++i) {
    pk *= p;
    // Newton step r <- r - (r^2 - a) / (2r)
    Integer num = mod(r * r - a, pk);
    Integer inv = inverse_mod(2 * r, pk);
    r = mod(r - num * inv, pk);
  }
  return r;
}

Integer sqrt_mod_two_power(const Integer& a, int k) {
  if (mod(a, Integer(8)) != 1) fail(ErrorCode::BadParameters, "2-adic root needs a = 1 mod 8");
  // r^2 = a mod 2^j, lifted one bit at a time
  Integer r = 1;
  for (int j = 3; j < k; ++j) {
    Integer m = Integer(1) << (j + 1);
    if (mod(r * r - a, m) != 0) r += Integer(1) << (j - 1);
  }
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace wloc::nt
