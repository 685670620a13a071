#include "wloc/local_invariants.hpp"

#include <set>

#include "wloc/errors.hpp"

namespace wloc::local {

namespace {

int parity(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) ? 1 : 0; }

int sign_pow(int base, const Integer& e) { return (base == -1 && parity(e)) ? -1 : 1; }

// Local data of one entry at a place: valuation and the quadratic character of
// the unit part (odd places) or the unit part mod 8 (the dyadic place Q_2).
struct LocalDatum {
  Integer valuation;
  int chi = 1;
  long unit_mod8 = 1;
};

long eps(long u) { return ((u - 1) / 2) & 1; }
long omega(long u) { return ((u * u - 1) / 8) & 1; }

int odd_symbol(const LocalDatum& x, const LocalDatum& y, int chi_minus_one) {
  int s = 1;
  if (parity(x.valuation) && parity(y.valuation)) s *= chi_minus_one;
  if (parity(y.valuation)) s *= x.chi;
  if (parity(x.valuation)) s *= y.chi;
  return s;
}

int dyadic_symbol(const LocalDatum& x, const LocalDatum& y) {
  long e = eps(x.unit_mod8) * eps(y.unit_mod8);
  if (parity(x.valuation)) e += omega(y.unit_mod8);
  if (parity(y.valuation)) e += omega(x.unit_mod8);
  return (e & 1) ? -1 : 1;
}

// Hasse invariant prod_{i<j} (c_i, c_j)^{m_i m_j} * prod_i (c_i, c_i)^{m_i(m_i-1)/2}.
template <class Symbol>
int hasse(const std::vector<LocalDatum>& data, const std::vector<Integer>& mults, Symbol symbol) {
  int s = 1;
  for (std::size_t i = 0; i < data.size(); ++i) {
    Integer self = mults[i] * (mults[i] - 1) / 2;
    if (parity(self)) s *= symbol(data[i], data[i]);
    for (std::size_t j = i + 1; j < data.size(); ++j)
      if (parity(mults[i] * mults[j])) s *= symbol(data[i], data[j]);
  }
  return s;
}

struct IntegralEntry {
  Integer u;
  Integer v;  // coefficient of sqrt(a') with a' squarefree; 0 over Q
};

Integer unit_residue(const Integer& z, const Integer& p, int v) {
  Integer q = z;
  for (int i = 0; i < v; ++i) q /= p;
  return nt::mod(q, p);
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
  if (a == 0 || b == 0) fail(ErrorCode::ZeroInput, "Hilbert symbol of 0");
  auto datum = [&](const Rational& q) {
    Integer n = q.get_num() * q.get_den();  // same square class
    LocalDatum d;
    int v = nt::valuation(n, p);
    d.valuation = v;
    Integer u = n;
    for (int i = 0; i < v; ++i) u /= p;
    if (p == 2) {
      d.unit_mod8 = nt::mod(u, 8L);
    } else {
      d.chi = nt::legendre(u, p.get_si());
    }
    return d;
  };
  LocalDatum x = datum(a), y = datum(b);
  if (p == 2) return dyadic_symbol(x, y);
  return odd_symbol(x, y, nt::legendre(-1, p.get_si()));
}

int real_sign(const FieldElement& c, const Rational& a, int embedding) {
  Rational v = embedding > 0 ? c.v : Rational(-c.v);
  int su = sgn(c.u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  return c.u * c.u > a * v * v ? su : sv;
}

bool is_hyperbolic(const FieldDescriptor& field, const std::vector<WittEntry>& entries) {
  const bool over_q = field.kind() == FieldKind::Rationals;
  if (!over_q && !(field.is_quad_ext() && field.base_kind() == FieldKind::Rationals))
    fail(ErrorCode::UnsupportedField, "local invariants need Q or Q(sqrt a)");

  Integer rank = 0;
  for (const auto& e : entries) rank += e.mult;
  if (rank == 0) return true;
  if (parity(rank)) return false;

  // signed discriminant must be a square
  FieldElement disc = field.one();
  for (const auto& e : entries)
    if (parity(e.mult)) disc = field.mul(disc, e.value);
  Integer k = rank / 2;
  if (parity(k)) disc = field.neg(disc);
  if (!field.is_square(disc)) return false;

  // real places
  const Rational a = over_q ? Rational(1) : field.radicand();
  if (over_q || a > 0) {
    for (int emb : {1, -1}) {
      Integer sig = 0;
      for (const auto& e : entries) sig += real_sign(e.value, a, emb) * e.mult;
      if (sig != 0) return false;
      if (over_q) break;
    }
  }

  // integral coordinates over Z[sqrt a'] with a' squarefree
  Integer ap = 1;
  Rational r = 1;
  if (!over_q) {
    ap = nt::squarefree_kernel(a);
    r = nt::rational_sqrt(a / ap);
  }
  std::vector<IntegralEntry> ints;
  std::vector<Integer> mults;
  std::vector<Integer> norms;
  for (const auto& e : entries) {
    Rational u = e.value.u, v = e.value.v * r;
    Integer l = nt::lcm(u.get_den(), v.get_den());
    IntegralEntry ie{u.get_num() * (l / u.get_den()), v.get_num() * (l / v.get_den())};
    norms.push_back(ie.u * ie.u - ap * ie.v * ie.v);
    ints.push_back(ie);
    mults.push_back(e.mult);
  }

  const Integer kk = k * (k - 1) / 2;
  std::set<Integer> primes;
  for (const auto& n : norms)
    for (const auto& [p, e] : nt::factor(n))
      if (p != 2) primes.insert(p);
  if (!over_q)
    for (const auto& [p, e] : nt::factor(ap))
      if (p != 2) primes.insert(p);

  for (const Integer& p : primes) {
    long pl = p.get_si();
    if (over_q) {
      std::vector<LocalDatum> data;
      for (const auto& ie : ints) {
        int v = nt::valuation(ie.u, p);
        data.push_back({v, nt::legendre(unit_residue(ie.u, p, v), pl), 1});
      }
      int cm1 = nt::legendre(-1, pl);
      if (hasse(data, mults, [&](const auto& x, const auto& y) { return odd_symbol(x, y, cm1); }) != 1)
        return false;
      continue;
    }
    int kind = mpz_divisible_p(ap.get_mpz_t(), p.get_mpz_t()) ? 0 : nt::legendre(ap, pl);
    if (kind == 1) {
      // split: two embeddings sqrt(a') -> +-root into Z_p
      int prec = 2;
      for (const auto& n : norms) prec = std::max(prec, nt::valuation(n, p) + 2);
      Integer pk = 1;
      for (int i = 0; i < prec; ++i) pk *= p;
      Integer root = nt::sqrt_mod_prime_power(ap, pl, prec);
      for (const Integer& rt : {root, Integer(pk - root)}) {
        std::vector<LocalDatum> data;
        for (const auto& ie : ints) {
          Integer z = nt::mod(ie.u + ie.v * rt, pk);
          int v = nt::valuation(z, p);
          data.push_back({v, nt::legendre(unit_residue(z, p, v), pl), 1});
        }
        int cm1 = nt::legendre(-1, pl);
        if (hasse(data, mults, [&](const auto& x, const auto& y) { return odd_symbol(x, y, cm1); }) != 1)
          return false;
      }
    } else if (kind == -1) {
      // inert: residue field F_{p^2}; chi is the Legendre symbol of the norm
      std::vector<LocalDatum> data;
      for (const auto& ie : ints) {
        int v = std::min(ie.u == 0 ? 1 << 30 : nt::valuation(ie.u, p),
                         ie.v == 0 ? 1 << 30 : nt::valuation(ie.v, p));
        Integer pv = 1;
        for (int i = 0; i < v; ++i) pv *= p;
        Integer x = ie.u / pv, y = ie.v / pv;
        data.push_back({v, nt::legendre(x * x - ap * y * y, pl), 1});
      }
      if (hasse(data, mults, [](const auto& x, const auto& y) { return odd_symbol(x, y, 1); }) != 1)
        return false;
    } else {
      // ramified: uniformizer sqrt(a'), v(p) = 2
      Integer apq = ap / p;  // unit
      std::vector<LocalDatum> data;
      for (const auto& ie : ints) {
        int vu = ie.u == 0 ? 1 << 29 : 2 * nt::valuation(ie.u, p);
        int vv = ie.v == 0 ? 1 << 29 : 2 * nt::valuation(ie.v, p) + 1;
        LocalDatum d;
        if (vu < vv) {
          // u / a'^t with t = vu / 2; a'^t = p^t * apq^t
          int t = vu / 2;
          Integer num = unit_residue(ie.u, p, t);
          Integer den = 1;
          for (int i = 0; i < t; ++i) den = nt::mod(den * apq, p);
          d.valuation = vu;
          d.chi = nt::legendre(num * nt::inverse_mod(den, p), pl);
        } else {
          int t = (vv - 1) / 2;
          Integer num = unit_residue(ie.v, p, t);
          Integer den = 1;
          for (int i = 0; i < t; ++i) den = nt::mod(den * apq, p);
          d.valuation = vv;
          d.chi = nt::legendre(num * nt::inverse_mod(den, p), pl);
        }
        data.push_back(d);
      }
      int cm1 = nt::legendre(-1, pl);
      if (hasse(data, mults, [&](const auto& x, const auto& y) { return odd_symbol(x, y, cm1); }) != 1)
        return false;
    }
  }

  // Dyadic places: over Q, and when 2 does not split, the single remaining
  // place is covered by the product formula. When a' = 1 mod 8 one of the two
  // places is checked as Q_2.
  if (!over_q && nt::mod(ap, Integer(8)) == 1) {
    int prec = 6;
    for (const auto& n : norms) prec = std::max(prec, nt::valuation(n, Integer(2)) + 6);
    Integer pk = Integer(1) << prec;
    Integer root = nt::sqrt_mod_two_power(ap, prec);
    std::vector<LocalDatum> data;
    for (const auto& ie : ints) {
      Integer z = nt::mod(ie.u + ie.v * root, pk);
      int v = nt::valuation(z, Integer(2));
      LocalDatum d;
      d.valuation = v;
      d.unit_mod8 = nt::mod(Integer(z >> v), 8L);
      data.push_back(d);
    }
    int target = sign_pow(-1, kk);  // (-1,-1)_2 = -1
    if (hasse(data, mults, dyadic_symbol) != target) return false;
  }
  return true;
}

}  // namespace wloc::local
