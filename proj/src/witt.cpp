#include "wloc/witt.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wloc/errors.hpp"
#include "wloc/local_invariants.hpp"

namespace wloc {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NonCanonicalInput: return "NonCanonicalInput";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::PresentationMismatch: return "PresentationMismatch";
    case ErrorCode::NonHomogeneousDenominator: return "NonHomogeneousDenominator";
    case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorCode::UnsupportedIrrep: return "UnsupportedIrrep";
    case ErrorCode::NonInvertibleNormalEuler: return "NonInvertibleNormalEuler";
    case ErrorCode::UnsupportedResidueField: return "UnsupportedResidueField";
    case ErrorCode::InconsistentField: return "InconsistentField";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Error";
}

namespace {

bool odd(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

// ---- W(F_p) bookkeeping for the residues of W(Q) ---------------------------

bool minus_one_nonsquare(const Integer& p) { return nt::legendre(-1, p.get_si()) == -1; }

// Class of mult * <u> in W(F_p), u given by its square class.
FiniteWittInvariant fin_class(const Integer& p, bool u_nonsquare, const Integer& mult) {
  FiniteWittInvariant c;
  Integer m4 = nt::mod(mult, Integer(4));
  c.odd = odd(m4);
  bool sign_flip = (m4 == 2 || m4 == 3) && minus_one_nonsquare(p);
  c.disc_nonsquare = (u_nonsquare && c.odd) != sign_flip;
  return c;
}

FiniteWittInvariant fin_add(const Integer& p, FiniteWittInvariant x, FiniteWittInvariant y) {
  FiniteWittInvariant c;
  c.odd = x.odd != y.odd;
  c.disc_nonsquare = (x.disc_nonsquare != y.disc_nonsquare) != (x.odd && y.odd && minus_one_nonsquare(p));
  return c;
}

FiniteWittInvariant fin_neg(const Integer& p, FiniteWittInvariant x) {
  x.disc_nonsquare = x.disc_nonsquare != (x.odd && minus_one_nonsquare(p));
  return x;
}

// Diagonal entries (as non-square flags) of the canonical representative.
std::vector<bool> fin_entries(FiniteWittInvariant x, bool minus_one_nonsq) {
  if (x.odd) return {x.disc_nonsquare};
  if (!x.disc_nonsquare) return {};
  return {false, !minus_one_nonsq};  // <1, -delta>
}

// ---- W(Q) ------------------------------------------------------------------

void add_rational_entry(RationalInvariants& inv, const Integer& c, const Integer& mult,
                        std::set<Integer, std::greater<>>* pending = nullptr) {
  inv.signature += sgn(c) * mult;
  for (const auto& [p, e] : nt::factor(c)) {
    if (p == 2) {
      if (odd(mult)) inv.dyadic = !inv.dyadic;
      continue;
    }
    bool nonsq = nt::legendre(c / p, p.get_si()) == -1;
    FiniteWittInvariant r = fin_add(p, inv.residues[p], fin_class(p, nonsq, mult));
    if (r.is_zero()) inv.residues.erase(p);
    else inv.residues[p] = r;
    if (pending) pending->insert(p);
  }
}

RationalInvariants rational_invariants_of(const std::vector<WittEntry>& entries) {
  RationalInvariants inv;
  for (const auto& e : entries) add_rational_entry(inv, nt::squarefree_kernel(e.value.u), e.mult);
  return inv;
}

std::vector<WittEntry> sorted_entries(const FieldDescriptor& f, const std::map<Integer, Integer>& m) {
  std::vector<WittEntry> out;
  for (const auto& [c, mult] : m)
    if (mult != 0) out.push_back({f.element(c), mult});
  std::sort(out.begin(), out.end(),
            [](const WittEntry& x, const WittEntry& y) { return element_less(x.value, y.value); });
  return out;
}

// Deterministic representative rebuilt from the invariants alone.
std::vector<WittEntry> rational_representative(const FieldDescriptor& f, const RationalInvariants& target) {
  std::map<Integer, Integer> out;
  RationalInvariants cur;
  auto put = [&](const Integer& c, const Integer& mult, std::set<Integer, std::greater<>>* pending) {
    out[c] += mult;
    add_rational_entry(cur, c, mult, pending);
  };

  std::set<Integer, std::greater<>> pending;
  for (const auto& [p, r] : target.residues) pending.insert(p);
  while (!pending.empty()) {
    Integer p = *pending.begin();
    pending.erase(pending.begin());
    FiniteWittInvariant want = target.residues.count(p) ? target.residues.at(p) : FiniteWittInvariant{};
    FiniteWittInvariant have = cur.residues.count(p) ? cur.residues.at(p) : FiniteWittInvariant{};
    FiniteWittInvariant diff = fin_add(p, want, fin_neg(p, have));
    Integer s = nt::least_nonresidue(p.get_si());
    for (bool nonsq : fin_entries(diff, minus_one_nonsquare(p))) {
      Integer ubar = nonsq ? s : Integer(1);
      Integer u = cur.signature > target.signature ? Integer(ubar - p) : ubar;
      std::set<Integer, std::greater<>> touched;
      put(nt::squarefree_kernel(Rational(p * u)), 1, &touched);
      for (const auto& q : touched)
        if (q < p) pending.insert(q);
    }
  }

  if (cur.dyadic != target.dyadic) {
    if (cur.signature < target.signature) {
      put(2, 1, nullptr);
    } else if (cur.signature > target.signature) {
      put(-2, 1, nullptr);
    } else {
      put(2, 1, nullptr);
      put(-1, 1, nullptr);
    }
  }
  Integer gap = target.signature - cur.signature;
  if (gap > 0) put(1, gap, nullptr);
  if (gap < 0) put(-1, -gap, nullptr);

  for (auto& [c, mult] : out) {
    if (c < 0) continue;
    auto it = out.find(-c);
    if (it == out.end()) continue;
    Integer m = std::min(mult, it->second);
    mult -= m;
    it->second -= m;
  }
  return sorted_entries(f, out);
}

// ---- finite fields and C --------------------------------------------------

std::vector<WittEntry> finite_representative(const FieldDescriptor& f, const std::vector<WittEntry>& entries) {
  Integer rank = 0;
  bool nonsq = false;
  for (const auto& e : entries) {
    rank += e.mult;
    if (odd(e.mult) && !f.is_square(e.value)) nonsq = !nonsq;
  }
  if (f.is_complex()) {
    if (odd(rank)) return {{f.one(), 1}};
    return {};
  }
  Integer r4 = nt::mod(rank, Integer(4));
  bool m1 = !f.minus_one_is_square();
  FiniteWittInvariant inv{odd(r4), nonsq != ((r4 == 2 || r4 == 3) && m1)};
  FieldElement s = f.canonical_nonsquare();
  std::vector<WittEntry> out;
  for (bool ns : fin_entries(inv, m1)) {
    FieldElement c = ns ? s : f.one();
    if (!out.empty() && out.back().value == c) out.back().mult += 1;
    else out.push_back({c, 1});
  }
  std::sort(out.begin(), out.end(),
            [](const WittEntry& x, const WittEntry& y) { return element_less(x.value, y.value); });
  return out;
}

// ---- Q(sqrt a) ------------------------------------------------------------

std::vector<WittEntry> number_field_representative(const FieldDescriptor& f, std::vector<WittEntry> entries) {
  const bool nonreal = f.radicand() < 0;
  std::vector<WittEntry> merged;
  for (auto& e : entries) {
    FieldElement c = f.square_class_rep(e.value);
    bool placed = false;
    for (auto& m : merged) {
      if (f.same_square_class(m.value, c)) {
        m.mult += e.mult;
        placed = true;
        break;
      }
    }
    if (!placed) merged.push_back({c, e.mult});
  }
  // <c> + <-c> = 0
  for (std::size_t i = 0; i < merged.size(); ++i) {
    for (std::size_t j = i + 1; j < merged.size() && merged[i].mult != 0; ++j) {
      if (merged[j].mult == 0) continue;
      if (f.same_square_class(merged[i].value, f.neg(merged[j].value))) {
        Integer m = std::min(merged[i].mult, merged[j].mult);
        merged[i].mult -= m;
        merged[j].mult -= m;
      }
    }
  }
  std::vector<WittEntry> out;
  for (auto& m : merged) {
    if (nonreal) m.mult = nt::mod(m.mult, Integer(8));  // 8<1> = 0 in a non-real number field
    if (m.mult != 0) out.push_back(m);
  }
  if (local::is_hyperbolic(f, out)) return {};
  std::sort(out.begin(), out.end(),
            [](const WittEntry& x, const WittEntry& y) { return element_less(x.value, y.value); });
  return out;
}

std::vector<WittEntry> canonical_entries(const FieldDescriptor& f, std::vector<WittEntry> entries) {
  std::erase_if(entries, [](const WittEntry& e) { return e.mult == 0; });
  for (const auto& e : entries) {
    if (f.is_zero(e.value)) fail(ErrorCode::ZeroInput, "zero diagonal entry");
    if (e.mult < 0) fail(ErrorCode::BadParameters, "negative multiplicity");
  }
  switch (f.kind()) {
    case FieldKind::Reals: {
      Integer sig = 0;
      for (const auto& e : entries) sig += sgn(e.value.u) * e.mult;
      if (sig == 0) return {};
      return {{f.element(sig > 0 ? 1 : -1), abs(sig)}};
    }
    case FieldKind::Rationals: return rational_representative(f, rational_invariants_of(entries));
    case FieldKind::FinitePrime: return finite_representative(f, entries);
    case FieldKind::QuadExt:
      if (f.base_kind() == FieldKind::Rationals) return number_field_representative(f, std::move(entries));
      return finite_representative(f, entries);
  }
  return entries;
}

}  // namespace

WittClass WittClass::from_entries(const FieldDescriptor& field, std::vector<WittEntry> entries) {
  WittClass w(field);
  w.entries_ = canonical_entries(field, std::move(entries));
  return w;
}

WittClass WittClass::unit(const FieldDescriptor& field, const FieldElement& c) {
  return from_entries(field, {{field.element(c.u, c.v), 1}});
}

Integer WittClass::rank() const {
  Integer r = 0;
  for (const auto& e : entries_) r += e.mult;
  return r;
}

bool WittClass::rank_is_even() const { return !odd(rank()); }

QuadraticForm WittClass::representative(std::size_t max_rank) const {
  if (rank() > Integer(static_cast<unsigned long>(max_rank)))
    fail(ErrorCode::Unsupported, "representative of rank " + rank().get_str() + " is too large to expand");
  QuadraticForm q{field_, {}};
  for (const auto& e : entries_)
    for (Integer i = 0; i < e.mult; ++i) q.entries.push_back(e.value);
  return q;
}

std::string WittClass::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += " + ";
    if (e.mult != 1) out += e.mult.get_str();
    out += "<" + field_.to_string(e.value) + ">";
  }
  return out;
}

bool operator==(const WittClass& x, const WittClass& y) {
  if (!(x.field() == y.field())) return false;
  const auto& f = x.field();
  if (f.is_quad_ext() && f.base_kind() == FieldKind::Rationals) {
    if (x.entries() == y.entries()) return true;
    return (x - y).is_zero();
  }
  return x.entries() == y.entries();
}

WittClass operator+(const WittClass& x, const WittClass& y) {
  require_same_field(x.field(), y.field());
  std::vector<WittEntry> all = x.entries();
  all.insert(all.end(), y.entries().begin(), y.entries().end());
  return WittClass::from_entries(x.field(), std::move(all));
}

WittClass operator-(const WittClass& x) {
  std::vector<WittEntry> all;
  for (const auto& e : x.entries()) all.push_back({x.field().neg(e.value), e.mult});
  return WittClass::from_entries(x.field(), std::move(all));
}

WittClass operator-(const WittClass& x, const WittClass& y) { return x + (-y); }

WittClass operator*(const WittClass& x, const WittClass& y) {
  require_same_field(x.field(), y.field());
  const auto& f = x.field();
  std::vector<WittEntry> all;
  for (const auto& a : x.entries())
    for (const auto& b : y.entries()) all.push_back({f.mul(a.value, b.value), a.mult * b.mult});
  return WittClass::from_entries(f, std::move(all));
}

WittClass operator*(const Integer& n, const WittClass& x) {
  if (n == 0) return WittClass(x.field());
  WittClass base = n > 0 ? x : -x;
  std::vector<WittEntry> all;
  for (const auto& e : base.entries()) all.push_back({e.value, e.mult * abs(n)});
  return WittClass::from_entries(x.field(), std::move(all));
}

QuadraticForm diagonalize(const Matrix& gram, const FieldDescriptor& f) {
  const std::size_t n = gram.size();
  Matrix a = gram;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) fail(ErrorCode::NonSymmetric, "Gram matrix is not square");
    for (auto& x : a[i]) x = f.element(x.u, x.v);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(a[i][j] == a[j][i])) fail(ErrorCode::NonSymmetric, "Gram matrix is not symmetric");

  QuadraticForm out{f, {}};
  for (std::size_t k = 0; k < n; ++k) {
    // bring a nonzero diagonal entry to position k
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (!f.is_zero(a[i][i])) piv = i;
    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!f.is_zero(a[i][j])) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) fail(ErrorCode::DegenerateForm, "Gram matrix is singular");
      // basis change b_i <- b_i + b_j gives diagonal entry 2 a_ij
      for (std::size_t t = 0; t < n; ++t) a[pi][t] = f.add(a[pi][t], a[pj][t]);
      for (std::size_t t = 0; t < n; ++t) a[t][pi] = f.add(a[t][pi], a[t][pj]);
      piv = pi;
    }
    std::swap(a[k], a[piv]);
    for (auto& row : a) std::swap(row[k], row[piv]);
    FieldElement d = a[k][k];
    FieldElement dinv = f.inv(d);
    const std::vector<FieldElement> pivot_row = a[k];
    // the matching column operations leave the trailing block untouched
    for (std::size_t i = k + 1; i < n; ++i) {
      FieldElement factor = f.mul(a[i][k], dinv);
      if (f.is_zero(factor)) continue;
      for (std::size_t j = k; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, pivot_row[j]));
    }
    out.entries.push_back(d);
  }
  return out;
}

WittClass witt_class(const QuadraticForm& form) {
  std::vector<WittEntry> entries;
  for (const auto& c : form.entries) entries.push_back({form.field.element(c.u, c.v), 1});
  return WittClass::from_entries(form.field, std::move(entries));
}

WittClass integer_class(const Integer& n, const FieldDescriptor& field) {
  if (n == 0) return WittClass(field);
  return WittClass::from_entries(field, {{field.element(n > 0 ? 1 : -1), abs(n)}});
}

bool is_zero_divisor_int(const Integer& n, const FieldDescriptor& field) {
  if (n == 0) fail(ErrorCode::ZeroInput, "zero is not a valid multiplier");
  if (odd(n)) return false;  // torsion in W(k) is 2-primary
  // even n: kernel nontrivial iff W(k) has torsion; R is the only torsion-free case here
  return field.kind() != FieldKind::Reals;
}

std::vector<Integer> signatures(const WittClass& x) {
  const auto& f = x.field();
  std::vector<Integer> out;
  if (f.kind() == FieldKind::Rationals || f.kind() == FieldKind::Reals) {
    Integer s = 0;
    for (const auto& e : x.entries()) s += sgn(e.value.u) * e.mult;
    out.push_back(s);
  } else if (f.orderings() == 2) {
    for (int emb : {1, -1}) {
      Integer s = 0;
      for (const auto& e : x.entries()) s += local::real_sign(e.value, f.radicand(), emb) * e.mult;
      out.push_back(s);
    }
  }
  return out;
}

bool is_nilpotent(const WittClass& x) {
  if (x.field().orderings() == 0) return x.rank_is_even();
  for (const auto& s : signatures(x))
    if (s != 0) return false;
  return true;
}

RationalInvariants rational_invariants(const WittClass& x) {
  if (x.field().kind() != FieldKind::Rationals) fail(ErrorCode::FieldMismatch, "invariants need W(Q)");
  return rational_invariants_of(x.entries());
}

FiniteWittInvariant finite_invariant(const WittClass& x) {
  const auto& f = x.field();
  if (!f.is_finite() && !f.is_complex()) fail(ErrorCode::FieldMismatch, "finite invariant needs F_q or C");
  FiniteWittInvariant inv;
  inv.odd = !x.rank_is_even();
  if (f.is_complex()) return inv;
  FieldElement disc = f.one();
  for (const auto& e : x.entries())
    if (odd(e.mult)) disc = f.mul(disc, e.value);
  Integer r4 = nt::mod(x.rank(), Integer(4));
  if (r4 == 2 || r4 == 3) disc = f.neg(disc);
  inv.disc_nonsquare = !f.is_square(disc);
  return inv;
}

std::vector<WittClass> enumerate_finite_witt(const FieldDescriptor& f) {
  if (!f.is_finite() && !f.is_complex()) fail(ErrorCode::UnsupportedField, "W(k) is infinite for " + f.tag());
  std::vector<FieldElement> reps{f.one()};
  if (!f.is_complex()) reps.push_back(f.canonical_nonsquare());
  std::vector<WittClass> out{WittClass(f)};
  auto consider = [&](const WittClass& w) {
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  };
  for (const auto& c : reps) consider(WittClass::unit(f, c));
  for (const auto& c : reps)
    for (const auto& d : reps) consider(WittClass::unit(f, c) + WittClass::unit(f, d));
  return out;
}

bool is_unit(const WittClass& x) {
  return x * x == integer_class(1, x.field());
}

std::optional<WittClass> exact_quotient(const WittClass& c, const WittClass& d) {
  const auto& f = c.field();
  require_same_field(f, d.field());
  if (d.is_zero()) return std::nullopt;
  if (c.is_zero()) return WittClass(f);
  auto check = [&](const WittClass& q) { return q * d == c; };

  if (is_unit(d)) {
    WittClass q = c * d;
    if (check(q)) return q;
  }
  if (f.orderings() == 1) {
    Integer sc = signatures(c)[0], sd = signatures(d)[0];
    if (sd != 0 && c == integer_class(sc, f) && d == integer_class(sd, f) &&
        mpz_divisible_p(sc.get_mpz_t(), sd.get_mpz_t())) {
      WittClass q = integer_class(sc / sd, f);
      if (check(q)) return q;
    }
  }
  std::vector<FieldElement> gens{f.one(), f.element(-1)};
  for (const auto& e : c.entries()) gens.push_back(e.value);
  for (const auto& e : d.entries()) gens.push_back(e.value);
  for (const auto& g : gens)
    for (int t : {1, -1, 2, -2, 3, -3, 4, -4}) {
      WittClass q = Integer(t) * WittClass::unit(f, g);
      if (check(q)) return q;
    }
  return std::nullopt;
}

}  // namespace wloc
