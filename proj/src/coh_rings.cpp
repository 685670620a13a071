#include "wloc/coh_rings.hpp"

#include <algorithm>
#include <numeric>

#include "wloc/errors.hpp"

namespace wloc {

Presentation Presentation::bsl2n(int n, const FieldDescriptor& field) {
  if (n < 1) fail(ErrorCode::BadParameters, "BSL2n needs n >= 1");
  return Presentation(PresentationKind::BSL2n, n, field, std::nullopt);
}

Presentation Presentation::bnn(int n, const FieldDescriptor& field) {
  if (n < 1) fail(ErrorCode::BadParameters, "BNn needs n >= 1");
  return Presentation(PresentationKind::BNn, n, field, std::nullopt);
}

Presentation Presentation::twisted_point(const QuadExtContext& ctx) {
  return Presentation(PresentationKind::TwistedPoint, 1, ctx.base(), ctx);
}

Presentation Presentation::bn_twisted_module(const FieldDescriptor& field) {
  return Presentation(PresentationKind::BNTwistedModule, 1, field, std::nullopt);
}

const QuadExtContext& Presentation::ctx() const {
  if (!ctx_) fail(ErrorCode::PresentationMismatch, name() + " has no quadratic extension");
  return *ctx_;
}

std::size_t Presentation::monomial_size() const {
  switch (kind_) {
    case PresentationKind::BSL2n: return static_cast<std::size_t>(n_);
    case PresentationKind::BNn: return 2 * static_cast<std::size_t>(n_);
    case PresentationKind::TwistedPoint: return 2;
    case PresentationKind::BNTwistedModule: return 1;
  }
  return 0;
}

std::string Presentation::name() const {
  switch (kind_) {
    case PresentationKind::BSL2n: return "BSL2n(" + std::to_string(n_) + ")";
    case PresentationKind::BNn: return n_ == 1 ? "BN" : "BNn(" + std::to_string(n_) + ")";
    case PresentationKind::TwistedPoint: return "TwistedPoint(" + ctx_->ext().tag() + ")";
    case PresentationKind::BNTwistedModule: return "BNTwistedModule";
  }
  return "?";
}

bool operator==(const Presentation& x, const Presentation& y) {
  if (x.kind_ != y.kind_ || x.n_ != y.n_ || !(x.field_ == y.field_)) return false;
  if (x.kind_ == PresentationKind::TwistedPoint) return *x.ctx_ == *y.ctx_;
  return true;
}

namespace {

bool all_zero(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](int v) { return v == 0; });
}

// Coset representative of c modulo I_a: over finite fields the first element
// of W(k) in the coset, otherwise c itself.
WittClass reduce_mod_Ia(const WittClass& c, const QuadExtContext& ctx) {
  const auto& f = ctx.base();
  if (!f.is_finite()) return c;
  for (const auto& w : enumerate_finite_witt(f))
    if (in_Ia(c - w, ctx)) return w;
  return c;
}

std::string power(const std::string& g, int e) {
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

std::string monomial_string(const Presentation& pres, const Monomial& m) {
  std::vector<std::string> parts;
  switch (pres.kind()) {
    case PresentationKind::BSL2n:
      for (int i = 0; i < pres.n(); ++i)
        if (m[i] > 0) parts.push_back(power(pres.n() == 1 ? "e" : "e" + std::to_string(i + 1), m[i]));
      break;
    case PresentationKind::BNn:
      for (int i = 0; i < pres.n(); ++i) {
        std::string idx = pres.n() == 1 ? "" : std::to_string(i + 1);
        if (m[2 * i] > 0) parts.push_back(power("x" + idx, m[2 * i]));
        if (m[2 * i + 1] > 0) parts.push_back(power("e" + idx, m[2 * i + 1]));
      }
      break;
    case PresentationKind::TwistedPoint:
      if (m[0] > 0) parts.push_back(power("y", m[0]));
      if (m[1] > 0) parts.push_back(power("e", m[1]));
      break;
    case PresentationKind::BNTwistedModule:
      if (m[0] > 0) parts.push_back(power("e", m[0]));
      parts.push_back("eT");
      break;
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

}  // namespace

bool monomial_print_less(const Presentation& pres, const Monomial& a, const Monomial& b) {
  int da = GradedElement::monomial_degree(pres, a), db = GradedElement::monomial_degree(pres, b);
  if (da != db) return da < db;
  return b < a;
}

GradedElement::GradedElement(Presentation pres) : pres_(std::move(pres)) {}

GradedElement GradedElement::scalar(const Presentation& pres, const WittClass& c) {
  return term(pres, Monomial(pres.monomial_size(), 0), c);
}

GradedElement GradedElement::integer(const Presentation& pres, long n) {
  return scalar(pres, integer_class(n, pres.field()));
}

GradedElement GradedElement::term(const Presentation& pres, Monomial m, const WittClass& c) {
  GradedElement g(pres);
  g.add_term(std::move(m), c);
  return g;
}

GradedElement GradedElement::generator(const Presentation& pres, std::string_view name) {
  auto unknown = [&]() -> GradedElement {
    fail(ErrorCode::UnknownGenerator, "'" + std::string(name) + "' is not a generator of " + pres.name());
  };
  const WittClass one = integer_class(1, pres.field());
  Monomial m(pres.monomial_size(), 0);
  auto index_of = [&](char head) -> int {
    if (name.empty() || name[0] != head) return -1;
    std::string_view rest = name.substr(1);
    if (rest.empty()) return pres.n() == 1 ? 1 : -1;
    if (rest.find_first_not_of("0123456789") != std::string_view::npos || rest[0] == '0') return -1;
    int i = std::stoi(std::string(rest));
    return (i >= 1 && i <= pres.n()) ? i : -1;
  };
  switch (pres.kind()) {
    case PresentationKind::BSL2n: {
      int i = index_of('e');
      if (i < 0) return unknown();
      m[i - 1] = 1;
      return term(pres, m, one);
    }
    case PresentationKind::BNn: {
      if (int i = index_of('x'); i > 0) {
        m[2 * (i - 1)] = 1;
        return term(pres, m, one);
      }
      if (int i = index_of('e'); i > 0) {
        m[2 * (i - 1) + 1] = 1;
        return term(pres, m, one);
      }
      return unknown();
    }
    case PresentationKind::TwistedPoint:
      if (name == "y") m[0] = 1;
      else if (name == "e") m[1] = 1;
      else if (name == "x") return scalar(pres, pres.ctx().radicand_class());
      else return unknown();
      return term(pres, m, one);
    case PresentationKind::BNTwistedModule:
      if (name == "eT") return term(pres, m, one);
      if (name == "e" || name == "x") return generator(Presentation::bn(pres.field()), name);
      return unknown();
  }
  return unknown();
}

void GradedElement::add_term(Monomial m, const WittClass& c_in) {
  if (m.size() != pres_.monomial_size()) fail(ErrorCode::PresentationMismatch, "monomial size mismatch");
  if (std::any_of(m.begin(), m.end(), [](int v) { return v < 0; }))
    fail(ErrorCode::BadParameters, "negative exponent");
  require_same_field(c_in.field(), pres_.field());
  if (c_in.is_zero()) return;
  WittClass c = c_in;
  switch (pres_.kind()) {
    case PresentationKind::BNn:
      for (int i = 0; i < pres_.n(); ++i) {
        m[2 * i] %= 2;
        if (m[2 * i] == 1 && m[2 * i + 1] > 0) {  // x e = -e
          m[2 * i] = 0;
          c = -c;
        }
      }
      break;
    case PresentationKind::TwistedPoint:
      if (m[0] >= 2) {  // y^2 = 2(1 - <a>)
        WittClass y2 = integer_class(2, pres_.field()) * pres_.ctx().one_minus_a();
        for (int i = 0; i < m[0] / 2; ++i) c = c * y2;
        m[0] %= 2;
      }
      break;
    default: break;
  }
  auto it = terms_.find(m);
  WittClass sum = it == terms_.end() ? c : it->second + c;
  bool vanishes = sum.is_zero();
  if (!vanishes && pres_.kind() == PresentationKind::TwistedPoint && !all_zero(m)) {
    // I_a y = I_a e = 0
    if (in_Ia(sum, pres_.ctx())) vanishes = true;
    else sum = reduce_mod_Ia(sum, pres_.ctx());
  }
  if (vanishes) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(std::move(m), sum);
  } else {
    it->second = sum;
  }
}

WittClass GradedElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? WittClass(pres_.field()) : it->second;
}

WittClass GradedElement::constant_term() const { return coefficient(Monomial(pres_.monomial_size(), 0)); }

bool GradedElement::is_scalar() const {
  return pres_.kind() != PresentationKind::BNTwistedModule &&
         std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return all_zero(t.first); });
}

int GradedElement::monomial_degree(const Presentation& pres, const Monomial& m) {
  int d = 0;
  switch (pres.kind()) {
    case PresentationKind::BSL2n:
      for (int v : m) d += 2 * v;
      return d;
    case PresentationKind::BNn:
      for (int i = 0; i < pres.n(); ++i) d += 2 * m[2 * i + 1];
      return d;
    case PresentationKind::TwistedPoint: return 2 * m[1];
    case PresentationKind::BNTwistedModule: return 2 * m[0] + 2;
  }
  return d;
}

std::optional<int> GradedElement::degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int dm = monomial_degree(pres_, m);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, WittClass>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&](const auto* a, const auto* b) { return monomial_print_less(pres_, a->first, b->first); });
  std::string out;
  for (const auto* t : order) {
    if (!out.empty()) out += " + ";
    const auto& [m, c] = *t;
    std::string mon = monomial_string(pres_, m);
    if (mon.empty()) {
      out += c.entries().size() > 1 && order.size() > 1 ? "(" + c.to_string() + ")" : c.to_string();
      continue;
    }
    const auto& es = c.entries();
    if (es.size() == 1 && es[0].value == pres_.field().one()) {
      out += es[0].mult == 1 ? mon : es[0].mult.get_str() + "*" + mon;
    } else if (es.size() == 1) {
      out += c.to_string() + "*" + mon;
    } else {
      out += "(" + c.to_string() + ")*" + mon;
    }
  }
  return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& y) {
  if (y.is_zero() && y.pres_.field() == pres_.field()) return *this;
  if (is_zero() && !(pres_ == y.pres_) && y.pres_.field() == pres_.field()) {
    *this = y;
    return *this;
  }
  if (!(pres_ == y.pres_)) fail(ErrorCode::PresentationMismatch, pres_.name() + " vs " + y.pres_.name());
  for (const auto& [m, c] : y.terms_) add_term(m, c);
  return *this;
}

GradedElement GradedElement::operator-() const {
  GradedElement out(pres_);
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

GradedElement operator*(const GradedElement& x, const GradedElement& y) {
  const auto& px = x.presentation();
  const auto& py = y.presentation();
  const bool mx = px.kind() == PresentationKind::BNTwistedModule;
  const bool my = py.kind() == PresentationKind::BNTwistedModule;
  if (mx && my) fail(ErrorCode::Unsupported, "eT * eT is not part of the module structure");
  if (mx || my) {
    const GradedElement& ring = mx ? y : x;
    const GradedElement& mod = mx ? x : y;
    if (!ring.presentation().is_bn() || !(ring.presentation().field() == mod.presentation().field()))
      fail(ErrorCode::PresentationMismatch, "the twisted module is a module over BN only");
    GradedElement out(mod.presentation());
    for (const auto& [a, c] : ring.terms())
      for (const auto& [b, d] : mod.terms()) {
        WittClass coef = c * d;
        if (a[0] % 2 == 1) coef = -coef;  // x eT = -eT
        out.add_term({a[1] + b[0]}, coef);
      }
    return out;
  }
  if (!(px == py)) fail(ErrorCode::PresentationMismatch, px.name() + " vs " + py.name());
  GradedElement out(px);
  for (const auto& [a, c] : x.terms())
    for (const auto& [b, d] : y.terms()) {
      Monomial m(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
      out.add_term(std::move(m), c * d);
    }
  return out;
}

GradedElement operator*(const WittClass& c, const GradedElement& x) {
  GradedElement out(x.presentation());
  for (const auto& [m, d] : x.terms()) out.add_term(m, c * d);
  return out;
}

bool operator==(const GradedElement& x, const GradedElement& y) {
  if (!(x.presentation() == y.presentation())) return x.is_zero() && y.is_zero();
  return (x - y).is_zero();
}

GradedElement GradedElement::pow(int k) const {
  if (k < 0) fail(ErrorCode::NonPositiveExponent, "negative power");
  if (pres_.kind() == PresentationKind::BNTwistedModule && k != 1)
    fail(ErrorCode::Unsupported, "powers of twisted module elements are not defined");
  GradedElement out = integer(pres_, 1);
  GradedElement b = *this;
  while (k > 0) {
    if (k & 1) out = out * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return out;
}

GradedElement e_star(int n, const FieldDescriptor& field) {
  Presentation pres = Presentation::bsl2n(n, field);
  auto e = [&](int i) { return GradedElement::generator(pres, n == 1 ? "e" : "e" + std::to_string(i)); };
  GradedElement out = GradedElement::integer(pres, 1);
  for (int i = 1; i <= n; ++i) out = out * e(i);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) out = out * (e(i) - e(j));
  return out;
}

GradedElement kunneth(const std::vector<GradedElement>& factors) {
  if (factors.empty()) fail(ErrorCode::BadParameters, "empty Kunneth product");
  const auto& first = factors.front().presentation();
  if (first.kind() != PresentationKind::BSL2n && first.kind() != PresentationKind::BNn)
    fail(ErrorCode::PresentationMismatch, "Kunneth products are defined for BSL2n and BNn");
  int total = 0;
  for (const auto& f : factors) {
    const auto& p = f.presentation();
    if (!(p.field() == first.field())) fail(ErrorCode::FieldMismatch, p.field().tag() + " vs " + first.field().tag());
    if (p.kind() != first.kind()) fail(ErrorCode::PresentationMismatch, p.name() + " vs " + first.name());
    total += p.n();
  }
  Presentation target = first.kind() == PresentationKind::BSL2n ? Presentation::bsl2n(total, first.field())
                                                                : Presentation::bnn(total, first.field());
  GradedElement out = GradedElement::integer(target, 1);
  std::size_t offset = 0;
  for (const auto& f : factors) {
    GradedElement embedded(target);
    for (const auto& [m, c] : f.terms()) {
      Monomial big(target.monomial_size(), 0);
      std::copy(m.begin(), m.end(), big.begin() + static_cast<long>(offset));
      embedded.add_term(std::move(big), c);
    }
    offset += f.presentation().monomial_size();
    out = out * embedded;
  }
  return out;
}

long n_loc_multiplier(const std::vector<std::pair<long, OrbitType>>& orbits) {
  long m = 1;
  for (const auto& [exp, type] : orbits) {
    if (exp < 1) fail(ErrorCode::NonPositiveExponent, "character exponent must be positive");
    long factor = 1;
    switch (type) {
      case OrbitType::A: factor = 1; break;
      case OrbitType::B:
      case OrbitType::CPlus: factor = exp; break;
      case OrbitType::CMinus: factor = 2 * exp; break;
    }
    m = std::lcm(m, factor);
  }
  return m;
}

GradedElement restrict_to_twisted(const GradedElement& x, const QuadExtContext& ctx) {
  if (!x.presentation().is_bn()) fail(ErrorCode::PresentationMismatch, "restriction to a twisted point starts from BN");
  require_same_field(x.presentation().field(), ctx.base());
  Presentation tp = Presentation::twisted_point(ctx);
  GradedElement out(tp);
  for (const auto& [m, c] : x.terms()) out.add_term({0, m[1]}, m[0] % 2 ? c * ctx.radicand_class() : c);
  return out;
}

std::optional<GradedElement> exact_divide(const GradedElement& f, const GradedElement& d) {
  const auto& pres = f.presentation();
  if (!(pres == d.presentation()) || pres.kind() == PresentationKind::BNTwistedModule) return std::nullopt;
  if (d.is_zero()) return std::nullopt;
  GradedElement q(pres);
  if (f.is_zero()) return q;
  const auto& [ld, cd] = *d.terms().rbegin();
  GradedElement r = f;
  for (int it = 0; it < 4096 && !r.is_zero(); ++it) {
    const auto& [lr, cr] = *r.terms().rbegin();
    Monomial m(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      m[i] = lr[i] - ld[i];
      if (m[i] < 0) return std::nullopt;
    }
    auto c = exact_quotient(cr, cd);
    if (!c) return std::nullopt;
    GradedElement t = GradedElement::term(pres, m, *c);
    q += t;
    r = r - t * d;
  }
  if (!r.is_zero() || !(q * d == f)) return std::nullopt;
  return q;
}

namespace {

// every term of s involves e_i (factor i of BNn, or e of a twisted point)
bool divisible_by_e(const GradedElement& s, int factor) {
  const auto& pres = s.presentation();
  for (const auto& [m, c] : s.terms()) {
    int e = pres.kind() == PresentationKind::BNn ? m[2 * factor + 1] : m[1];
    if (e == 0) return false;
  }
  return !s.is_zero();
}

GradedElement simplify_numerator(const GradedElement& num, const GradedElement& s) {
  const auto& pres = num.presentation();
  if (pres.kind() == PresentationKind::BNn) {
    GradedElement out = num;
    for (int i = 0; i < pres.n(); ++i) {
      if (!divisible_by_e(s, i)) continue;
      // (1 + x_i) is killed by a power of s: substitute x_i = -1
      GradedElement next(pres);
      for (const auto& [m, c] : out.terms()) {
        Monomial mm = m;
        WittClass cc = c;
        if (mm[2 * i] % 2 == 1) {
          mm[2 * i] = 0;
          cc = -cc;
        }
        next.add_term(mm, cc);
      }
      out = next;
    }
    return out;
  }
  if (pres.kind() == PresentationKind::TwistedPoint && divisible_by_e(s, 0)) {
    GradedElement out(pres);
    for (const auto& [m, c] : num.terms())
      if (!all_zero(m) || !in_Ia(c, pres.ctx())) out.add_term(m, c);
    return out;
  }
  return num;
}

}  // namespace

LocalizedElement::LocalizedElement(GradedElement numerator, GradedElement inverted, int exponent)
    : num_(std::move(numerator)), s_(std::move(inverted)), k_(exponent) {
  if (k_ < 0) fail(ErrorCode::NonPositiveExponent, "negative denominator exponent");
  if (!(num_.presentation() == s_.presentation())) {
    if (num_.is_zero()) num_ = GradedElement(s_.presentation());
    else fail(ErrorCode::PresentationMismatch, num_.presentation().name() + " vs " + s_.presentation().name());
  }
  if (s_.presentation().kind() == PresentationKind::BNTwistedModule)
    fail(ErrorCode::NonHomogeneousDenominator, "cannot invert a module element");
  auto d = s_.degree();
  if (!d || *d <= 0) fail(ErrorCode::NonHomogeneousDenominator, "inverted element " + s_.to_string() + " is not homogeneous of positive degree");
  num_ = simplify_numerator(num_, s_);
}

std::optional<GradedElement> LocalizedElement::cleared() const {
  if (k_ == 0) return num_;
  return exact_divide(num_, s_.pow(k_));
}

std::optional<LocalizedElement> LocalizedElement::inverse() const {
  if (num_.is_zero()) return std::nullopt;
  auto dn = num_.degree();
  int ds = *s_.degree();
  if (!dn || *dn % ds != 0) return std::nullopt;
  int j = *dn / ds;
  auto q = exact_divide(num_, s_.pow(j));
  if (!q || !q->is_scalar()) return std::nullopt;
  WittClass c = q->constant_term();
  if (!is_unit(c)) return std::nullopt;
  return LocalizedElement(c * s_.pow(k_), s_, j);
}

std::string LocalizedElement::to_string() const {
  if (k_ == 0 || num_.is_zero()) return num_.to_string();
  std::string den = "(" + s_.to_string() + ")";
  if (k_ > 1) den += "^" + std::to_string(k_);
  return "(" + num_.to_string() + ") / " + den;
}

LocalizedElement operator+(const LocalizedElement& x, const LocalizedElement& y) {
  const auto& s = x.inverted();
  const auto& t = y.inverted();
  const int k = x.exponent(), l = y.exponent();
  if (s == t) {
    int m = std::max(k, l);
    return LocalizedElement(x.numerator() * s.pow(m - k) + y.numerator() * s.pow(m - l), s, m);
  }
  int m = std::max(k, l);
  GradedElement num = x.numerator() * s.pow(m - k) * t.pow(m) + y.numerator() * t.pow(m - l) * s.pow(m);
  return LocalizedElement(num, s * t, m);
}

LocalizedElement operator*(const LocalizedElement& x, const LocalizedElement& y) {
  const auto& s = x.inverted();
  const auto& t = y.inverted();
  if (s == t) return LocalizedElement(x.numerator() * y.numerator(), s, x.exponent() + y.exponent());
  int m = std::max(x.exponent(), y.exponent());
  GradedElement num = x.numerator() * y.numerator() * s.pow(m - x.exponent()) * t.pow(m - y.exponent());
  return LocalizedElement(num, s * t, m);
}

LocalizedElement operator-(const LocalizedElement& x) {
  return LocalizedElement(-x.numerator(), x.inverted(), x.exponent());
}

LocalizedElement localize(const GradedElement& x, const GradedElement& s) { return LocalizedElement(x, s, 0); }

bool loc_eq(const LocalizedElement& u, const LocalizedElement& v) {
  if (!(u.presentation() == v.presentation())) return false;
  const auto& s = u.inverted();
  const auto& t = v.inverted();
  GradedElement diff = u.numerator() * t.pow(v.exponent()) - v.numerator() * s.pow(u.exponent());
  GradedElement st = s * t;
  for (int j = 0; j <= 4; ++j) {
    if (diff.is_zero()) return true;
    diff = diff * st;
  }
  return diff.is_zero();
}

}  // namespace wloc
