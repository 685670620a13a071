#include "wloc/field.hpp"

#include <cctype>

#include "wloc/errors.hpp"

namespace wloc {

namespace {

int cmp(const Rational& x, const Rational& y) { return x < y ? -1 : (y < x ? 1 : 0); }

}  // namespace

bool element_less(const FieldElement& x, const FieldElement& y) {
  if (int c = cmp(abs(x.u), abs(y.u)); c != 0) return c < 0;
  if (int c = cmp(y.u, x.u); c != 0) return c < 0;  // positive before negative
  if (int c = cmp(abs(x.v), abs(y.v)); c != 0) return c < 0;
  return y.v < x.v;
}

FieldDescriptor FieldDescriptor::rationals() {
  return FieldDescriptor(FieldKind::Rationals, FieldKind::Rationals, 0, 0);
}

FieldDescriptor FieldDescriptor::reals() {
  return FieldDescriptor(FieldKind::Reals, FieldKind::Reals, 0, 0);
}

FieldDescriptor FieldDescriptor::finite_prime(long p) {
  if (p == 2) fail(ErrorCode::UnsupportedField, "characteristic 2 is not supported");
  if (!nt::is_prime(p)) fail(ErrorCode::UnsupportedField, std::to_string(p) + " is not an odd prime");
  return FieldDescriptor(FieldKind::FinitePrime, FieldKind::FinitePrime, p, 0);
}

FieldDescriptor FieldDescriptor::quad_ext(const FieldDescriptor& base, const Rational& a) {
  if (base.is_quad_ext())
    fail(ErrorCode::UnsupportedField, "quadratic extensions nest at most once");
  Rational ar = base.reduce(a);
  if (ar == 0) fail(ErrorCode::BadParameters, "radicand must be nonzero");
  if (base.is_square(FieldElement(ar)))
    fail(ErrorCode::BadParameters, "radicand " + ar.get_str() + " is a square in " + base.tag());
  return FieldDescriptor(FieldKind::QuadExt, base.kind_, base.p_, ar);
}

FieldDescriptor FieldDescriptor::base() const {
  if (!is_quad_ext()) return *this;
  switch (base_kind_) {
    case FieldKind::Rationals: return rationals();
    case FieldKind::Reals: return reals();
    default: return finite_prime(p_);
  }
}

int FieldDescriptor::orderings() const {
  switch (kind_) {
    case FieldKind::Rationals:
    case FieldKind::Reals: return 1;
    case FieldKind::FinitePrime: return 0;
    case FieldKind::QuadExt: return (base_kind_ == FieldKind::Rationals && a_ > 0) ? 2 : 0;
  }
  return 0;
}

std::string FieldDescriptor::tag() const {
  std::string base_tag;
  switch (base_kind_) {
    case FieldKind::Rationals: base_tag = "Q"; break;
    case FieldKind::Reals: base_tag = "R"; break;
    default: base_tag = "Fp:" + std::to_string(p_); break;
  }
  if (!is_quad_ext()) return base_tag;
  return base_tag + "(sqrt:" + a_.get_str() + ")";
}

Rational FieldDescriptor::reduce(const Rational& x) const {
  if (base_kind_ != FieldKind::FinitePrime) return x;
  Integer P = p_;
  Integer d = nt::mod(x.get_den(), P);
  if (d == 0) fail(ErrorCode::BadParameters, "denominator divisible by p");
  return Rational(nt::mod(x.get_num() * nt::inverse_mod(d, P), P));
}

FieldElement FieldDescriptor::element(const Rational& u, const Rational& v) const {
  if (!is_quad_ext() && v != 0) fail(ErrorCode::FieldMismatch, "sqrt coordinate outside an extension");
  return FieldElement(reduce(u), reduce(v));
}

FieldElement FieldDescriptor::sqrt_generator() const {
  if (!is_quad_ext()) fail(ErrorCode::FieldMismatch, tag() + " has no sqrt generator");
  return element(0, 1);
}

FieldElement FieldDescriptor::add(const FieldElement& x, const FieldElement& y) const {
  return element(x.u + y.u, x.v + y.v);
}

FieldElement FieldDescriptor::sub(const FieldElement& x, const FieldElement& y) const {
  return element(x.u - y.u, x.v - y.v);
}

FieldElement FieldDescriptor::neg(const FieldElement& x) const { return element(-x.u, -x.v); }

FieldElement FieldDescriptor::mul(const FieldElement& x, const FieldElement& y) const {
  return element(x.u * y.u + a_ * x.v * y.v, x.u * y.v + x.v * y.u);
}

Rational FieldDescriptor::norm(const FieldElement& x) const { return reduce(x.u * x.u - a_ * x.v * x.v); }

FieldElement FieldDescriptor::inv(const FieldElement& x) const {
  if (is_zero(x)) fail(ErrorCode::ZeroInput, "inverse of zero");
  Rational n = norm(x);
  if (base_kind_ == FieldKind::FinitePrime) {
    Rational ni = reduce(Rational(1) / n);
    return element(x.u * ni, -x.v * ni);
  }
  return element(x.u / n, -x.v / n);
}

bool FieldDescriptor::is_square(const FieldElement& x) const {
  if (is_zero(x)) return true;
  switch (kind_) {
    case FieldKind::Rationals: return nt::is_square(x.u);
    case FieldKind::Reals: return x.u > 0;
    case FieldKind::FinitePrime: return nt::legendre(x.u.get_num(), p_) == 1;
    case FieldKind::QuadExt: break;
  }
  if (base_kind_ == FieldKind::Reals) return true;
  if (base_kind_ == FieldKind::FinitePrime)
    return nt::legendre(norm(x).get_num(), p_) == 1;
  // Q(sqrt a): u + v sqrt(a) = (s + t sqrt(a))^2 forces the norm to be a
  // rational square n^2 and s^2 = (u +- n) / 2.
  if (x.v == 0) return nt::is_square(x.u) || nt::is_square(x.u / a_);
  Rational n2 = norm(x);
  if (!nt::is_square(n2)) return false;
  Rational n = nt::rational_sqrt(n2);
  for (const Rational& s2 : {Rational((x.u + n) / 2), Rational((x.u - n) / 2)}) {
    if (s2 <= 0 || !nt::is_square(s2)) continue;
    Rational s = nt::rational_sqrt(s2);
    Rational t = x.v / (2 * s);
    if (s * s + a_ * t * t == x.u) return true;
  }
  return false;
}

bool FieldDescriptor::same_square_class(const FieldElement& x, const FieldElement& y) const {
  return is_square(mul(x, inv(y)));
}

FieldElement FieldDescriptor::canonical_nonsquare() const {
  if (!is_finite()) fail(ErrorCode::UnsupportedField, "canonical non-square needs a finite field");
  if (!is_quad_ext()) return element(nt::least_nonresidue(p_));
  // every element of F_p is a square in F_{p^2}
  for (long u = 0; u < p_; ++u) {
    FieldElement c = element(u, 1);
    if (!is_square(c)) return c;
  }
  fail(ErrorCode::UnsupportedField, "no non-square found in " + tag());
}

FieldElement FieldDescriptor::square_class_rep(const FieldElement& x) const {
  if (is_zero(x)) fail(ErrorCode::ZeroInput, "square class of zero");
  switch (kind_) {
    case FieldKind::Rationals: return element(nt::squarefree_kernel(x.u));
    case FieldKind::Reals: return element(x.u > 0 ? 1 : -1);
    case FieldKind::FinitePrime: return is_square(x) ? one() : canonical_nonsquare();
    case FieldKind::QuadExt: break;
  }
  if (base_kind_ == FieldKind::Reals) return one();
  if (base_kind_ == FieldKind::FinitePrime) return is_square(x) ? one() : canonical_nonsquare();

  // Q(sqrt a): scale by a rational square to integer coordinates whose
  // content is squarefree.
  Integer l = nt::lcm(x.u.get_den(), x.v.get_den());
  Integer U = x.u.get_num() * (l / x.u.get_den());
  Integer V = x.v.get_num() * (l / x.v.get_den());
  if (V == 0) {
    Integer k1 = nt::squarefree_kernel(Rational(U));
    Integer k2 = nt::squarefree_kernel(Rational(U) * a_);
    FieldElement e1 = element(k1), e2 = element(k2);
    return element_less(e2, e1) ? e2 : e1;
  }
  Integer g = U == 0 ? abs(V) : nt::gcd(U, V);
  Integer sq = 1;
  for (const auto& [p, e] : nt::factor(g))
    for (int i = 0; i < e / 2; ++i) sq *= p * p;
  return element(Rational(U / sq), Rational(V / sq));
}

std::string FieldDescriptor::to_string(const FieldElement& x) const {
  if (!is_quad_ext() || x.v == 0) return x.u.get_str();
  std::string vpart;
  if (x.v == 1) vpart = "sqrt";
  else if (x.v == -1) vpart = "-sqrt";
  else vpart = x.v.get_str() + "*sqrt";
  if (x.u == 0) return vpart;
  return x.u.get_str() + (vpart[0] == '-' ? "" : "+") + vpart;
}

void require_same_field(const FieldDescriptor& x, const FieldDescriptor& y) {
  if (!(x == y)) fail(ErrorCode::FieldMismatch, x.tag() + " vs " + y.tag());
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

Rational parse_rational(const std::string& s, std::size_t offset) {
  if (s.empty()) throw SyntaxError(offset, "empty number");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool seen_slash = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
    } else if (s[i] == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw SyntaxError(offset + i, "bad number '" + s + "'");
    }
  }
  if (!seen_digit) throw SyntaxError(offset, "bad number '" + s + "'");
  Rational r(s[0] == '+' ? s.substr(1) : s);
  if (r.get_den() == 0) throw SyntaxError(offset, "zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace

FieldDescriptor parse_field(std::string_view tag_in) {
  std::string tag = strip_spaces(tag_in);
  std::string base = tag;
  std::string radicand;
  if (auto open = tag.find('('); open != std::string::npos) {
    if (tag.back() != ')' || tag.compare(open, 6, "(sqrt:") != 0)
      throw SyntaxError(open, "expected '(sqrt:a)' in field tag '" + tag + "'");
    base = tag.substr(0, open);
    radicand = tag.substr(open + 6, tag.size() - open - 7);
  }
  FieldDescriptor b;
  if (base == "Q") {
    b = FieldDescriptor::rationals();
  } else if (base == "R") {
    b = FieldDescriptor::reals();
  } else if (base.rfind("Fp:", 0) == 0 || (base.size() > 1 && base[0] == 'F')) {
    std::string digits = base.rfind("Fp:", 0) == 0 ? base.substr(3) : base.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw SyntaxError(0, "bad prime in field tag '" + tag + "'");
    b = FieldDescriptor::finite_prime(std::stol(digits));
  } else {
    throw SyntaxError(0, "unknown field tag '" + tag + "'");
  }
  if (radicand.empty()) return b;
  return FieldDescriptor::quad_ext(b, parse_rational(radicand, base.size() + 6));
}

FieldElement parse_scalar(std::string_view text, const FieldDescriptor& field) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw SyntaxError(0, "empty scalar");
  auto pos = s.find("sqrt");
  if (pos == std::string::npos) return field.element(parse_rational(s, 0));
  if (!field.is_quad_ext()) throw SyntaxError(pos, "'sqrt' outside a quadratic extension");
  if (pos + 4 != s.size()) throw SyntaxError(pos + 4, "trailing characters after 'sqrt'");
  // split "u [+-] v*sqrt": find the sign that starts the sqrt term
  std::string head = s.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;)
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  std::string upart = split == std::string::npos ? "" : head.substr(0, split);
  std::string vpart = split == std::string::npos ? head : head.substr(split);
  Rational v;
  if (vpart.empty() || vpart == "+") v = 1;
  else if (vpart == "-") v = -1;
  else v = parse_rational(vpart, upart.size());
  Rational u = upart.empty() ? Rational(0) : parse_rational(upart, 0);
  return field.element(u, v);
}

}  // namespace wloc
