#include "wloc/localization.hpp"

#include <exception>

#include "wloc/errors.hpp"

namespace wloc {

namespace {

struct Evaluated {
  LocalizedElement pushed;
  bool sign_ambiguous = false;
};

void check_group(const GroupDescriptor& g) {
  if (g.group.n < 1) fail(ErrorCode::BadParameters, "group rank must be positive");
  if (g.group.kind == GroupKind::N && g.group.n != 1) fail(ErrorCode::BadParameters, "N problems have n = 1");
}

bool has_unit_part(const GradedElement& x) {
  for (const auto& [m, c] : x.terms())
    if (!is_nilpotent(c)) return true;
  return false;
}

GradedElement default_denominator(const Presentation& pres) {
  return GradedElement::generator(pres, pres.n() == 1 ? "e" : "e1");
}

LocalizedElement residue_impl(const FixedComponent& c, const GroupDescriptor& g, bool* sign_ambiguous) {
  Presentation cp = component_presentation(c, g);
  const bool twisted = c.residue == ResidueKind::TwistedPoint;
  if (!(c.normal.group == g.group)) fail(ErrorCode::BadParameters, "normal bundle of " + c.id + " uses another group");

  EulerClassValue ne = euler_rep(c.normal, g.field);
  if (ne.known_square.is_zero() || !has_unit_part(ne.known_square))
    fail(ErrorCode::NonInvertibleNormalEuler, "generic Euler class of " + c.normal.to_string() + " is nilpotent");

  auto to_component = [&](const GradedElement& x) { return twisted ? restrict_to_twisted(x, *c.ctx) : x; };
  const GradedElement one = GradedElement::integer(cp, 1);

  if (const auto* rep = std::get_if<RepSum>(&c.restricted); rep && rep->same_as(c.normal)) {
    GradedElement d = ne.value ? to_component(*ne.value) : to_component(ne.known_square);
    auto deg = d.degree();
    if (!deg || *deg <= 0) d = default_denominator(cp);
    return LocalizedElement(one, d, 0);
  }

  GradedElement num(cp);
  if (const auto* rep = std::get_if<RepSum>(&c.restricted)) {
    if (!(rep->group == g.group)) fail(ErrorCode::BadParameters, "restricted class of " + c.id + " uses another group");
    EulerClassValue rv = euler_rep(*rep, g.field);
    if (!rv.value) fail(ErrorCode::UnsupportedIrrep, "only the square of e(" + rep->to_string() + ") is known");
    if (rv.determinacy == Determinacy::UpToSign) *sign_ambiguous = true;
    num = to_component(*rv.value);
  } else {
    num = std::get<GradedElement>(c.restricted);
    if (!(num.presentation().field() == g.field))
      fail(ErrorCode::InconsistentField, "restricted class of " + c.id + " lives over " + num.presentation().field().tag());
    if (!(num.presentation() == cp)) {
      if (!num.is_zero()) fail(ErrorCode::PresentationMismatch, num.presentation().name() + " vs " + cp.name());
      num = GradedElement(cp);
    }
  }

  if (!ne.value)
    fail(ErrorCode::NonInvertibleNormalEuler, "only the square of e(" + c.normal.to_string() + ") is known");
  if (ne.determinacy == Determinacy::UpToSign) *sign_ambiguous = true;
  GradedElement d = to_component(*ne.value);
  auto deg = d.degree();
  if (!deg || *deg <= 0) {
    if (!(d == one)) fail(ErrorCode::NonInvertibleNormalEuler, "normal Euler class has degree 0");
    return LocalizedElement(num, default_denominator(cp), 0);
  }
  return LocalizedElement(num, d, 1);
}

Evaluated evaluate(const FixedComponent& c, const GroupDescriptor& g) {
  bool ambiguous = false;
  LocalizedElement r = residue_impl(c, g, &ambiguous);
  return {push_to_base(r, c, g), ambiguous};
}

void validate(const LocalizationProblem& p) {
  check_group(p.group);
  if (p.invert_m && *p.invert_m == 0) fail(ErrorCode::BadParameters, "M must be nonzero");
  for (const auto& c : p.components) {
    if (c.ctx && !(c.ctx->base() == p.group.field))
      fail(ErrorCode::InconsistentField, c.id + " is a point over " + c.ctx->ext().tag() + ", base is " + p.group.field.tag());
    if (const auto* lit = std::get_if<GradedElement>(&c.restricted);
        lit && !(lit->presentation().field() == p.group.field))
      fail(ErrorCode::InconsistentField, c.id + " restricted class over " + lit->presentation().field().tag());
  }
}

ResidueResult reduce(const LocalizationProblem& p, const std::vector<Evaluated>& parts) {
  const GradedElement L = localizing_element(p);
  const Presentation base = L.presentation();
  ResidueResult out{LocalizedElement(GradedElement(base), L, 0), std::nullopt, std::nullopt, false, false, {}};

  std::vector<GradedElement> cleared;
  for (const auto& part : parts) {
    out.sign_ambiguous = out.sign_ambiguous || part.sign_ambiguous;
    if (auto c = part.pushed.cleared()) cleared.push_back(*c);
  }
  if (cleared.size() == parts.size()) {
    GradedElement sum(base);
    for (const auto& c : cleared) sum += c;
    out.value = LocalizedElement(sum, L, 0);
    out.cleared = out.value.numerator();
  } else {
    // common denominator of all residues, then one exact division
    LocalizedElement acc = parts.front().pushed;
    for (std::size_t i = 1; i < parts.size(); ++i) acc = acc + parts[i].pushed;
    out.value = acc;
    if (auto c = acc.cleared()) out.cleared = LocalizedElement(*c, L, 0).numerator();
  }
  if (out.cleared && out.cleared->is_scalar()) out.degree_zero = out.cleared->constant_term();

  if (out.sign_ambiguous) out.notes.push_back("some Euler classes are only known up to sign");
  if (p.group.group.kind == GroupKind::N) {
    long m = p.invert_m.value_or(1);
    if (m % 2 == 0 && p.group.field.orderings() == 0) {
      out.potentially_vacuous = true;
      out.notes.push_back("M = " + std::to_string(m) + " is even and the base field is nonreal: M may be nilpotent");
    }
  }
  if (p.group.field.kind() == FieldKind::FinitePrime)
    out.notes.push_back("base field has characteristic " + std::to_string(p.group.field.prime()) +
                        "; fixed components are isolated points");
  return out;
}

}  // namespace

Presentation component_presentation(const FixedComponent& c, const GroupDescriptor& g) {
  check_group(g);
  if (c.residue == ResidueKind::TwistedPoint) {
    if (g.group.kind != GroupKind::N) fail(ErrorCode::BadParameters, "twisted points need the group N");
    if (!c.ctx) fail(ErrorCode::BadParameters, c.id + " is a twisted point without a radicand");
    if (!(c.ctx->base() == g.field)) fail(ErrorCode::InconsistentField, c.ctx->base().tag() + " vs " + g.field.tag());
    return Presentation::twisted_point(*c.ctx);
  }
  return euler_presentation(g.group, g.field);
}

GradedElement localizing_element(const LocalizationProblem& p) {
  check_group(p.group);
  if (p.group.group.kind == GroupKind::SL2n) return e_star(p.group.group.n, p.group.field);
  Presentation bn = Presentation::bn(p.group.field);
  long m = p.invert_m.value_or(1);
  if (m == 0) fail(ErrorCode::BadParameters, "M must be nonzero");
  WittClass mc = integer_class(m, p.group.field);
  if (mc.is_zero())
    fail(ErrorCode::BadParameters, "M = " + std::to_string(m) + " is zero in W(" + p.group.field.tag() +
                                       "), so the localized ring is zero");
  return mc * GradedElement::generator(bn, "e");
}

LocalizedElement component_residue(const FixedComponent& c, const GroupDescriptor& g) {
  bool ambiguous = false;
  return residue_impl(c, g, &ambiguous);
}

GradedElement twisted_pushforward(const GradedElement& x) {
  const auto& pres = x.presentation();
  if (pres.kind() != PresentationKind::TwistedPoint)
    fail(ErrorCode::PresentationMismatch, "pushforward starts from a twisted point");
  const auto& ctx = pres.ctx();
  const auto& k = ctx.base();
  Presentation bn = Presentation::bn(k);
  const WittClass two = WittClass::unit(k, k.element(2));
  const WittClass two_a = WittClass::unit(k, k.element(2 * ctx.a()));
  GradedElement out(bn);
  for (const auto& [m, c] : x.terms()) {
    if (m[0] == 1) continue;  // pi_*(y) = 0
    if (m[1] == 0) {
      out.add_term({0, 0}, c * two);
      out.add_term({1, 0}, c * two_a);
    } else {
      out.add_term({0, m[1]}, c * (two - two_a));
    }
  }
  return out;
}

LocalizedElement push_to_base(const LocalizedElement& x, const FixedComponent& c, const GroupDescriptor& g) {
  Presentation cp = component_presentation(c, g);
  if (!(x.presentation() == cp)) fail(ErrorCode::PresentationMismatch, x.presentation().name() + " vs " + cp.name());
  if (c.residue == ResidueKind::RationalPoint) {
    if (c.residue_field && !(*c.residue_field == g.field))
      fail(ErrorCode::UnsupportedResidueField, "rational point of " + c.id + " has residue field " + c.residue_field->tag());
    return x;
  }
  // the inverted element must come from BN
  Presentation bn = Presentation::bn(g.field);
  GradedElement lift(bn);
  for (const auto& [m, coef] : x.inverted().terms()) {
    if (m[0] != 0) fail(ErrorCode::BadParameters, "inverted element involves y");
    lift.add_term({0, m[1]}, coef);
  }
  if (!(restrict_to_twisted(lift, *c.ctx) == x.inverted()))
    fail(ErrorCode::BadParameters, "inverted element is not pulled back from BN");
  return LocalizedElement(twisted_pushforward(x.numerator()), lift, x.exponent());
}

ResidueResult bott_residue_serial(const LocalizationProblem& p) {
  validate(p);
  std::vector<Evaluated> parts;
  for (const auto& c : p.components) parts.push_back(evaluate(c, p.group));
  return reduce(p, parts);
}

ResidueResult bott_residue(const LocalizationProblem& p) {
  validate(p);
  const long n = static_cast<long>(p.components.size());
  std::vector<std::optional<Evaluated>> slots(p.components.size());
  std::vector<std::exception_ptr> errors(p.components.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      slots[i] = evaluate(p.components[i], p.group);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Evaluated> parts;
  for (auto& s : slots) parts.push_back(std::move(*s));
  return reduce(p, parts);
}

LocalizationProblem build_projective_problem(int dim, int n, const FieldDescriptor& field) {
  if (n < 1) fail(ErrorCode::BadParameters, "n must be positive");
  LocalizationProblem p{{{GroupKind::SL2n, n}, field}, {}, std::nullopt};
  if (dim == 2 * n - 1) return p;
  if (dim != 2 * n) fail(ErrorCode::BadDimension, "projective space of dimension " + std::to_string(dim) +
                                                     " is not 2n or 2n-1 for n = " + std::to_string(n));
  RepSum tangent = RepSum::sl2n(n);
  for (int i = 1; i <= n; ++i) tangent.add(SL2nIrrep::fundamental(i));
  p.components.push_back({"pt", ResidueKind::RationalPoint, std::nullopt, tangent, tangent, std::nullopt, std::nullopt});
  return p;
}

LocalizationProblem build_grassmannian_problem(int m, int ambient, int n, const FieldDescriptor& field) {
  if (n < 1) fail(ErrorCode::BadParameters, "n must be positive");
  if (ambient != 2 * n && ambient != 2 * n + 1)
    fail(ErrorCode::BadParameters, "ambient dimension must be 2n or 2n+1");
  if (m <= 0 || m >= ambient) fail(ErrorCode::BadParameters, "need 0 < m < ambient");
  LocalizationProblem p{{{GroupKind::SL2n, n}, field}, {}, std::nullopt};
  const bool odd_ambient = ambient == 2 * n + 1;
  if (!odd_ambient && m % 2 == 1) return p;  // no invariant subspaces
  const bool with_line = m % 2 == 1;
  const int r = m / 2;

  // r-subsets of {1..n} in lexicographic order
  std::vector<int> subset(r);
  for (int i = 0; i < r; ++i) subset[i] = i + 1;
  while (true) {
    std::vector<bool> in(n + 1, false);
    for (int i : subset) in[i] = true;
    RepSum normal = RepSum::sl2n(n);
    for (int i : subset)
      for (int j = 1; j <= n; ++j)
        if (!in[j]) normal.add(SL2nIrrep::tensor(i, j));
    if (odd_ambient) {
      if (with_line) {
        for (int j = 1; j <= n; ++j)
          if (!in[j]) normal.add(SL2nIrrep::fundamental(j));
      } else {
        for (int i : subset) normal.add(SL2nIrrep::fundamental(i));
      }
    }
    std::string id = "F{";
    for (std::size_t t = 0; t < subset.size(); ++t) id += (t ? "," : "") + std::to_string(subset[t]);
    id += with_line ? "}+L" : "}";
    p.components.push_back({id, ResidueKind::RationalPoint, std::nullopt, normal, normal, std::nullopt, std::nullopt});

    int i = r - 1;
    while (i >= 0 && subset[i] == n - r + i + 1) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
  }
  return p;
}

}  // namespace wloc
