// Randomized laws. Seeds are fixed so failures reproduce.
#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "wloc/verify.hpp"

using namespace wloc;

namespace {

std::vector<FieldDescriptor> all_fields() {
  std::vector<FieldDescriptor> out;
  for (const char* tag : {"Q", "R", "F3", "F5", "F7", "F11", "Q(sqrt:2)", "Q(sqrt:-1)", "Fp:3(sqrt:2)", "R(sqrt:-1)"})
    out.push_back(parse_field(tag));
  return out;
}

QuadraticForm random_form(const FieldDescriptor& f, Rng& rng, int max_rank) {
  QuadraticForm q{f, {}};
  int r = std::uniform_int_distribution<int>(0, max_rank)(rng);
  for (int i = 0; i < r; ++i) q.entries.push_back(random_unit(f, rng));
  return q;
}

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b) {
  QuadraticForm q = a;
  q.entries.insert(q.entries.end(), b.entries.begin(), b.entries.end());
  return q;
}

QuadraticForm tensor(const QuadraticForm& a, const QuadraticForm& b) {
  QuadraticForm q{a.field, {}};
  for (const auto& x : a.entries)
    for (const auto& y : b.entries) q.entries.push_back(a.field.mul(x, y));
  return q;
}

std::vector<Presentation> presentations(const FieldDescriptor& k, const Rational& a) {
  return {Presentation::bsl2n(1, k), Presentation::bsl2n(3, k), Presentation::bn(k), Presentation::bnn(2, k),
          Presentation::twisted_point(QuadExtContext(k, a))};
}

}  // namespace

TEST_CASE("canonicalization is a congruence") {
  Rng rng(11);
  for (const auto& f : all_fields()) {
    for (int trial = 0; trial < 60; ++trial) {
      QuadraticForm a = random_form(f, rng, 4), b = random_form(f, rng, 3);
      INFO(f.tag() << " trial " << trial);
      WittClass wa = witt_class(a), wb = witt_class(b);
      CHECK(witt_class(direct_sum(a, b)) == wa + wb);
      CHECK(witt_class(tensor(a, b)) == wa * wb);
      // idempotent: the representative canonicalizes to itself
      CHECK(witt_class(wa.representative()) == wa);
      CHECK(witt_class(wa.representative()).entries() == wa.entries());
    }
  }
}

TEST_CASE("hyperbolic absorption") {
  Rng rng(12);
  for (const auto& f : all_fields()) {
    for (int trial = 0; trial < 200; ++trial) {
      QuadraticForm q = random_form(f, rng, 3);
      FieldElement c = random_unit(f, rng);
      QuadraticForm padded = q;
      padded.entries.push_back(c);
      padded.entries.push_back(f.neg(c));
      INFO(f.tag());
      CHECK(witt_class(padded) == witt_class(q));
    }
  }
}

TEST_CASE("zero classes over R and Q") {
  Rng rng(13);
  const auto R = FieldDescriptor::reals();
  for (int trial = 0; trial < 200; ++trial) {
    WittClass x = random_witt(R, rng, 5);
    CHECK(x.is_zero() == (signatures(x).front() == 0));
  }
  const auto Q = FieldDescriptor::rationals();
  for (int trial = 0; trial < 300; ++trial) {
    WittClass x = random_witt(Q, rng, 4) - random_witt(Q, rng, 4);
    RationalInvariants inv = rational_invariants(x);
    CHECK(x.is_zero() == (inv.signature == 0 && inv.residues.empty() && !inv.dyadic));
  }
}

TEST_CASE("projection formula and Lam triangle on samples") {
  Rng rng(14);
  for (const auto& [base, a] : std::vector<std::pair<const char*, long>>{{"Q", 2}, {"Q", -1}, {"Q", 3}, {"F5", 2}, {"F7", 3}, {"R", -1}}) {
    QuadExtContext ctx(parse_field(base), a);
    for (int trial = 0; trial < 200; ++trial) {
      WittClass b = random_witt(ctx.base(), rng, 3);
      WittClass x = random_witt(ctx.ext(), rng, 2);
      INFO(base << " a=" << a);
      CHECK(transfer(base_change(b, ctx) * x, ctx) == b * transfer(x, ctx));
      CHECK(scaled_transfer(base_change(b, ctx), ctx).is_zero());
      CHECK(in_Ia(transfer(x, ctx), ctx));
    }
  }
}

TEST_CASE("ring laws on 1000 triples per presentation") {
  Rng rng(15);
  for (const auto& [tag, a] : std::vector<std::pair<const char*, long>>{{"Q", -1}, {"F5", 2}}) {
    for (const auto& pres : presentations(parse_field(tag), a)) {
      INFO(pres.name() << " over " << tag);
      const GradedElement one = GradedElement::integer(pres, 1);
      for (int trial = 0; trial < 1000; ++trial) {
        GradedElement x = random_element(pres, rng), y = random_element(pres, rng), z = random_element(pres, rng);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * y == y * x);
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x + y == y + x);
        REQUIRE((x - x).is_zero());
        REQUIRE(one * x == x);
      }
    }
  }
}

TEST_CASE("normal form is idempotent and a congruence") {
  Rng rng(16);
  const auto Q = FieldDescriptor::rationals();
  for (const auto& pres : presentations(Q, -1)) {
    std::uniform_int_distribution<int> exp(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
      // unreduced monomials go through the rewriting rules
      GradedElement raw(pres), u(pres), v(pres);
      Monomial mu(pres.monomial_size()), mv(pres.monomial_size());
      for (auto& e : mu) e = exp(rng);
      for (auto& e : mv) e = exp(rng);
      WittClass cu = random_witt(Q, rng, 2), cv = random_witt(Q, rng, 2);
      u.add_term(mu, cu);
      v.add_term(mv, cv);
      Monomial sum(mu.size());
      for (std::size_t i = 0; i < mu.size(); ++i) sum[i] = mu[i] + mv[i];
      raw.add_term(sum, cu * cv);
      CHECK(raw == u * v);
      GradedElement again(pres);
      for (const auto& [m, c] : u.terms()) again.add_term(m, c);
      CHECK(again == u);
    }
  }
}

TEST_CASE("localization respects equality") {
  Rng rng(17);
  const auto Q = FieldDescriptor::rationals();
  for (const auto& pres : {Presentation::bsl2n(2, Q), Presentation::bn(Q)}) {
    const GradedElement s = pres.kind() == PresentationKind::BSL2n ? e_star(2, Q)
                                                                    : GradedElement::generator(pres, "e");
    for (int trial = 0; trial < 100; ++trial) {
      GradedElement x = random_element(pres, rng);
      GradedElement y = x + random_element(pres, rng) * GradedElement(pres);
      REQUIRE(x == y);
      CHECK(loc_eq(localize(x, s), localize(y, s)));
      CHECK(loc_eq(LocalizedElement(x * s, s, 1), localize(x, s)));
    }
    auto inv = localize(s, s).inverse();
    REQUIRE(inv);
    CHECK(inv->exponent() == 1);
    CHECK(loc_eq(*inv * localize(s, s), LocalizedElement(GradedElement::integer(pres, 1), s, 0)));
  }
}

TEST_CASE("euler classes are multiplicative") {
  Rng rng(18);
  const auto Q = FieldDescriptor::rationals();
  const int n = 3;
  std::uniform_int_distribution<int> factor(1, n), m(0, 5), pick(0, 3);
  auto random_rep = [&] {
    RepSum r = RepSum::sl2n(n);
    int terms = 1 + pick(rng) % 3;
    for (int t = 0; t < terms; ++t) {
      int i = factor(rng), j = factor(rng);
      if (pick(rng) == 0 && i != j) r.add(SL2nIrrep::tensor(i, j));
      else r.add(SL2nIrrep::sym(i, 2 * (m(rng) / 2) + 1));
    }
    return r;
  };
  for (int trial = 0; trial < 500; ++trial) {
    RepSum a = random_rep(), b = random_rep();
    EulerClassValue ea = euler_rep(a, Q), eb = euler_rep(b, Q), eab = euler_rep(a + b, Q);
    REQUIRE(ea.value);
    REQUIRE(eb.value);
    REQUIRE(eab.value);
    CHECK(*eab.value == *ea.value * *eb.value);
    CHECK(eab.known_square == *eab.value * *eab.value);
  }
  // N: squares are always multiplicative, values whenever both are determined
  std::uniform_int_distribution<int> rho(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    RepSum a = RepSum::n_group(), b = RepSum::n_group();
    a.add(NIrrep::rho(rho(rng)));
    b.add(NIrrep::rho(rho(rng)));
    if (pick(rng) == 0) b.add(NIrrep::rho0_minus());
    EulerClassValue ea = euler_rep(a, Q), eb = euler_rep(b, Q), eab = euler_rep(a + b, Q);
    CHECK(eab.known_square == ea.known_square * eb.known_square);
    if (ea.value && eb.value && eab.value && eab.determinacy == Determinacy::Exact)
      CHECK(*eab.value == *ea.value * *eb.value);
  }
}

TEST_CASE("euler vanishing and antisymmetry") {
  const auto Q = FieldDescriptor::rationals();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      auto eij = euler_sl2n_irrep(SL2nIrrep::tensor(i, j), 3, Q);
      auto eji = euler_sl2n_irrep(SL2nIrrep::tensor(j, i), 3, Q);
      CHECK(*eij.value == -*eji.value);
    }
  for (int m1 = 0; m1 <= 4; m1 += 2)
    for (int m2 = 0; m2 <= 4; m2 += 2) {
      SL2nIrrep r{{{1, m1}, {2, m2}}};
      CHECK(euler_sl2n_irrep(r, 2, Q).value->is_zero());
    }
}

TEST_CASE("residues do not depend on component order") {
  Rng rng(19);
  const auto Q = FieldDescriptor::rationals();
  std::vector<LocalizationProblem> problems{build_grassmannian_problem(2, 6, 3, Q), build_grassmannian_problem(3, 7, 3, Q),
                                            build_grassmannian_problem(4, 8, 4, Q), build_projective_problem(5, 3, Q)};
  for (auto p : problems) {
    ResidueResult ref = bott_residue(p);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(p.components.begin(), p.components.end(), rng);
      ResidueResult r = bott_residue(p);
      CHECK(loc_eq(r.value, ref.value));
      REQUIRE(r.degree_zero.has_value() == ref.degree_zero.has_value());
      if (r.degree_zero) CHECK(*r.degree_zero == *ref.degree_zero);
    }
  }
}

TEST_CASE("empty fixed locus gives zero") {
  const auto Q = FieldDescriptor::rationals();
  for (int n = 1; n <= 4; ++n) {
    LocalizationProblem p = build_grassmannian_problem(3, 2 * n + 2, n + 1, Q);
    REQUIRE(p.components.empty());
    ResidueResult r = bott_residue(p);
    REQUIRE(r.cleared);
    CHECK(r.cleared->is_zero());
  }
  LocalizationProblem none{{{GroupKind::N, 1}, Q}, {}, 3};
  CHECK(bott_residue(none).value.numerator().is_zero());
}

TEST_CASE("self-intersection residue is one") {
  const auto Q = FieldDescriptor::rationals();
  GroupDescriptor g{{GroupKind::SL2n, 3}, Q};
  for (auto p : {build_grassmannian_problem(2, 6, 3, Q), build_projective_problem(6, 3, Q)})
    for (auto c : p.components) {
      c.restricted = c.normal;
      LocalizedElement r = component_residue(c, p.group);
      CHECK(loc_eq(r, LocalizedElement(GradedElement::integer(r.presentation(), 1), r.inverted(), 0)));
    }
  GroupDescriptor gn{{GroupKind::N, 1}, Q};
  for (long a : {2L, -1L, 3L}) {
    FixedComponent c{"T", ResidueKind::TwistedPoint, QuadExtContext(Q, a), RepSum::n_group(), RepSum::n_group(), {}, {}};
    c.normal.add(NIrrep::rho(1), 2);
    c.restricted = c.normal;
    LocalizedElement r = component_residue(c, gn);
    CHECK(loc_eq(r, LocalizedElement(GradedElement::integer(r.presentation(), 1), r.inverted(), 0)));
  }
}

TEST_CASE("twisted pushforward") {
  Rng rng(20);
  for (const auto& [base, a] : std::vector<std::pair<const char*, long>>{{"Q", 2}, {"Q", -1}, {"F5", 2}, {"F7", 3}}) {
    const auto k = parse_field(base);
    QuadExtContext ctx(k, a);
    Presentation tw = Presentation::twisted_point(ctx), bn = Presentation::bn(k);
    GradedElement trace_form = GradedElement::scalar(bn, WittClass::unit(k, k.element(2))) +
                               GradedElement::term(bn, {1, 0}, WittClass::unit(k, k.element(2 * a)));
    for (int trial = 0; trial < 200; ++trial) {
      GradedElement beta = random_element(bn, rng), alpha = random_element(tw, rng);
      INFO(base << " a=" << a);
      CHECK(twisted_pushforward(restrict_to_twisted(beta, ctx) * alpha) == beta * twisted_pushforward(alpha));
      CHECK(twisted_pushforward(restrict_to_twisted(beta, ctx)) == trace_form * beta);
    }
  }
}
