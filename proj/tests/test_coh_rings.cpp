#include <doctest.h>

#include "test_util.hpp"

using namespace wloc;
using testutil::code_of;
using testutil::W;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

GradedElement R(const char* text, const Presentation& p) { return parse_ring(text, p); }

}  // namespace

TEST_CASE("BN relations") {
  auto bn = Presentation::bn(Q);
  CHECK(R("(1 + x)*e", bn).is_zero());
  CHECK(R("x^2", bn) == R("1", bn));
  CHECK(R("x*e", bn) == R("-e", bn));
  CHECK(R("x*e^3 + e^3", bn).is_zero());
  CHECK(R("x", bn).degree() == 0);
  CHECK(R("e^2", bn).degree() == 4);
  CHECK(code_of([&] { R("x*e + e2", bn); }) == ErrorCode::UnknownGenerator);
}

TEST_CASE("BSL2n products and e_*") {
  auto b2 = Presentation::bsl2n(2, Q);
  GradedElement p = R("e1*e2", b2);
  CHECK(p.degree() == 4);
  CHECK(p.terms().size() == 1);
  CHECK(e_star(1, Q) == R("e", Presentation::bsl2n(1, Q)));
  CHECK(e_star(2, Q) == R("e1*e2*(e2 - e1)", b2));
  auto b3 = Presentation::bsl2n(3, Q);
  CHECK(e_star(3, Q) == R("e1*e2*e3*(e2 - e1)*(e3 - e1)*(e3 - e2)", b3));
  CHECK(e_star(3, Q).degree() == 2 * 3 + 3 * 2);
  CHECK(code_of([&] { R("e1", b2) * R("e", Presentation::bn(Q)); }) == ErrorCode::PresentationMismatch);
}

TEST_CASE("twisted point relations") {
  QuadExtContext ctx(Q, 2);
  auto tw = Presentation::twisted_point(ctx);
  CHECK(R("y*y", tw) == GradedElement::scalar(tw, integer_class(2, Q) * ctx.one_minus_a()));
  CHECK(R("y^2*e", tw) == R("4*e", tw));
  CHECK(R("x", tw) == GradedElement::scalar(tw, ctx.radicand_class()));
  CHECK(R("x*e", tw) == R("-e", tw));
  // <1> + <a> lies in I_a
  CHECK(R("(<1> + <2>)*y", tw).is_zero());
  CHECK(R("(<1> + <2>)*e^2", tw).is_zero());
  CHECK_FALSE(R("(<1> + <2>)", tw).is_zero());
}

TEST_CASE("twisted module") {
  auto mod = Presentation::bn_twisted_module(Q);
  CHECK(R("x*eT", mod) == R("-eT", mod));
  CHECK(R("e*eT", mod).degree() == 4);
  CHECK(code_of([&] { R("eT*eT", mod); }).has_value());
}

TEST_CASE("kunneth") {
  auto b1 = Presentation::bsl2n(1, Q);
  CHECK(kunneth({R("e", b1), R("e", b1)}) == R("e1*e2", Presentation::bsl2n(2, Q)));
  auto bn = Presentation::bn(Q);
  CHECK(kunneth({R("x", bn), R("x", bn)}) == R("x1*x2", Presentation::bnn(2, Q)));
  CHECK(kunneth({R("1", b1), R("e^2 + <3>", b1)}) == R("e2^2 + <3>", Presentation::bsl2n(2, Q)));
  CHECK(R("x1^2", Presentation::bnn(2, Q)) == R("1", Presentation::bnn(2, Q)));
}

TEST_CASE("n_loc_multiplier") {
  CHECK(n_loc_multiplier({{5, OrbitType::A}}) == 1);
  CHECK(n_loc_multiplier({{4, OrbitType::B}}) == 4);
  CHECK(n_loc_multiplier({{3, OrbitType::CMinus}, {4, OrbitType::B}}) == 12);
  CHECK(n_loc_multiplier({{3, OrbitType::CPlus}}) == 3);
  CHECK(code_of([] { n_loc_multiplier({{0, OrbitType::B}}); }) == ErrorCode::NonPositiveExponent);
}

TEST_CASE("localization") {
  auto bn = Presentation::bn(Q);
  GradedElement e = R("e", bn);
  CHECK(loc_eq(localize(R("x", bn), e), localize(R("-1", bn), e)));
  CHECK(loc_eq(localize(R("1 + x", bn), e), localize(R("0", bn), e)));
  QuadExtContext ctx(Q, 2);
  auto tw = Presentation::twisted_point(ctx);
  CHECK(loc_eq(localize(R("(<1> + <2>)*e", tw), R("e", tw)), localize(R("0", tw), R("e", tw))));
  LocalizedElement s = localize(e, e);
  auto inv = s.inverse();
  REQUIRE(inv);
  CHECK(inv->exponent() == 1);
  CHECK(loc_eq(s * *inv, localize(R("1", bn), e)));
  CHECK(code_of([&] { localize(R("1", bn), R("e + 1", bn)); }) == ErrorCode::NonHomogeneousDenominator);
  // clearing
  LocalizedElement q(R("e^3", bn), e, 2);
  REQUIRE(q.cleared());
  CHECK(*q.cleared() == e);
  CHECK_FALSE(LocalizedElement(R("1", bn), e, 1).cleared());
}

TEST_CASE("exact division") {
  auto b2 = Presentation::bsl2n(2, Q);
  GradedElement f = R("e1^3*e2 - e1*e2^3", b2);
  auto q = exact_divide(f, R("e1*e2", b2));
  REQUIRE(q);
  CHECK(*q == R("e1^2 - e2^2", b2));
  CHECK_FALSE(exact_divide(R("e1^2 + e2", b2), R("e1", b2)));
}
