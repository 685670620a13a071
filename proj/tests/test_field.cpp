#include <doctest.h>

#include "test_util.hpp"

using namespace wloc;
using testutil::code_of;

TEST_CASE("field construction and tags") {
  CHECK(parse_field("Q").tag() == "Q");
  CHECK(parse_field("R").tag() == "R");
  CHECK(parse_field("Fp:7").tag() == "Fp:7");
  CHECK(parse_field("F7") == parse_field("Fp:7"));
  CHECK(parse_field("Q(sqrt:2)").tag() == "Q(sqrt:2)");
  CHECK(parse_field("Q(sqrt:-1)").orderings() == 0);
  CHECK(parse_field("Q(sqrt:3)").orderings() == 2);
  CHECK(parse_field("Fp:5(sqrt:2)").is_finite());
  CHECK(parse_field("R(sqrt:-1)").is_complex());
  CHECK(code_of([] { FieldDescriptor::finite_prime(9); }) == ErrorCode::UnsupportedField);
  CHECK(code_of([] { FieldDescriptor::finite_prime(2); }) == ErrorCode::UnsupportedField);
  CHECK(code_of([] { parse_field("Q(sqrt:4)"); }).has_value());
  CHECK(code_of([] { parse_field("Fp:5(sqrt:4)"); }).has_value());
  CHECK(code_of([] { parse_field("Q(sqrt:2)(sqrt:3)"); }).has_value());
  CHECK(code_of([] { parse_field("Z"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("arithmetic in k(sqrt a)") {
  auto f = parse_field("Q(sqrt:2)");
  FieldElement s = f.sqrt_generator();
  CHECK(f.mul(s, s) == f.element(2));
  FieldElement x = parse_scalar("1+2*sqrt", f);
  CHECK(x == f.element(1, 2));
  CHECK(f.norm(x) == -7);
  CHECK(f.mul(x, f.inv(x)) == f.one());
  CHECK(f.is_square(f.element(3, 2)));  // (1 + sqrt 2)^2
  CHECK_FALSE(f.is_square(f.element(3)));
  CHECK(f.is_square(f.element(2)));
  CHECK(parse_scalar("-1/2", f) == f.element(Rational(-1, 2)));
}

TEST_CASE("finite fields") {
  auto f = FieldDescriptor::finite_prime(7);
  CHECK(f.element(-1) == f.element(6));
  CHECK(f.is_square(f.element(2)));
  CHECK_FALSE(f.is_square(f.element(3)));
  CHECK(f.canonical_nonsquare() == f.element(3));
  auto g = parse_field("Fp:3(sqrt:-1)");
  CHECK(g.is_square(g.element(2)));  // every element of F_3 is a square in F_9
  CHECK_FALSE(g.is_square(g.canonical_nonsquare()));
}

TEST_CASE("square classes") {
  auto Q = FieldDescriptor::rationals();
  CHECK(Q.same_square_class(Q.element(2), Q.element(8)));
  CHECK(Q.square_class_rep(Q.element(Rational(3, 4))) == Q.element(3));
  auto R = FieldDescriptor::reals();
  CHECK(R.same_square_class(R.element(5), R.element(Rational(1, 3))));
  CHECK_FALSE(R.same_square_class(R.element(5), R.element(-1)));
}
